#include "wlp/sympoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wlp {

std::string Variable::str() const {
  return "x_{" + std::to_string(prop) + "," + std::to_string(vertex) + "}";
}

Monomial Monomial::variable(Variable v) {
  Monomial m;
  m.factors_.push_back({v, 1});
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

bool Monomial::squarefree() const {
  for (const auto& [v, e] : factors_) {
    if (e > 1) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  size_t ia = 0, ib = 0;
  while (ia < factors_.size() || ib < rhs.factors_.size()) {
    if (ib == rhs.factors_.size() ||
        (ia < factors_.size() && factors_[ia].first < rhs.factors_[ib].first)) {
      out.factors_.push_back(factors_[ia++]);
    } else if (ia == factors_.size() ||
               rhs.factors_[ib].first < factors_[ia].first) {
      out.factors_.push_back(rhs.factors_[ib++]);
    } else {
      out.factors_.push_back(
          {factors_[ia].first, factors_[ia].second + rhs.factors_[ib].second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& m) const {
  size_t im = 0;
  for (const auto& [v, e] : factors_) {
    while (im < m.factors_.size() && m.factors_[im].first < v) ++im;
    if (im == m.factors_.size() || m.factors_[im].first != v ||
        m.factors_[im].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  Monomial out;
  size_t it = 0;
  for (const auto& [v, e] : m.factors_) {
    int sub = 0;
    while (it < factors_.size() && factors_[it].first < v) ++it;
    if (it < factors_.size() && factors_[it].first == v) sub = factors_[it].second;
    if (e < sub) throw std::invalid_argument("monomial does not divide");
    if (e > sub) out.factors_.push_back({v, e - sub});
  }
  return out;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
  size_t ia = 0, ib = 0;
  while (ia < a.factors_.size() && ib < b.factors_.size()) {
    if (a.factors_[ia].first < b.factors_[ib].first) return 1;
    if (b.factors_[ib].first < a.factors_[ia].first) return -1;
    if (a.factors_[ia].second != b.factors_[ib].second)
      return a.factors_[ia].second > b.factors_[ib].second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia < a.factors_.size()) return 1;
  if (ib < b.factors_.size()) return -1;
  return 0;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

SparsePolynomial::SparsePolynomial(long long c) {
  if (c != 0) terms_[Monomial{}] = c;
}

SparsePolynomial::SparsePolynomial(const Coefficient& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

SparsePolynomial SparsePolynomial::variable(Variable v) {
  SparsePolynomial p;
  p.terms_[Monomial::variable(v)] = 1;
  return p;
}

bool SparsePolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second == 1;
}

bool SparsePolynomial::is_plus_minus_one() const {
  if (terms_.size() != 1 || !terms_.begin()->first.is_unit()) return false;
  const Coefficient& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

int SparsePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() != d) return false;
  }
  return true;
}

void SparsePolynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
  SparsePolynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
  SparsePolynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
  SparsePolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool started = false;
  auto emit = [&](const Monomial& m, const Coefficient& c) {
    Coefficient mag = c < 0 ? Coefficient(-c) : c;
    if (!started) {
      if (c < 0) out << "-";
      started = true;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (m.is_unit()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << m.str();
    }
  };
  for (const auto& [m, c] : terms_) {
    if (c > 0) emit(m, c);
  }
  for (const auto& [m, c] : terms_) {
    if (c < 0) emit(m, c);
  }
  return out.str();
}

SymbolicMatrix::SymbolicMatrix(const WilsonLoopDiagram& w,
                               std::vector<Propagator> row_order)
    : n_(w.vertex_count()), order_(std::move(row_order)) {
  std::vector<Propagator> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != w.propagators())
    throw std::invalid_argument("row order must be a permutation of the propagators");
}

bool SymbolicMatrix::has_entry(int row, int vertex) const {
  if (row < 1 || row > rows() || vertex < 1 || vertex > n_)
    throw std::invalid_argument("matrix index out of range");
  return supports_vertex(order_[row - 1], vertex, n_);
}

Variable SymbolicMatrix::entry(int row, int vertex) const {
  if (!has_entry(row, vertex))
    throw std::invalid_argument("entry is structurally zero");
  return Variable{row, vertex};
}

SymbolicMatrix c_matrix(const WilsonLoopDiagram& w,
                        const std::vector<Propagator>& row_order) {
  return SymbolicMatrix(w, row_order);
}

SparsePolynomial minor_det(const SymbolicMatrix& m, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor needs equally many rows and columns");
  const int size = static_cast<int>(rows.size());
  for (int r : rows) {
    if (r < 1 || r > m.rows()) throw std::invalid_argument("row out of range");
  }
  for (int c : cols) {
    if (c < 1 || c > m.cols()) throw std::invalid_argument("column out of range");
  }
  SparsePolynomial out;
  if (size == 0) return SparsePolynomial(1);

  std::vector<int> pick(size, -1);
  std::vector<char> used(size, 0);
  auto rec = [&](auto&& self, int r) -> void {
    if (r == size) {
      int inversions = 0;
      for (int x = 0; x < size; ++x) {
        for (int y = x + 1; y < size; ++y) {
          if (pick[x] > pick[y]) ++inversions;
        }
      }
      Monomial mono;
      for (int x = 0; x < size; ++x)
        mono = mono * Monomial::variable(m.entry(rows[x], cols[pick[x]]));
      out.add_term(mono, inversions % 2 == 0 ? 1 : -1);
      return;
    }
    for (int c = 0; c < size; ++c) {
      if (used[c] || !m.has_entry(rows[r], cols[c])) continue;
      used[c] = 1;
      pick[r] = c;
      self(self, r + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<SparsePolynomial> exact_divide(const SparsePolynomial& f,
                                             const SparsePolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  SparsePolynomial rem = f;
  SparsePolynomial quot;
  const auto& gt = *g.terms().rbegin();  // leading term of g
  while (!rem.is_zero()) {
    const auto& ft = *rem.terms().rbegin();
    if (!gt.first.divides(ft.first)) return std::nullopt;
    if (ft.second % gt.second != 0) return std::nullopt;
    SparsePolynomial t;
    t.add_term(gt.first.quotient_of(ft.first), ft.second / gt.second);
    quot = quot + t;
    rem = rem - t * g;
  }
  return quot;
}

SparsePolynomial FactoredPolynomial::expand() const {
  SparsePolynomial out(sign);
  for (const auto& [f, mult] : factors) {
    for (int t = 0; t < mult; ++t) out = out * f;
  }
  return out;
}

int FactoredPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [f, mult] : factors) d += f.total_degree() * mult;
  return d;
}

std::string FactoredPolynomial::str() const {
  std::string out = sign < 0 ? "-" : "";
  if (factors.empty()) return out + "1";
  bool first = true;
  for (const auto& [f, mult] : factors) {
    if (!first) out += "*";
    first = false;
    const bool wrap = f.term_count() > 1;
    std::string body = wrap ? "(" + f.str() + ")" : f.str();
    out += body;
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

}  // namespace wlp
