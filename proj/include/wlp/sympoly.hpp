#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlp/diagram.hpp"

namespace wlp {

using Coefficient = boost::multiprecision::cpp_int;

/// One nonzero entry position of the interaction matrix: 1-based row (the
/// propagator's position in a fixed order) and vertex column.
struct Variable {
  int prop = 0;
  int vertex = 0;

  auto operator<=>(const Variable&) const = default;
  std::string str() const;
};

/// Power product of variables, kept sorted with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(Variable v);

  bool is_unit() const { return factors_.empty(); }
  int total_degree() const;
  bool squarefree() const;
  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& m) const;
  Monomial quotient_of(const Monomial& m) const;  // m / *this

  bool operator==(const Monomial&) const = default;

  /// Lexicographic order with earlier variables dominant: positive iff a > b.
  static int lex_cmp(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_cmp(a, b) < 0;
  }
};

/// Exact-integer multivariate polynomial; no zero coefficients are stored and
/// the term map is ordered, so equality is structural.
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Coefficient, MonomialLexLess>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(long long c);
  explicit SparsePolynomial(const Coefficient& c);
  static SparsePolynomial variable(Variable v);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_plus_minus_one() const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Coefficient& c);

  SparsePolynomial operator-() const;
  SparsePolynomial operator+(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-(const SparsePolynomial& rhs) const;
  SparsePolynomial operator*(const SparsePolynomial& rhs) const;

  bool operator==(const SparsePolynomial&) const = default;

  /// Deterministic rendering: positive terms then negative terms, each group
  /// in ascending monomial order; variables ascending inside a monomial.
  std::string str() const;

 private:
  TermMap terms_;
};

/// Zero pattern of the k x n interaction matrix for a fixed row order: the
/// entry in row p, column v is the variable x_{p,v} when v supports the
/// propagator of row p and zero otherwise.
class SymbolicMatrix {
 public:
  SymbolicMatrix(const WilsonLoopDiagram& w, std::vector<Propagator> row_order);

  int rows() const { return static_cast<int>(order_.size()); }
  int cols() const { return n_; }
  const std::vector<Propagator>& row_order() const { return order_; }

  bool has_entry(int row, int vertex) const;  // 1-based row
  Variable entry(int row, int vertex) const;

 private:
  int n_ = 1;
  std::vector<Propagator> order_;
};

SymbolicMatrix c_matrix(const WilsonLoopDiagram& w,
                        const std::vector<Propagator>& row_order);

/// Signed sum over bijections between the listed rows and columns, both taken
/// in the given sequence order; the identity pairing rows[r] -> cols[r]
/// carries sign +1.  Zero polynomial when no bijection survives the zero
/// pattern.
SparsePolynomial minor_det(const SymbolicMatrix& m, const std::vector<int>& rows,
                           const std::vector<int>& cols);

/// Remainder-free quotient f / g over the integers, or nothing.
std::optional<SparsePolynomial> exact_divide(const SparsePolynomial& f,
                                             const SparsePolynomial& g);

/// Product of named factors with multiplicities and an overall sign.
struct FactoredPolynomial {
  int sign = 1;
  std::vector<std::pair<SparsePolynomial, int>> factors;

  SparsePolynomial expand() const;
  int total_degree() const;
  std::string str() const;
};

}  // namespace wlp
