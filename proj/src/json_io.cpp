#include "wlp/json_io.hpp"

#include <algorithm>

namespace wlp {

using nlohmann::json;

json diagram_to_json(const WilsonLoopDiagram& w) {
  json props = json::array();
  for (const Propagator& p : w.propagators()) props.push_back({p.a, p.b});
  return {{"n", w.vertex_count()}, {"propagators", props}};
}

WilsonLoopDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("propagators"))
    throw SchemaError("diagram needs \"n\" and \"propagators\"");
  if (!j["n"].is_number_integer()) throw SchemaError("\"n\" must be an integer");
  if (!j["propagators"].is_array())
    throw SchemaError("\"propagators\" must be an array of pairs");
  const int n = j["n"].get<int>();
  std::vector<Propagator> props;
  for (const auto& entry : j["propagators"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw SchemaError("each propagator must be a pair of integers");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    if (a == b) throw SchemaError("propagator edges must be distinct");
    if (n < 1 || a < 1 || a > n || b < 1 || b > n)
      throw SchemaError("propagator edge out of range [1..n]");
    props.emplace_back(a, b);
  }
  return {n, props};
}

namespace {

json props_to_json(const std::vector<Propagator>& props) {
  json out = json::array();
  for (const Propagator& p : props) out.push_back({p.a, p.b});
  return out;
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::TooManyProps: return "TooManyProps";
    case ViolationKind::DenseSubset: return "DenseSubset";
    case ViolationKind::Crossing: return "Crossing";
  }
  return "?";
}

}  // namespace

json admissibility_to_json(const AdmissibilityReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"kind", kind_name(v.kind)},
                          {"witness", props_to_json(v.witness)}});
  }
  return {{"ok", report.ok}, {"violations", violations}};
}

json necklace_to_json(const GrassmannNecklace& neck) {
  json terms = json::array();
  for (const auto& t : neck.terms) terms.push_back(t);
  json assignments = json::array();
  for (int i = 1; i <= neck.n; ++i) {
    json per_term = json::array();
    std::vector<std::pair<int, Propagator>> rows;
    for (size_t t = 0; t < neck.props.size(); ++t)
      rows.push_back({neck.assigned[i - 1][t], neck.props[t]});
    std::sort(rows.begin(), rows.end(),
              [&](const auto& x, const auto& y) {
                return cyc_key(x.first, i, neck.n) < cyc_key(y.first, i, neck.n);
              });
    for (const auto& [v, p] : rows)
      per_term.push_back({{"prop", {p.a, p.b}}, {"vertex", v}});
    assignments.push_back(per_term);
  }
  return {{"k", neck.k}, {"n", neck.n}, {"terms", terms},
          {"assignments", assignments}};
}

json le_to_json(const LeDiagram& d) {
  json plus_cells = json::array();
  for (size_t r = 0; r < d.row_labels.size(); ++r) {
    for (int c = 0; c < d.shape[r]; ++c) {
      if (d.cells[r][c] == Cell::Plus)
        plus_cells.push_back({d.row_labels[r], d.col_labels[c]});
    }
  }
  return {{"row_labels", d.row_labels}, {"shape", d.shape},
          {"plus_cells", plus_cells}};
}

json cmatrix_to_json(const SymbolicMatrix& m) {
  json rows = json::array();
  for (int r = 1; r <= m.rows(); ++r) {
    json row = json::array();
    for (int v = 1; v <= m.cols(); ++v)
      row.push_back(m.has_entry(r, v) ? m.entry(r, v).str() : "0");
    rows.push_back(row);
  }
  return {{"k", m.rows()}, {"n", m.cols()},
          {"propagator_order", props_to_json(m.row_order())}, {"rows", rows}};
}

json report_to_json(const DenominatorReport& report) {
  json s_sets = json::array();
  for (const auto& s : report.s_sets) s_sets.push_back(props_to_json(s));
  json r_factors = json::array();
  for (const auto& r : report.r_factors) r_factors.push_back(r.str());
  json deltas = json::array();
  for (const auto& d : report.deltas) deltas.push_back(d.str());
  return {{"R_definition", report.r_definition.str()},
          {"R_necklace", report.r_necklace.str()},
          {"S_sets", s_sets},
          {"r_factors", r_factors},
          {"deltas", deltas},
          {"checks",
           {{"r_divides_delta", report.checks.r_divides_delta},
            {"products_equal", report.checks.products_equal},
            {"square_free", report.checks.square_free},
            {"radical_ok", report.checks.radical_ok}}},
          {"failures", report.failures}};
}

}  // namespace wlp
