#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wlp/denominator.hpp"
#include "wlp/le_diagram.hpp"

namespace wlp {

/// Input did not match a documented schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagram interchange schema: {"n": <int>, "propagators": [[a,b], ...]} with
// 1-based edge indices.
nlohmann::json diagram_to_json(const WilsonLoopDiagram& w);
WilsonLoopDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json admissibility_to_json(const AdmissibilityReport& report);

// {"k":..., "n":..., "terms":[[...],...], "assignments":[[{"prop":[a,b],
// "vertex":v},...],...]}; terms and assignments follow the per-index order.
nlohmann::json necklace_to_json(const GrassmannNecklace& neck);

// {"row_labels":[...], "shape":[...], "plus_cells":[[row,col],...]}
nlohmann::json le_to_json(const LeDiagram& d);

nlohmann::json cmatrix_to_json(const SymbolicMatrix& m);

nlohmann::json report_to_json(const DenominatorReport& report);

}  // namespace wlp
