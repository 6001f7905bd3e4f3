#pragma once

#include "gridgap/csp.hpp"
#include "gridgap/kcenter.hpp"
#include "gridgap/reduction.hpp"
#include "gridgap/verifier.hpp"

#include <json.hpp>

#include <string>

namespace gridgap {

using Json = nlohmann::ordered_json;

// CSP instances: {"kind": "geq-csp"|"leq-csp", "d", "N", "delta",
// "variables": [[int,...],...], "unary": [[[int,...],...],...]}
Json csp_to_json(const CspInstance& instance);
CspInstance csp_from_json(const Json& j);

// Point sets: {"kind": "kcenter", "d", "k", "r": "1/4", "epsilon": "p/q",
// "points": [{"label": {...}, "coords": ["p/q",...], "approx": [float,...]}]}.
// "approx" is advisory; loading reads "coords" only.
Json kcenter_to_json(const KCenterInstance& instance);
KCenterInstance kcenter_from_json(const Json& j);

Json label_to_json(const PointLabel& label);
PointLabel label_from_json(const Json& j);

Json solver_result_to_json(const KCenterInstance& instance, const std::string& method,
                           const CenterSet& centers, const Rational& opt_sq);

Json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

// Files are UTF-8, two-space indented, trailing newline; byte-identical for
// identical content.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace gridgap
