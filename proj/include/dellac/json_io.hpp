#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dellac/enumerate.hpp"
#include "dellac/maps.hpp"
#include "dellac/poly.hpp"
#include "dellac/stats.hpp"
#include "dellac/tableau.hpp"

namespace dellac {

using json = nlohmann::json;

// {"kind": "te", "n": 2, "rows": [1, 2, null, ...]}, rows bottom to top.
json tableau_to_json(const Tableau& t, Kind kind);
struct KindedTableau {
  Kind kind;
  Tableau tableau;
};
// Throws std::invalid_argument on malformed input; validity is checked too.
KindedTableau tableau_from_json(const json& j);

// Tableau fields plus {"free_labels": {"j:i": 0|1}}.
json labeled_to_json(const LabeledExtended& l, Kind kind);
LabeledExtended labeled_from_json(const json& j);

json boxes_to_json(const std::vector<Box>& v);  // ["j:i", ...]
std::vector<Box> boxes_from_json(const json& j);

json label_function_to_json(const LabelFunction& l);  // {"2": "bg", ...}
LabelFunction label_function_from_json(const json& j);

json path_report_to_json(const PathReport& rep);
json forward_labels_to_json(const std::map<Box, ForwardLabel>& labels);
json nu_labels_to_json(const std::map<Box, NuLabel>& labels);

json pistol_to_json(const SurjectivePistol& f);

// Ascending coefficients as decimal strings.
json poly_to_json(const Poly& p);
json bigint_to_json(const BigInt& v);     // decimal string
json rational_to_json(const Rational& v);  // "p/q" or "p"

std::string tableau_csv_header(int height);
std::string tableau_to_csv(const Tableau& t, Kind kind);  // kind,n,r1,...,rH (empty for null)

}  // namespace dellac
