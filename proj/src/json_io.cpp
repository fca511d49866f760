#include "dellac/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace dellac {

namespace {

int expected_height(Kind kind, int n) {
  switch (kind) {
    case Kind::dellac:
    case Kind::symmetric_dellac:
    case Kind::even_extended: return 2 * n;
    case Kind::odd_extended: return 2 * n + 1;
  }
  return 0;
}

}  // namespace

json tableau_to_json(const Tableau& t, Kind kind) {
  json rows = json::array();
  for (int c : t.rows()) {
    if (c == 0) rows.push_back(nullptr);
    else rows.push_back(c);
  }
  return {{"kind", kind_tag(kind)}, {"n", t.width()}, {"rows", rows}};
}

KindedTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("rows"))
    throw std::invalid_argument("tableau JSON needs kind, n and rows");
  const Kind kind = parse_kind(j.at("kind").get<std::string>());
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("n must be positive");
  const json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != expected_height(kind, n))
    throw std::invalid_argument("rows has the wrong length for this kind");
  std::vector<int> cols;
  for (const auto& r : rows) {
    if (r.is_null()) {
      cols.push_back(0);
    } else if (r.is_number_integer()) {
      const int c = r.get<int>();
      if (c < 1 || c > n) throw std::invalid_argument("column out of range: " + std::to_string(c));
      cols.push_back(c);
    } else {
      throw std::invalid_argument("row entries must be integers or null");
    }
  }
  Tableau t(n, std::move(cols));
  auto rep = validate(t, kind, n);
  if (!rep) throw std::invalid_argument("invalid tableau: " + rep.violation);
  return {kind, std::move(t)};
}

json labeled_to_json(const LabeledExtended& l, Kind kind) {
  json j = tableau_to_json(l.base, kind);
  json fl = json::object();
  for (const auto& [p, bit] : l.labels) fl[to_string(p)] = bit;
  j["free_labels"] = fl;
  return j;
}

LabeledExtended labeled_from_json(const json& j) {
  auto kt = tableau_from_json(j);
  if (kt.kind != Kind::even_extended && kt.kind != Kind::odd_extended)
    throw std::invalid_argument("labels only apply to te/to tableaux");
  LabeledExtended out{kt.tableau, {}};
  std::map<Box, int> given;
  if (j.contains("free_labels")) {
    for (const auto& [key, v] : j.at("free_labels").items()) {
      const int bit = v.get<int>();
      if (bit != 0 && bit != 1) throw std::invalid_argument("labels must be 0 or 1");
      given[parse_box(key)] = bit;
    }
  }
  for (const Box& p : free_points(out.base)) {
    auto it = given.find(p);
    if (it == given.end()) throw std::invalid_argument("missing label for free point " + to_string(p));
    out.labels.emplace_back(p, it->second);
    given.erase(it);
  }
  if (!given.empty()) throw std::invalid_argument("label on a non-free point " + to_string(given.begin()->first));
  return out;
}

json boxes_to_json(const std::vector<Box>& v) {
  json a = json::array();
  for (const Box& p : v) a.push_back(to_string(p));
  return a;
}

std::vector<Box> boxes_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of \"j:i\" strings");
  std::vector<Box> out;
  for (const auto& e : j) out.push_back(parse_box(e.get<std::string>()));
  return out;
}

json label_function_to_json(const LabelFunction& l) {
  json j = json::object();
  for (const auto& [col, w] : l) j[std::to_string(col)] = word_name(w);
  return j;
}

LabelFunction label_function_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected {\"j\": word}");
  LabelFunction out;
  for (const auto& [key, v] : j.items()) out[std::stoi(key)] = parse_word(v.get<std::string>());
  return out;
}

json path_report_to_json(const PathReport& rep) {
  if (rep.odd) {
    return {{"V", boxes_to_json(rep.V)}, {"G", boxes_to_json(rep.G)},
            {"v", rep.v}, {"g", rep.g}, {"fr", rep.fr}};
  }
  return {{"B", boxes_to_json(rep.B)},
          {"R", boxes_to_json(rep.R)},
          {"G", boxes_to_json(rep.G)},
          {"Bprime", boxes_to_json(rep.Bprime)},
          {"Rprime", boxes_to_json(rep.Rprime)},
          {"Gprime", boxes_to_json(rep.Gprime)},
          {"b", rep.b}, {"r", rep.r}, {"g", rep.g},
          {"bP", rep.bP}, {"rP", rep.rP}, {"gP", rep.gP},
          {"max", rep.max}, {"omax", rep.omax}, {"maxP", rep.maxP},
          {"fr", rep.fr}};
}

json forward_labels_to_json(const std::map<Box, ForwardLabel>& labels) {
  json j = json::object();
  for (const auto& [p, l] : labels) j[to_string(p)] = label_name(l);
  return j;
}

json nu_labels_to_json(const std::map<Box, NuLabel>& labels) {
  json j = json::object();
  for (const auto& [p, l] : labels) j[to_string(p)] = label_name(l);
  return j;
}

json pistol_to_json(const SurjectivePistol& f) {
  return {{"kind", "sp"}, {"n", f.n()}, {"values", f.values}};
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

json bigint_to_json(const BigInt& v) { return v.str(); }

json rational_to_json(const Rational& v) {
  std::ostringstream os;
  os << numerator(v);
  if (denominator(v) != 1) os << '/' << denominator(v);
  return os.str();
}

std::string tableau_csv_header(int height) {
  std::string s = "kind,n";
  for (int i = 1; i <= height; ++i) s += ",r" + std::to_string(i);
  return s;
}

std::string tableau_to_csv(const Tableau& t, Kind kind) {
  std::string s = std::string(kind_tag(kind)) + "," + std::to_string(t.width());
  for (int c : t.rows()) s += "," + (c == 0 ? std::string() : std::to_string(c));
  return s;
}

}  // namespace dellac
