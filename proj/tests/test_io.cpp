#include <doctest.h>

#include "dellac/json_io.hpp"
#include "dellac/render.hpp"
#include "dellac/verify.hpp"

using namespace dellac;

TEST_CASE("tableau JSON round trip") {
  const Tableau t(1, {1, 0, 1});
  const json j = tableau_to_json(t, Kind::odd_extended);
  CHECK(j.dump() == R"({"kind":"to","n":1,"rows":[1,null,1]})");
  const KindedTableau back = tableau_from_json(j);
  CHECK(back.kind == Kind::odd_extended);
  CHECK(back.tableau == t);
}

TEST_CASE("malformed or invalid tableau JSON is rejected") {
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"kind":"dc","n":1})")), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"kind":"dc","n":1,"rows":[1]})")), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"kind":"dc","n":1,"rows":[1,2]})")), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"kind":"dc","n":2,"rows":[2,1,1,2]})")), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"kind":"zz","n":1,"rows":[1,1]})")), std::invalid_argument);
}

TEST_CASE("labels JSON") {
  const json j = json::parse(R"({"kind":"te","n":2,"rows":[1,1,2,2],"free_labels":{"2:3":1,"2:4":0}})");
  const LabeledExtended l = labeled_from_json(j);
  CHECK(l.labels == std::vector<std::pair<Box, int>>{{{2, 3}, 1}, {{2, 4}, 0}});
  CHECK(labeled_to_json(l, Kind::even_extended) == j);
  json missing = j;
  missing["free_labels"].erase("2:4");
  CHECK_THROWS_AS(labeled_from_json(missing), std::invalid_argument);
  json extra = j;
  extra["free_labels"]["1:1"] = 0;
  CHECK_THROWS_AS(labeled_from_json(extra), std::invalid_argument);
}

TEST_CASE("polynomials and numbers serialize as decimal strings") {
  CHECK(poly_to_json(Poly{5, 10, 6}).dump() == R"(["5","10","6"])");
  CHECK(rational_to_json(Rational(3, 4)) == "3/4");
  CHECK(rational_to_json(Rational(46)) == "46");
  CHECK(bigint_to_json(pow2(80)) == "1208925819614629174706176");
}

TEST_CASE("CSV rows") {
  CHECK(tableau_csv_header(3) == "kind,n,r1,r2,r3");
  CHECK(tableau_to_csv(Tableau(1, {1, 0, 1}), Kind::odd_extended) == "to,1,1,,1");
}

TEST_CASE("X and l JSON") {
  CHECK(boxes_from_json(json::parse(R"(["2:6","3:10"])")) == std::vector<Box>{{2, 6}, {3, 10}});
  const LabelFunction l{{2, ColumnWord::bg}, {3, ColumnWord::b}};
  CHECK(label_function_to_json(l).dump() == R"({"2":"bg","3":"b"})");
  CHECK(label_function_from_json(label_function_to_json(l)) == l);
}

TEST_CASE("SVG rendering") {
  RenderSpec s;
  s.tableau = Tableau(1, {1, 1});
  s.kind = Kind::dellac;
  const std::string svg = render_svg(s);
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t dots = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++dots;
  CHECK(dots == 2);
  CHECK(svg == render_svg(s));

  RenderSpec t;
  t.tableau = Tableau(7, {1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4});
  t.kind = Kind::even_extended;
  t.overlay = Overlay::paths;
  const std::string paths = render_svg(t);
  for (const char* colour : {"blue", "red", "green", "#40e0d0", "#ffcba4"})
    CHECK(paths.find(std::string("stroke=\"") + colour + "\"") != std::string::npos);
  t.overlay = Overlay::labels;
  CHECK(render_svg(t).find("<text") != std::string::npos);

  s.tableau = Tableau(2, {2, 1, 1, 2});
  CHECK_THROWS_AS(render_svg(s), std::invalid_argument);
  CHECK_THROWS(parse_overlay("arrows"));
}

TEST_CASE("verify suites report and never throw on failure") {
  VerifyBounds b;
  b.max_n = 3;
  const VerifyReport r = run_suite("sequences", b);
  CHECK_FALSE(r.checks.empty());
  CHECK(r.passed());
  CHECK(to_json(r)["suite"] == "sequences");
  CHECK_THROWS_AS(run_suite("nope", b), std::invalid_argument);
  CHECK(run_suite("anchors", b).passed());
  CHECK(run_suite("poincare", b).passed());
}
