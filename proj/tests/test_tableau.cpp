#include <doctest.h>

#include <stdexcept>

#include "dellac/tableau.hpp"

using namespace dellac;

TEST_CASE("boxes print and parse as j:i") {
  CHECK(to_string(Box{3, 12}) == "3:12");
  CHECK(parse_box("7:10") == Box{7, 10});
  CHECK_THROWS_AS(parse_box("7-10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_box("x:1"), std::invalid_argument);
}

TEST_CASE("kind tags round trip") {
  for (Kind k : {Kind::dellac, Kind::symmetric_dellac, Kind::even_extended, Kind::odd_extended})
    CHECK(parse_kind(kind_tag(k)) == k);
  CHECK_THROWS(parse_kind("xx"));
}

TEST_CASE("the unique DC_1 is valid and symmetric") {
  const Tableau d(1, {1, 1});
  CHECK(validate(d, Kind::dellac));
  CHECK(validate(d, Kind::symmetric_dellac));
  CHECK(rotate_pi(d) == d);
}

TEST_CASE("validate rejects each kind of violation") {
  CHECK(validate(Tableau(2, {1, 1, 2, 2}), Kind::dellac));
  // point below y = x
  CHECK_FALSE(validate(Tableau(2, {2, 1, 1, 2}), Kind::dellac));
  // three points in a column
  CHECK_FALSE(validate(Tableau(2, {1, 1, 1, 2}), Kind::even_extended));
  // above y = x + N is fine for te but not for dc
  const Tableau t(2, {1, 2, 2, 1});
  CHECK(validate(t, Kind::even_extended));
  CHECK_FALSE(validate(t, Kind::dellac));
  // empty row in dc
  CHECK_FALSE(validate(Tableau(2, {1, 1, 2, 0}), Kind::dellac));
  // width must match n
  CHECK_FALSE(validate(Tableau(2, {1, 1, 2, 2}), Kind::dellac, 3));
  auto rep = validate(Tableau(2, {2, 1, 1, 2}), Kind::dellac);
  CHECK_FALSE(rep.violation.empty());
}

TEST_CASE("odd extended configurations need one empty row in the top n+1") {
  CHECK(validate(Tableau(1, {1, 0, 1}), Kind::odd_extended));
  CHECK(validate(Tableau(1, {1, 1, 0}), Kind::odd_extended));
  CHECK_FALSE(validate(Tableau(1, {0, 1, 1}), Kind::odd_extended));
  CHECK(validate(Tableau(2, {1, 1, 2, 2, 0}), Kind::odd_extended));
}

TEST_CASE("rotation is an involution and detects symmetry") {
  const Tableau d(2, {1, 2, 1, 2});
  CHECK(validate(d, Kind::dellac));
  CHECK(rotate_pi(rotate_pi(d)) == d);
  CHECK(is_symmetric(d) == (rotate_pi(d) == d));
  const Tableau e(2, {1, 1, 2, 2});
  CHECK(is_symmetric(e));
}

TEST_CASE("free points follow i + j >= 2n + 1 (even) and 2n + 2 (odd)") {
  const Tableau t(2, {1, 1, 2, 2});  // rows 3, 4 hold (2:3), (2:4)
  CHECK(free_count(t) == 2);
  CHECK(free_points(t) == std::vector<Box>{{2, 3}, {2, 4}});
  const Tableau u(2, {1, 2, 2, 1});
  CHECK(free_count(u) == 2);
  CHECK(is_free(u, {2, 3}));
  CHECK(is_free(u, {1, 4}));
  CHECK_FALSE(is_free(u, {2, 2}));
  // T_1^o: (1:1), empty row 2, (1:3); 1 + 3 >= 4
  CHECK(free_count(Tableau(1, {1, 0, 1})) == 1);
  CHECK(free_count(Tableau(1, {1, 1, 0})) == 0);
}

TEST_CASE("empty row deletion and insertion") {
  const Tableau o(1, {1, 0, 1});
  CHECK(empty_row(o) == 2);
  const Tableau e = delete_empty_row(o);
  CHECK(e == Tableau(1, {1, 1}));
  CHECK(validate(e, Kind::even_extended));
  CHECK(insert_empty_row(e, 2) == o);
}

TEST_CASE("column index finds partners") {
  const Tableau t(2, {1, 2, 2, 1});
  const ColumnIndex ci(t);
  CHECK(ci.lower(1) == 1);
  CHECK(ci.upper(1) == 4);
  CHECK(ci.partner({2, 2}) == Box{2, 3});
  CHECK(ci.is_upper({2, 3}));
}
