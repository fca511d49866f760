#include <doctest.h>

#include <set>

#include "dellac/enumerate.hpp"
#include "dellac/maps.hpp"
#include "dellac/verify.hpp"

using namespace dellac;

namespace {
const Tableau T1(7, {1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4});
const Tableau T3(6, {1, 1, 3, 4, 5, 5, 6, 6, 0, 4, 3, 2, 2});
}  // namespace

TEST_CASE("even expansion is a bijection onto SDC_2n") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const ExpandAudit a = audit_even_expand(n);
    CHECK(a.bijective());
    CHECK(a.sdc_count == count_configs(Kind::symmetric_dellac, 2 * n));
  }
}

TEST_CASE("odd expansion is a bijection onto SDC_2n+1") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(audit_odd_expand(n).bijective());
  }
}

TEST_CASE("reduce rejects non-symmetric input") {
  Tableau d;
  for (const Tableau& t : collect_configs(Kind::dellac, 4))
    if (!is_symmetric(t)) d = t;
  REQUIRE(d.width() == 4);
  CHECK_THROWS_AS(even_reduce(d), std::invalid_argument);
}

TEST_CASE("Pi on the example tableau") {
  const PiResult r = pi_forward(T1);
  CHECK(r.image == Tableau(6, {1, 1, 3, 4, 5, 2, 6, 6, 5, 3, 2, 4}));
  CHECK(r.X == std::vector<Box>{{2, 6}, {2, 11}, {3, 10}, {4, 12}});
  const PathReport rep = path_report(r.image);
  CHECK(rep.b == 3);
  CHECK(rep.r == 1);
  CHECK(rep.g == 1);
  CHECK(rep.max == 5);
}

TEST_CASE("Pi is total on small sizes") {
  for (int n = 2; n <= 4; ++n)
    enum_te(n, [&](const Tableau& t) {
      const PiResult r = pi_forward(t);
      CHECK(validate(r.image, Kind::even_extended, n - 1));
      CHECK(r.X.size() == static_cast<std::size_t>(path_report(t).max));
    });
}

TEST_CASE("Pi fibers reject X outside the proper subsets of Omax") {
  const Tableau t0(2, {1, 1, 2, 2});
  const auto omax = omax_set(path_report(t0));
  CHECK_THROWS_AS(pi_fiber(t0, omax), std::invalid_argument);
  const std::vector<Box> outside{{1, 1}};
  CHECK_THROWS_AS(pi_fiber(t0, outside), std::invalid_argument);
}

TEST_CASE("a fiber whose insertions collide") {
  // The S1 rules put b at (2:3) and r' at (2:5), leaving row 2 for column 3.
  const Tableau t0(2, {1, 2, 2, 1});
  const std::vector<Box> X{{2, 2}};
  CHECK_THROWS(pi_fiber(t0, X));
}

TEST_CASE("P on the example tableau and its inverse") {
  CHECK(p_forward(T1) == T3);
  const LabelFunction l{{2, ColumnWord::bg}, {3, ColumnWord::b}, {4, ColumnWord::r}};
  CHECK(label_function_of(T1) == l);
  CHECK(J_columns(path_report_odd(T3)) == std::vector<int>{2, 3, 4});
  CHECK(Jg_columns(path_report_odd(T3)) == std::vector<int>{2});
  CHECK(is_admissible(l, path_report_odd(T3)));
  CHECK(p_fiber(T3, l) == T1);
  // 2^(v-g) 3^g = 4 * 3
  CHECK(label_functions(T3).size() == 12);
}

TEST_CASE("P inserts a point the fiber rules cannot see") {
  const Tableau t(4, {1, 1, 3, 2, 2, 3, 4, 4});
  CHECK(path_report(t).max == 1);
  CHECK(p_forward(t) == Tableau(3, {1, 1, 3, 2, 3, 0, 2}));
}

TEST_CASE("p_fiber rejects labels outside L(T0)") {
  const LabelFunction partial{{2, ColumnWord::b}};
  const LabelFunction off_jg{{2, ColumnWord::b}, {3, ColumnWord::bg}, {4, ColumnWord::r}};
  CHECK_THROWS_AS(p_fiber(T3, partial), std::invalid_argument);
  CHECK_THROWS_AS(p_fiber(T3, off_jg), std::invalid_argument);
}

TEST_CASE("words print and parse") {
  for (ColumnWord w : {ColumnWord::b, ColumnWord::r, ColumnWord::br, ColumnWord::bg})
    CHECK(parse_word(word_name(w)) == w);
  CHECK_THROWS(parse_word("rg"));
}

TEST_CASE("insertion hits the requested root") {
  // T_1 restricted to its first six columns leaves rows for column 7.
  Tableau t = T1;
  t.clear(10);
  t.clear(11);
  const Box a = insert_point(t, 7, 14);
  CHECK(root(t, a.col, a.row) == 14);
}
