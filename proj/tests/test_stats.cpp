#include <doctest.h>

#include "dellac/enumerate.hpp"
#include "dellac/poly.hpp"
#include "dellac/stats.hpp"
#include "dellac/verify.hpp"

using namespace dellac;

namespace {
const Tableau T1(7, {1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4});
const Tableau T3(6, {1, 1, 3, 4, 5, 5, 6, 6, 0, 4, 3, 2, 2});
}  // namespace

TEST_CASE("inversions need strictly left and strictly above") {
  const Tableau d(2, {1, 2, 1, 2});  // (1:3) is left of and above (2:2)
  const auto inv_set = inversions(d);
  REQUIRE(inv_set.size() == 1);
  CHECK(inv_set[0].first == Box{1, 3});
  CHECK(inv_set[0].second == Box{2, 2});
  CHECK(inv(Tableau(2, {1, 1, 2, 2})) == 0);
}

TEST_CASE("inversion statistics on symmetric configurations") {
  for_each_config(Kind::symmetric_dellac, 4, [](const Tableau& d) {
    CHECK(fixed_pairs(d) <= tilde_inv(d));
    CHECK(bar_inv(d) >= 0);
    CHECK(2 * tilde_inv(d) >= inv(d));
  });
}

TEST_CASE("Poincare polynomials") {
  CHECK(poincare(Variety::ordinary, 3) == Poly{1, 2, 3, 1});
  CHECK(poincare(Variety::symplectic, 3) == Poly{1, 1, 1});
  CHECK(poincare(Variety::orthogonal, 3) == Poly{1, 2});
  CHECK(poincare(Variety::symplectic, 4) == Poly{1, 2, 3, 3, 1});
  CHECK(poincare(Variety::orthogonal, 4) == Poly{2, 4, 4});
  for (int N = 1; N <= 4; ++N) CHECK(poincare(Variety::ordinary, N).eval(BigInt(1)) == count_configs(Kind::dellac, N));
  CHECK_THROWS(parse_variety("b"));
}

TEST_CASE("paths of the example tableau in T_7^e") {
  REQUIRE(validate(T1, Kind::even_extended));
  const PathReport r = path_report(T1);
  CHECK(r.B == std::vector<Box>{{2, 7}, {3, 12}, {7, 11}});
  CHECK(r.R == std::vector<Box>{{4, 14}, {7, 10}});
  CHECK(r.G == std::vector<Box>{{2, 13}});
  CHECK(r.Bprime == std::vector<Box>{{5, 6}, {6, 9}});
  CHECK(r.Rprime == std::vector<Box>{{6, 8}});
  CHECK(r.b == 2);
  CHECK(r.r == 1);
  CHECK(r.g == 1);
  CHECK(r.bP == 2);
  CHECK(r.rP == 1);
  CHECK(r.gP == 0);
  CHECK(r.max == 4);
  CHECK(r.maxP == 3);
  CHECK(r.fr == 6);
  CHECK(max_set(r).size() == 4);
  CHECK(omax_set(r).size() == 6);
  CHECK(max_prime_set(r, 7).size() == 3);
}

TEST_CASE("reverse walks and roots") {
  CHECK(iota_path(T1, 7, 10) == std::vector<int>{10, 14, 14});
  CHECK(iota_path(T1, 7, 11) == std::vector<int>{11, 12, 13, 2, 7, 7});
  CHECK(iota_path(T1, 2, 13) == std::vector<int>{13, 2, 2});
  CHECK(root(T1, 7, 11) == 7);
  CHECK(root(T1, 2, 13) == 2);
}

TEST_CASE("odd paths of the example tableau in T_6^o") {
  REQUIRE(validate(T3, Kind::odd_extended));
  const PathReport r = path_report_odd(T3);
  CHECK(r.V == std::vector<Box>{{2, 13}, {3, 11}, {4, 10}});
  CHECK(r.G == std::vector<Box>{{2, 12}});
  CHECK(r.v == 3);
  CHECK(r.g == 1);
}

TEST_CASE("every G point is free and its root is its column") {
  for_each_config(Kind::even_extended, 4, [](const Tableau& t) {
    const PathReport r = path_report(t);
    CHECK(r.max == r.b + r.r + r.g);
    CHECK(r.max <= 3);
    for (const Box& p : r.G) {
      CHECK(is_free(t, p));
      CHECK(root(t, p.col, p.row) == p.col);
    }
  });
}

TEST_CASE("both generating sums give P_n for small n") {
  for (int n = 1; n <= 5; ++n) CHECK(theorem1_sum(n) == P_poly(n));
  for (int n = 2; n <= 5; ++n) CHECK(theorem2_sum(n) == P_poly(n));
  CHECK(theorem1_sum(5, 3) == P_poly(5));
  CHECK(e_row(4) == c_next_row(e_row(3)));
}
