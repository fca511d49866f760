#include <doctest.h>

#include "dellac/enumerate.hpp"
#include "dellac/poly.hpp"

using namespace dellac;

TEST_CASE("polynomial arithmetic") {
  const Poly a{1, 1};  // 1 + x
  CHECK(a * a == Poly{1, 2, 1});
  CHECK(a - a == Poly{});
  CHECK((a - a).degree() == -1);
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK(a.shift_compose(2) == Poly{3, 1});
  CHECK(Poly{0, 0, 1}.shift_compose(-1) == Poly{1, -2, 1});
  CHECK(Poly{2, 4}.divided_exactly(2) == Poly{1, 2});
  const Poly odd{2, 3};
  CHECK_THROWS_AS(odd.divided_exactly(2), std::domain_error);
  CHECK(Poly{5, 10, 6}.to_string() == "6x^2 + 10x + 5");
  CHECK(Poly{-1, 0, 1}.to_string('q') == "q^2 - 1");
  CHECK(Poly{}.to_string() == "0");
  CHECK(Poly{1, 2}.eval(Rational(1, 2)) == Rational(2));
}

TEST_CASE("P_n first values") {
  CHECK(P_poly(1) == Poly{1});
  CHECK(P_poly(2) == Poly{1, 2});
  CHECK(P_poly(3) == Poly{5, 10, 6});
  CHECK(P_poly(4) == Poly{49, 110, 84, 24});
  CHECK(P_poly(5) == Poly{797, 1954, 1758, 720, 120});
}

TEST_CASE("D_n = 2^n (x+1) P_n(x+1)") {
  for (int n = 1; n <= 7; ++n) CHECK(D_poly(n) == Poly{1, 1} * P_poly(n).shift_compose(1) * pow2(n));
  CHECK(D_poly(0) == Poly{1});
}

TEST_CASE("c triangle") {
  const auto c = c_triangle(8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(c[n][n - 1] == factorial(n));
    CHECK(Poly(c[n]) == P_poly(n));
  }
  CHECK(c_next_row(c[4]) == c[5]);
}

TEST_CASE("specializations") {
  const std::vector<long long> l{1, 1, 3, 21, 267}, r{1, 2, 10, 98, 1594};
  for (int n = 0; n <= 4; ++n) {
    CHECK(l_seq(n) == l[n]);
    CHECK(r_seq(n) == r[n]);
  }
  for (int n = 1; n <= 8; ++n) {
    CHECK(l_seq(n) == P_poly(n).eval(BigInt(1)));
    CHECK(r_seq(n) == 2 * P_poly(n).eval(BigInt(2)));
    CHECK(r_seq(n) == 2 * P_poly(n + 1).coeff(0));
  }
  // 1, 1, 4, 46, 1024 sit at x = -1/2 and 1, 3, 24, 402 at x = 1/2.
  const std::vector<long long> L{1, 1, 4, 46, 1024}, R{1, 3, 24, 402};
  for (int n = 0; n <= 4; ++n) CHECK(L_seq(n) == Rational(L[n]));
  for (int n = 0; n <= 3; ++n) CHECK(R_seq(n) == Rational(R[n]));
}

TEST_CASE("continued fraction") {
  const PolySeries s = cf_series(6);
  REQUIRE(s.terms.size() == 7);
  CHECK(s.terms[0] == Poly{1});
  for (int n = 1; n <= 6; ++n) CHECK(s.terms[n] == Poly::x() * P_poly(n));
  // a shallow expansion is already right in low degree
  CHECK(cf_expand(2, 6).terms[2] == Poly::x() * P_poly(2));
}

TEST_CASE("pistol statistics and formula") {
  const auto s1 = pistol_stats({{2, 2, 4, 4}});
  CHECK(s1.maxpts == 0);
  CHECK(s1.fd == 1);
  const auto s2 = pistol_stats({{4, 2, 4, 4}});
  CHECK(s2.maxpts == 1);
  CHECK(s2.fd == 0);
  const auto s0 = pistol_stats({{2, 2}});
  CHECK(s0.maxpts == 0);
  CHECK(s0.fd == 0);
  for (int n = 1; n <= 5; ++n) CHECK(P_via_pistols(n) == P_poly(n));
}

TEST_CASE("binomials and powers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(pow2(70) == BigInt(1) << 70);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}
