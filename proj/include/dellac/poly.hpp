#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dellac/enumerate.hpp"

namespace dellac {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over the integers. coeffs()[k] is the
// coefficient of x^k; trailing zeros are trimmed, so zero is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long long> ascending);
  explicit Poly(std::vector<BigInt> ascending);
  static Poly constant(const BigInt& c);
  static Poly monomial(const BigInt& c, int degree);
  static Poly x() { return monomial(1, 1); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(int k) const;
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const BigInt& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigInt& s) { return a *= s; }
  friend Poly operator*(const BigInt& s, Poly a) { return a *= s; }
  bool operator==(const Poly&) const = default;

  // Exact division of every coefficient; throws std::domain_error otherwise.
  Poly divided_exactly(const BigInt& d) const;
  // P(x + a) by binomial expansion.
  Poly shift_compose(const BigInt& a) const;
  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;

  std::string to_string(char var = 'x') const;  // "6x^2 + 10x + 5"

 private:
  void trim();
  std::vector<BigInt> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const BigInt& s);
Poly shift_compose(const Poly& p, const BigInt& a);
BigInt eval_int(const Poly& p, const BigInt& x);
Rational eval_rational(const Poly& p, const Rational& x);

BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt pow2(int k);

// Truncated power series in t with polynomial coefficients in x.
struct PolySeries {
  int order = 0;            // terms beyond t^order are dropped
  std::vector<Poly> terms;  // size order + 1
};

PolySeries series_mul(const PolySeries& a, const PolySeries& b);
// 1 / (1 - u) for u with zero constant term.
PolySeries series_geometric(const PolySeries& u);

// ---------------------------------------------------------------------------
// The polynomial families.

Poly D_poly(int n);                // D_0 = 1
Poly P_poly(int n);                // P_1 = 1, n >= 1
std::vector<std::vector<BigInt>> c_triangle(int nmax);  // [n][k], n in 1..nmax; row 0 empty
// Row n of the triangle from row n-1 (size n-1) by the three recurrences.
std::vector<BigInt> c_next_row(const std::vector<BigInt>& prev);

BigInt l_seq(int n);  // 1, 1, 3, 21, 267, ...
BigInt r_seq(int n);  // 1, 2, 10, 98, 1594, ...
Rational L_seq(int n);  // D_n(-1/2): 1, 1, 4, 46, 1024, ...
Rational R_seq(int n);  // D_n(1/2): 1, 3, 24, 402, ...

// Level coefficient a_level of the S-fraction, level >= 1.
Poly cf_coefficient(int level);
// Bottom-up expansion of the S-fraction with `depth` levels, truncated at t^order.
PolySeries cf_expand(int order, int depth);
// cf_expand at depth 2*order+2, checked against depth 2*order+3.
PolySeries cf_series(int order);

// Poincare polynomials in q: sum of q^inv over DC_N (a), of q^tilde_inv over
// SDC_N (sp), of q^bar_inv over SDC_N (so).
enum class Variety { ordinary, symplectic, orthogonal };
Variety parse_variety(const std::string& tag);  // "a" | "sp" | "so"
Poly poincare(Variety v, int N);

struct PistolStats {
  int maxpts = 0;  // j in [2n-2] with f(j) = 2n
  int fd = 0;      // j in [2n-2] with f(j') = f(j) = j for some j' < j
};

PistolStats pistol_stats(const SurjectivePistol& f);
Poly P_via_pistols(int n);

}  // namespace dellac
