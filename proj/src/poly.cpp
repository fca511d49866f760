#include "dellac/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "dellac/stats.hpp"

namespace dellac {

Poly::Poly(std::initializer_list<long long> ascending) {
  for (long long v : ascending) c_.emplace_back(v);
  trim();
}

Poly::Poly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly Poly::divided_exactly(const BigInt& d) const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& v : c_) {
    if (v % d != 0) throw std::domain_error("coefficient " + v.str() + " not divisible by " + d.str());
    out.push_back(v / d);
  }
  return Poly(std::move(out));
}

Poly Poly::shift_compose(const BigInt& a) const {
  // sum_k c_k (x + a)^k = sum_m x^m sum_{k >= m} c_k C(k, m) a^(k-m)
  const int n = static_cast<int>(c_.size());
  std::vector<BigInt> out(n, 0);
  for (int k = 0; k < n; ++k) {
    BigInt apow = 1;
    for (int m = k; m >= 0; --m) {
      out[m] += c_[k] * binomial(k, m) * apow;
      apow *= a;
    }
  }
  return Poly(std::move(out));
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt v = c_[k];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    BigInt mag = v < 0 ? BigInt(-v) : v;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly sub(const Poly& a, const Poly& b) { return a - b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly scale(const Poly& a, const BigInt& s) { return a * s; }
Poly shift_compose(const Poly& p, const BigInt& a) { return p.shift_compose(a); }
BigInt eval_int(const Poly& p, const BigInt& x) { return p.eval(x); }
Rational eval_rational(const Poly& p, const Rational& x) { return p.eval(x); }

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(int k) { return BigInt(1) << k; }

// ---------------------------------------------------------------------------

PolySeries series_mul(const PolySeries& a, const PolySeries& b) {
  const int order = std::min(a.order, b.order);
  PolySeries out{order, std::vector<Poly>(order + 1)};
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) out.terms[i + j] += a.terms[i] * b.terms[j];
  return out;
}

PolySeries series_geometric(const PolySeries& u) {
  if (!u.terms.empty() && !u.terms[0].is_zero())
    throw std::invalid_argument("geometric series needs a zero constant term");
  PolySeries sum{u.order, std::vector<Poly>(u.order + 1)};
  sum.terms[0] = Poly{1};
  PolySeries power = sum;
  // u^m only reaches t^m and beyond, so order iterations are enough.
  for (int m = 1; m <= u.order; ++m) {
    power = series_mul(power, u);
    for (int k = 0; k <= u.order; ++k) sum.terms[k] += power.terms[k];
  }
  return sum;
}

// ---------------------------------------------------------------------------

Poly D_poly(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const Poly x = Poly::x();
  Poly d{1};
  for (int k = 0; k < n; ++k) {
    // D_{k+1}(x) = (x+1)(x+2) D_k(x+2) - x(x+1) D_k(x)
    Poly up = (x + Poly{1}) * (x + Poly{2}) * d.shift_compose(2);
    Poly down = x * (x + Poly{1}) * d;
    d = up - down;
  }
  return d;
}

Poly P_poly(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Poly x = Poly::x();
  Poly p{1};
  for (int k = 1; k < n; ++k) {
    // P_{k+1}(x) = (x+2)(x+1)/2 P_k(x+2) - x(x-1)/2 P_k(x); the halves are
    // integer-valued but not integral, so halve the difference.
    Poly up = (x + Poly{2}) * (x + Poly{1}) * p.shift_compose(2);
    Poly down = x * (x - Poly{1}) * p;
    p = (up - down).divided_exactly(2);
  }
  return p;
}

std::vector<BigInt> c_next_row(const std::vector<BigInt>& prev) {
  const int n = static_cast<int>(prev.size()) + 1;
  if (n < 2) throw std::invalid_argument("previous row must be non-empty");
  std::vector<BigInt> row(n, 0);
  for (int i = 0; i <= n - 2; ++i) row[0] += pow2(i) * prev[i];
  for (int k = 1; k <= n - 2; ++k) {
    BigInt v = (k + 1) * prev[k - 1];
    for (int i = k; i <= n - 2; ++i)
      v += pow2(i - k) * (binomial(i + 1, k) + 2 * binomial(i + 1, k - 1)) * prev[i];
    row[k] = v;
  }
  row[n - 1] = n * prev[n - 2];
  return row;
}

std::vector<std::vector<BigInt>> c_triangle(int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be positive");
  std::vector<std::vector<BigInt>> c(nmax + 1);
  c[1] = {1};
  for (int n = 2; n <= nmax; ++n) c[n] = c_next_row(c[n - 1]);
  return c;
}

BigInt l_seq(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n == 0) return 1;
  return P_poly(n).eval(BigInt(1));
}

BigInt r_seq(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n == 0) return 1;
  return 2 * P_poly(n).eval(BigInt(2));
}

Rational L_seq(int n) { return D_poly(n).eval(Rational(-1, 2)); }
Rational R_seq(int n) { return D_poly(n).eval(Rational(1, 2)); }

// ---------------------------------------------------------------------------

Poly cf_coefficient(int level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  // x, (x+1), 2(x+2), 2(x+3), 3(x+4), 3(x+5), ...
  const int m = (level + 1) / 2;
  const int shift = level - 1;
  return Poly{shift, 1} * BigInt(m);
}

PolySeries cf_expand(int order, int depth) {
  if (order < 1 || depth < 1) throw std::invalid_argument("order and depth must be positive");
  // G_{depth+1} = 1, G_k = 1 / (1 - a_k t G_{k+1}); the series is G_1.
  PolySeries g{order, std::vector<Poly>(order + 1)};
  g.terms[0] = Poly{1};
  for (int level = depth; level >= 1; --level) {
    PolySeries u{order, std::vector<Poly>(order + 1)};
    const Poly a = cf_coefficient(level);
    for (int k = 0; k + 1 <= order; ++k) u.terms[k + 1] = a * g.terms[k];
    g = series_geometric(u);
  }
  return g;
}

PolySeries cf_series(int order) {
  PolySeries s = cf_expand(order, 2 * order + 2);
  PolySeries deeper = cf_expand(order, 2 * order + 3);
  if (s.terms != deeper.terms) throw std::logic_error("continued fraction has not stabilised");
  return s;
}

Variety parse_variety(const std::string& tag) {
  if (tag == "a") return Variety::ordinary;
  if (tag == "sp") return Variety::symplectic;
  if (tag == "so") return Variety::orthogonal;
  throw std::invalid_argument("unknown variety: " + tag);
}

Poly poincare(Variety v, int N) {
  std::vector<BigInt> acc;
  auto bump = [&acc](int k) {
    if (static_cast<int>(acc.size()) <= k) acc.resize(k + 1, 0);
    acc[k] += 1;
  };
  if (v == Variety::ordinary) {
    enum_dc(N, [&](const Tableau& d) { bump(inv(d)); });
  } else {
    enum_sdc(N, [&](const Tableau& d) { bump(v == Variety::symplectic ? tilde_inv(d) : bar_inv(d)); });
  }
  return Poly(std::move(acc));
}

PistolStats pistol_stats(const SurjectivePistol& f) {
  const int n = f.n();
  PistolStats s;
  for (int j = 1; j <= 2 * n - 2; ++j) {
    if (f(j) == 2 * n) ++s.maxpts;
    if (f(j) == j) {
      for (int jp = 1; jp < j; ++jp) {
        if (f(jp) == j) {
          ++s.fd;
          break;
        }
      }
    }
  }
  return s;
}

Poly P_via_pistols(int n) {
  std::vector<BigInt> acc(n, 0);
  enum_sp(n, [&](const SurjectivePistol& f) {
    auto s = pistol_stats(f);
    const int e = n - 1 - s.maxpts - s.fd;
    if (e < 0) throw std::logic_error("negative power of two in pistol weight");
    acc.at(s.maxpts) += pow2(e);
  });
  return Poly(std::move(acc));
}

}  // namespace dellac
