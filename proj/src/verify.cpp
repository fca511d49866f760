#include "dellac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace dellac {

namespace {

void add_at(std::vector<BigInt>& acc, int k, const BigInt& v) {
  if (static_cast<int>(acc.size()) <= k) acc.resize(k + 1, 0);
  acc[k] += v;
}

Poly sum_workers(std::vector<std::vector<BigInt>>& parts) {
  std::vector<BigInt> total;
  for (auto& p : parts)
    for (std::size_t k = 0; k < p.size(); ++k) add_at(total, static_cast<int>(k), p[k]);
  return Poly(std::move(total));
}

}  // namespace

Poly theorem1_sum(int n, int threads) {
  std::vector<std::vector<BigInt>> parts(std::max(1, threads));
  parallel_for_each_config(Kind::even_extended, n, threads, [&](int w, const Tableau& t) {
    const PathReport rep = path_report(t);
    add_at(parts[w], rep.max, pow2(rep.fr - 1 - rep.max));
  });
  return sum_workers(parts);
}

Poly theorem2_sum(int n, int threads) {
  if (n < 2) throw std::invalid_argument("theorem 2 needs n >= 2");
  std::vector<std::vector<BigInt>> parts(std::max(1, threads));
  parallel_for_each_config(Kind::odd_extended, n - 1, threads, [&](int w, const Tableau& t) {
    const PathReport rep = path_report_odd(t);
    for (int k = 0; k <= rep.g; ++k) add_at(parts[w], rep.v + k, pow2(rep.fr - rep.g) * binomial(rep.g, k));
  });
  return sum_workers(parts);
}

std::vector<BigInt> e_row(int n) {
  std::vector<BigInt> row(n, 0);
  enum_te(n, [&](const Tableau& t) {
    const PathReport rep = path_report(t);
    row.at(rep.max) += pow2(rep.fr - 1 - rep.max);
  });
  return row;
}

BigInt weighted_free_count(Kind kind, int n) {
  BigInt total = 0;
  for_each_config(kind, n, [&](const Tableau& t) { total += pow2(free_count(t)); });
  return total;
}

// ---------------------------------------------------------------------------

namespace {

ExpandAudit audit_expand(Kind base, int n) {
  const bool even = base == Kind::even_extended;
  const int N = even ? 2 * n : 2 * n + 1;
  ExpandAudit a;
  std::set<Tableau> images;
  for_each_config(base, n, [&](const Tableau& t) {
    for (const auto& l : enum_labeled(t)) {
      ++a.labelings;
      const Tableau d = even ? even_expand(l) : odd_expand(l);
      if (!validate(d, Kind::symmetric_dellac, N)) {
        ++a.invalid;
        continue;
      }
      images.insert(d);
      try {
        if ((even ? even_reduce(d) : odd_reduce(d)) != l) ++a.reduce_failures;
      } catch (const std::exception&) {
        ++a.reduce_failures;
      }
    }
  });
  a.distinct = images.size();
  for_each_config(Kind::symmetric_dellac, N, [&](const Tableau& d) {
    ++a.sdc_count;
    if (!images.count(d)) ++a.missing;
  });
  return a;
}

}  // namespace

ExpandAudit audit_even_expand(int n) { return audit_expand(Kind::even_extended, n); }
ExpandAudit audit_odd_expand(int n) { return audit_expand(Kind::odd_extended, n); }

PiAudit audit_pi(int n) {
  if (n < 2) throw std::invalid_argument("audit_pi needs n >= 2");
  PiAudit a;
  a.n = n;
  std::map<Tableau, std::set<Tableau>> preimage;
  enum_te(n, [&](const Tableau& t) {
    ++a.tableaux;
    try {
      const PiResult r = pi_forward(t);
      const PathReport rep = path_report(t);
      if (path_report(r.image).max != rep.max + rep.maxP - 2) ++a.max_relation_failures;
      preimage[r.image].insert(t);
    } catch (const std::exception&) {
      ++a.forward_errors;
    }
  });

  std::map<Tableau, int> produced;
  enum_te(n - 1, [&](const Tableau& t0) {
    ++a.targets;
    const PathReport rep0 = path_report(t0);
    std::set<Tableau> fibre_union;
    for (const auto& X : proper_subsets_of_omax(rep0)) {
      Fiber f;
      try {
        f = pi_fiber(t0, X);
      } catch (const std::exception&) {
        ++a.fiber_errors;
        continue;
      }
      for (const Tableau& m : f.members) {
        if (++produced[m] > 1) ++a.duplicate_members;
        fibre_union.insert(m);
        if (situation_from_tableau(m) != f.situation) ++a.situation_mismatches;
        try {
          const PiResult back = pi_forward(m);
          std::vector<Box> xs = X;
          std::sort(xs.begin(), xs.end());
          if (back.image != t0 || back.X != xs) ++a.round_trip_failures;
        } catch (const std::exception&) {
          ++a.round_trip_failures;
        }
      }
    }
    const auto& pre = preimage[t0];
    if (fibre_union != pre) ++a.preimage_mismatches;

    // Partition sizes and free-point bookkeeping on the forward preimage.
    const int i = rep0.max;
    std::map<int, std::vector<const Tableau*>> by_k;
    for (const Tableau& t : pre) by_k[path_report(t).max].push_back(&t);
    for (int k = 0; k <= std::max(i + 1, by_k.empty() ? 0 : by_k.rbegin()->first); ++k) {
      const auto& ts = by_k[k];
      std::size_t n_free = 0, fr_plus = 0, fr_same = 0;
      for (const Tableau* t : ts) {
        if (is_free(*t, {t->col(n + 1), n + 1})) ++n_free;
        const int d = free_count(*t) - rep0.fr;
        if (d == 1) ++fr_plus;
        else if (d == 0) ++fr_same;
      }
      BigInt expected = 0;
      bool fr_ok = true;
      if (k == 0) {
        expected = 1;
        fr_ok = fr_same == ts.size();
      } else if (k == i + 1) {
        expected = i + 2;
        fr_ok = fr_plus == ts.size();
      } else if (k <= i) {
        expected = binomial(i + 1, k) + BigInt(n_free) + 2 * (binomial(i + 1, k - 1) - BigInt(n_free));
        fr_ok = fr_plus == n_free && fr_same + fr_plus == ts.size();
        // every p_{n+1}-free member is one of the fr+1 ones
        for (const Tableau* t : ts)
          if (is_free(*t, {t->col(n + 1), n + 1}) && free_count(*t) != rep0.fr + 1) fr_ok = false;
      }
      if (BigInt(ts.size()) != expected) ++a.size_mismatches;
      if (!fr_ok) ++a.fr_mismatches;
    }
  });

  a.e_recurrence_holds = n >= 2 && e_row(n) == c_next_row(e_row(n - 1));
  return a;
}

PAudit audit_p(int n) {
  if (n < 2) throw std::invalid_argument("audit_p needs n >= 2");
  PAudit a;
  a.n = n;
  std::map<Tableau, std::set<Tableau>> preimage;
  enum_te(n, [&](const Tableau& t) {
    ++a.tableaux;
    try {
      preimage[p_forward(t)].insert(t);
    } catch (const std::exception&) {
      ++a.forward_errors;
    }
  });
  enum_to(n - 1, [&](const Tableau& t0) {
    ++a.targets;
    const PathReport rep0 = path_report_odd(t0);
    const auto& pre = preimage[t0];
    const BigInt expected_count = pow2(rep0.v - rep0.g) * boost::multiprecision::pow(BigInt(3), rep0.g);
    if (BigInt(pre.size()) != expected_count) ++a.count_mismatches;

    std::vector<BigInt> lhs, rhs;
    for (const Tableau& t : pre) {
      const PathReport rep = path_report(t);
      add_at(lhs, rep.max, pow2(rep.fr - 1 - rep.max));
    }
    for (int k = 0; k <= rep0.g; ++k) add_at(rhs, rep0.v + k, pow2(rep0.fr - rep0.g) * binomial(rep0.g, k));
    if (Poly(lhs) != Poly(rhs)) ++a.weight_mismatches;

    std::set<Tableau> fibre;
    for (const auto& l : label_functions(t0)) {
      try {
        const Tableau u = p_fiber(t0, l);
        fibre.insert(u);
        if (free_count(u) != rep0.fr + 1) ++a.fr_failures;
        try {
          if (p_forward(u) != t0) ++a.round_trip_failures;
        } catch (const std::exception&) {
          ++a.round_trip_failures;
        }
      } catch (const std::exception&) {
        ++a.fiber_errors;
      }
    }
    if (fibre != pre) ++a.preimage_mismatches;
  });
  return a;
}

json to_json(const ExpandAudit& a) {
  return {{"labelings", a.labelings}, {"distinct", a.distinct}, {"invalid", a.invalid},
          {"sdc_count", a.sdc_count}, {"missing", a.missing}, {"reduce_failures", a.reduce_failures},
          {"bijective", a.bijective()}};
}

json to_json(const PiAudit& a) {
  return {{"n", a.n},
          {"tableaux", a.tableaux},
          {"targets", a.targets},
          {"forward_errors", a.forward_errors},
          {"max_relation_failures", a.max_relation_failures},
          {"fiber_errors", a.fiber_errors},
          {"round_trip_failures", a.round_trip_failures},
          {"situation_mismatches", a.situation_mismatches},
          {"preimage_mismatches", a.preimage_mismatches},
          {"duplicate_members", a.duplicate_members},
          {"size_mismatches", a.size_mismatches},
          {"fr_mismatches", a.fr_mismatches},
          {"e_recurrence_holds", a.e_recurrence_holds},
          {"clean", a.clean()}};
}

json to_json(const PAudit& a) {
  return {{"n", a.n},
          {"tableaux", a.tableaux},
          {"targets", a.targets},
          {"forward_errors", a.forward_errors},
          {"count_mismatches", a.count_mismatches},
          {"weight_mismatches", a.weight_mismatches},
          {"fiber_errors", a.fiber_errors},
          {"round_trip_failures", a.round_trip_failures},
          {"fr_failures", a.fr_failures},
          {"preimage_mismatches", a.preimage_mismatches},
          {"clean", a.clean()}};
}

// ---------------------------------------------------------------------------

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sequences", "theorems", "fibers", "bijections",
                                              "pistols",   "cf",       "poincare", "anchors"};
  return names;
}

namespace {

std::string str(const Poly& p) { return p.to_string(); }

template <class T>
std::string list(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    if constexpr (std::is_same_v<T, Rational>) s += rational_to_json(v[k]).template get<std::string>();
    else if constexpr (std::is_same_v<T, BigInt>) s += v[k].str();
    else s += std::to_string(v[k]);
  }
  return s + "]";
}

class Runner {
 public:
  explicit Runner(VerifyReport& r) : r_(r) {}

  void check(const std::string& name, const std::function<std::pair<std::string, std::string>()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    c.name = name;
    try {
      auto [expected, actual] = fn();
      c.expected = expected;
      c.actual = actual;
      c.passed = expected == actual;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
      c.passed = false;
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r_.checks.push_back(std::move(c));
  }

 private:
  VerifyReport& r_;
};

int cap(const VerifyBounds& b, int dflt) { return b.max_n ? std::min(*b.max_n, dflt) : dflt; }

void run_sequences(Runner& run, const VerifyBounds& b) {
  const std::vector<long long> h{1, 2, 7, 38, 295, 3098};
  const int nh = cap(b, 6);
  run.check("h_N = |DC_N|, N <= " + std::to_string(nh), [&] {
    std::vector<long long> got, want(h.begin(), h.begin() + nh);
    for (int N = 1; N <= nh; ++N) got.push_back(static_cast<long long>(count_configs(Kind::dellac, N)));
    return std::make_pair(list(want), list(got));
  });
  const int ns = cap(b, 4);
  run.check("|SDC_2n| for n <= " + std::to_string(ns), [&] {
    const std::vector<long long> all{2, 10, 98, 1594};
    std::vector<long long> got, want(all.begin(), all.begin() + ns);
    for (int n = 1; n <= ns; ++n) got.push_back(static_cast<long long>(count_configs(Kind::symmetric_dellac, 2 * n)));
    return std::make_pair(list(want), list(got));
  });
  run.check("|SDC_2n-1| for n <= " + std::to_string(ns), [&] {
    const std::vector<long long> all{1, 3, 21, 267};
    std::vector<long long> got, want(all.begin(), all.begin() + ns);
    for (int n = 1; n <= ns; ++n) got.push_back(static_cast<long long>(count_configs(Kind::symmetric_dellac, 2 * n - 1)));
    return std::make_pair(list(want), list(got));
  });
  const int np = cap(b, 8);
  run.check("l_n = 1, 1, 3, 21, 267 and l_n = P_n(1), n <= " + std::to_string(np), [&] {
    std::vector<BigInt> head, want{1, 1, 3, 21, 267}, seq, ev;
    for (int n = 0; n <= 4; ++n) head.push_back(l_seq(n));
    for (int n = 1; n <= np; ++n) {
      seq.push_back(l_seq(n));
      ev.push_back(P_poly(n).eval(BigInt(1)));
    }
    return std::make_pair(list(want) + list(ev), list(head) + list(seq));
  });
  run.check("r_n = 1, 2, 10, 98, 1594 and r_n = 2 P_n(2) = 2 P_{n+1}(0), n <= " + std::to_string(np), [&] {
    std::vector<BigInt> head, want{1, 2, 10, 98, 1594}, seq, a, c;
    for (int n = 0; n <= 4; ++n) head.push_back(r_seq(n));
    for (int n = 1; n <= np; ++n) {
      seq.push_back(r_seq(n));
      a.push_back(2 * P_poly(n).eval(BigInt(2)));
      c.push_back(2 * P_poly(n + 1).coeff(0));
    }
    return std::make_pair(list(want) + list(a) + list(a), list(head) + list(seq) + list(c));
  });
  run.check("c_{n,n-1} = n!, n <= " + std::to_string(np), [&] {
    const auto c = c_triangle(np);
    std::vector<BigInt> got, want;
    for (int n = 1; n <= np; ++n) {
      got.push_back(c[n][n - 1]);
      want.push_back(factorial(n));
    }
    return std::make_pair(list(want), list(got));
  });
  run.check("P_n coefficients equal c_{n,k}, n <= " + std::to_string(np), [&] {
    const auto c = c_triangle(np);
    std::string want, got;
    for (int n = 1; n <= np; ++n) {
      want += list(c[n]);
      auto co = P_poly(n).coeffs();
      co.resize(n, 0);
      got += list(co);
    }
    return std::make_pair(want, got);
  });
  run.check("D_n(-1/2) = 1, 1, 4, 46, 1024", [&] {
    std::vector<Rational> got;
    for (int n = 0; n <= 4; ++n) got.push_back(L_seq(n));
    return std::make_pair(std::string("[1, 1, 4, 46, 1024]"), list(got));
  });
  run.check("D_n(1/2) = 1, 3, 24, 402", [&] {
    std::vector<Rational> got;
    for (int n = 0; n <= 3; ++n) got.push_back(R_seq(n));
    return std::make_pair(std::string("[1, 3, 24, 402]"), list(got));
  });
}

void run_theorems(Runner& run, const VerifyBounds& b) {
  const int n1 = cap(b, 7);
  for (int n = 1; n <= n1; ++n)
    run.check("Theorem 1 at n = " + std::to_string(n),
              [&, n] { return std::make_pair(str(P_poly(n)), str(theorem1_sum(n, b.threads))); });
  const int n2 = cap(b, 7);
  for (int n = 2; n <= n2; ++n)
    run.check("Theorem 2 at n = " + std::to_string(n),
              [&, n] { return std::make_pair(str(P_poly(n)), str(theorem2_sum(n, b.threads))); });
}

void run_fibers(Runner& run, const VerifyBounds& b) {
  const int nf = cap(b, 5);
  for (int n = 2; n <= nf; ++n) {
    run.check("Pi fibers at n = " + std::to_string(n), [n] {
      const PiAudit a = audit_pi(n);
      return std::make_pair(std::string("clean"), a.clean() ? std::string("clean") : to_json(a).dump());
    });
    run.check("P fibers at n = " + std::to_string(n), [n] {
      const PAudit a = audit_p(n);
      return std::make_pair(std::string("clean"), a.clean() ? std::string("clean") : to_json(a).dump());
    });
  }
}

void run_bijections(Runner& run, const VerifyBounds& b) {
  const int ne = cap(b, 4), no = cap(b, 3);
  for (int n = 1; n <= ne; ++n)
    run.check("even expand onto SDC_" + std::to_string(2 * n), [n] {
      const ExpandAudit a = audit_even_expand(n);
      const BigInt w = weighted_free_count(Kind::even_extended, n);
      return std::make_pair("bijective, sum 2^fr = " + std::to_string(a.sdc_count),
                            std::string(a.bijective() ? "bijective" : to_json(a).dump()) + ", sum 2^fr = " + w.str());
    });
  for (int n = 1; n <= no; ++n)
    run.check("odd expand onto SDC_" + std::to_string(2 * n + 1), [n] {
      const ExpandAudit a = audit_odd_expand(n);
      const BigInt w = weighted_free_count(Kind::odd_extended, n);
      return std::make_pair("bijective, sum 2^fr = " + std::to_string(a.sdc_count),
                            std::string(a.bijective() ? "bijective" : to_json(a).dump()) + ", sum 2^fr = " + w.str());
    });
}

void run_pistols(Runner& run, const VerifyBounds& b) {
  const int np = cap(b, 6);
  for (int n = 1; n <= np; ++n)
    run.check("pistol formula at n = " + std::to_string(n),
              [n] { return std::make_pair(str(P_poly(n)), str(P_via_pistols(n))); });
}

void run_cf(Runner& run, const VerifyBounds& b) {
  const int order = cap(b, 7);
  run.check("S-fraction through t^" + std::to_string(order), [order] {
    const PolySeries s = cf_series(order);
    std::string want = "1", got = s.terms[0].to_string();
    for (int n = 1; n <= order; ++n) {
      want += " | " + (Poly::x() * P_poly(n)).to_string();
      got += " | " + s.terms[n].to_string();
    }
    return std::make_pair(want, got);
  });
}

void run_poincare(Runner& run, const VerifyBounds&) {
  run.check("ordinary, N = 3", [] { return std::make_pair(std::string("q^3 + 3q^2 + 2q + 1"), poincare(Variety::ordinary, 3).to_string('q')); });
  const std::vector<std::string> sp{"1", "q + 1", "q^2 + q + 1", "q^4 + 3q^3 + 3q^2 + 2q + 1"};
  const std::vector<std::string> so{"1", "2", "2q + 1", "4q^2 + 4q + 2"};
  for (int N = 1; N <= 4; ++N) {
    run.check("symplectic, N = " + std::to_string(N),
              [&, N] { return std::make_pair(sp[N - 1], poincare(Variety::symplectic, N).to_string('q')); });
    run.check("orthogonal, N = " + std::to_string(N),
              [&, N] { return std::make_pair(so[N - 1], poincare(Variety::orthogonal, N).to_string('q')); });
  }
}

void run_anchors(Runner& run, const VerifyBounds&) {
  const Tableau t1(7, {1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4});
  const Tableau t3(6, {1, 1, 3, 4, 5, 5, 6, 6, 0, 4, 3, 2, 2});
  run.check("(b, r, g)(T_1)", [&] {
    const auto r = path_report(t1);
    return std::make_pair(std::string("2 1 1"), std::to_string(r.b) + " " + std::to_string(r.r) + " " + std::to_string(r.g));
  });
  run.check("(b', r', g')(T_1)", [&] {
    const auto r = path_report(t1);
    return std::make_pair(std::string("2 1 0"), std::to_string(r.bP) + " " + std::to_string(r.rP) + " " + std::to_string(r.gP));
  });
  run.check("(v, g)(T_3)", [&] {
    const auto r = path_report_odd(t3);
    return std::make_pair(std::string("3 1"), std::to_string(r.v) + " " + std::to_string(r.g));
  });
  run.check("X_{T_1}", [&] {
    return std::make_pair(std::string("[\"2:6\",\"2:11\",\"3:10\",\"4:12\"]"), boxes_to_json(pi_forward(t1).X).dump());
  });
  run.check("(b, r, g)(Pi(T_1))", [&] {
    const auto r = path_report(pi_forward(t1).image);
    return std::make_pair(std::string("3 1 1"), std::to_string(r.b) + " " + std::to_string(r.r) + " " + std::to_string(r.g));
  });
  run.check("P(T_1) = T_3", [&] { return std::make_pair(tableau_to_json(t3, Kind::odd_extended).dump(), tableau_to_json(p_forward(t1), Kind::odd_extended).dump()); });
  run.check("iota_{T_1}(7:10), iota_{T_1}(7:11)", [&] {
    return std::make_pair(std::string("[10, 14, 14] [11, 12, 13, 2, 7, 7]"),
                          list(iota_path(t1, 7, 10)) + " " + list(iota_path(t1, 7, 11)));
  });
  run.check("fr on T_2^e", [] {
    std::vector<int> fr;
    enum_te(2, [&](const Tableau& t) { fr.push_back(free_count(t)); });
    return std::make_pair(std::string("[2, 1, 2]"), list(fr));
  });
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const VerifyBounds& bounds) {
  VerifyReport r;
  r.suite = suite;
  Runner run(r);
  auto dispatch = [&](const std::string& s) {
    if (s == "sequences") run_sequences(run, bounds);
    else if (s == "theorems") run_theorems(run, bounds);
    else if (s == "fibers") run_fibers(run, bounds);
    else if (s == "bijections") run_bijections(run, bounds);
    else if (s == "pistols") run_pistols(run, bounds);
    else if (s == "cf") run_cf(run, bounds);
    else if (s == "poincare") run_poincare(run, bounds);
    else if (s == "anchors") run_anchors(run, bounds);
    else throw std::invalid_argument("unknown suite: " + s);
  };
  if (suite == "all") {
    for (const auto& s : suite_names()) dispatch(s);
  } else {
    dispatch(suite);
  }
  return r;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"expected", c.expected},
                      {"actual", c.actual}, {"seconds", c.seconds}});
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace dellac
