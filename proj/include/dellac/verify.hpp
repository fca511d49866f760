#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dellac/json_io.hpp"
#include "dellac/poly.hpp"

namespace dellac {

// ---------------------------------------------------------------------------
// Exhaustive audits. Each returns raw counts; callers decide what passes.

// sum over T_n^e of 2^{fr-1-max} x^max
Poly theorem1_sum(int n, int threads = 1);
// sum over T_{n-1}^o of 2^{fr-g} x^v (1+x)^g, n >= 2
Poly theorem2_sum(int n, int threads = 1);
// e_{n,k} = sum over max(T) = k of 2^{fr-1-k}, as coefficients
std::vector<BigInt> e_row(int n);

// sum over T of 2^fr, for T_n^e (even) or T_n^o (odd)
BigInt weighted_free_count(Kind kind, int n);

struct ExpandAudit {
  std::size_t labelings = 0;     // labeled tableaux fed to the map
  std::size_t distinct = 0;      // distinct images
  std::size_t invalid = 0;       // images failing validate(sdc)
  std::size_t sdc_count = 0;     // |SDC_N| by direct enumeration
  std::size_t missing = 0;       // SDC elements not hit
  std::size_t reduce_failures = 0;  // reduce(expand(L)) != L
  bool bijective() const {
    return invalid == 0 && reduce_failures == 0 && missing == 0 && distinct == labelings &&
           distinct == sdc_count;
  }
};
ExpandAudit audit_even_expand(int n);  // T_n^e -> SDC_{2n}
ExpandAudit audit_odd_expand(int n);   // T_n^o -> SDC_{2n+1}

struct PiAudit {
  int n = 0;
  std::size_t tableaux = 0;
  std::size_t forward_errors = 0;       // pi_forward threw
  std::size_t max_relation_failures = 0;  // max(Pi T) != max + maxP - 2
  std::size_t fiber_errors = 0;         // pi_fiber threw
  std::size_t round_trip_failures = 0;  // fiber member not mapped back to (T0, X)
  std::size_t situation_mismatches = 0; // label-side vs tableau-side situation
  std::size_t preimage_mismatches = 0;  // T0 whose fiber union != forward preimage
  std::size_t duplicate_members = 0;    // tableaux produced by two fibers
  std::size_t size_mismatches = 0;      // (T0, k) violating the partition sizes
  std::size_t fr_mismatches = 0;        // (T0, k) violating the fr bookkeeping
  std::size_t targets = 0;              // |T_{n-1}^e|
  bool e_recurrence_holds = false;      // e_n row = c_next_row(e_{n-1} row)
  bool clean() const {
    return forward_errors == 0 && max_relation_failures == 0 && fiber_errors == 0 &&
           round_trip_failures == 0 && situation_mismatches == 0 && preimage_mismatches == 0 &&
           duplicate_members == 0 && size_mismatches == 0 && fr_mismatches == 0 && e_recurrence_holds;
  }
};
PiAudit audit_pi(int n);

struct PAudit {
  int n = 0;
  std::size_t tableaux = 0;
  std::size_t forward_errors = 0;
  std::size_t targets = 0;               // |T_{n-1}^o|
  std::size_t count_mismatches = 0;      // |P^{-1}(T0)| != 2^{v-g} 3^g
  std::size_t weight_mismatches = 0;     // weighted identity fails at T0
  std::size_t fiber_errors = 0;          // p_fiber threw
  std::size_t round_trip_failures = 0;   // p_forward(U^l(T0)) != T0
  std::size_t fr_failures = 0;           // fr(U^l(T0)) != fr(T0) + 1
  std::size_t preimage_mismatches = 0;   // {U^l(T0)} != forward preimage
  bool clean() const {
    return forward_errors == 0 && count_mismatches == 0 && weight_mismatches == 0 &&
           fiber_errors == 0 && round_trip_failures == 0 && fr_failures == 0 &&
           preimage_mismatches == 0;
  }
};
PAudit audit_p(int n);

json to_json(const ExpandAudit& a);
json to_json(const PiAudit& a);
json to_json(const PAudit& a);

// ---------------------------------------------------------------------------
// Suites behind `verify`.

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double seconds = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

struct VerifyBounds {
  std::optional<int> max_n;  // overrides every suite's default size cap
  int threads = 1;
};

const std::vector<std::string>& suite_names();  // without "all"
// Unknown suite names throw std::invalid_argument; failing checks never throw.
VerifyReport run_suite(const std::string& suite, const VerifyBounds& bounds);

json to_json(const VerifyReport& r);

}  // namespace dellac
