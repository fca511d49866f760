#include <doctest.h>

#include <atomic>
#include <set>

#include "dellac/enumerate.hpp"
#include "dellac/poly.hpp"

using namespace dellac;

namespace {

int height_of(Kind k, int n) { return k == Kind::odd_extended ? 2 * n + 1 : 2 * n; }

// Every row vector over {0..n}, in lexicographic order, kept when valid.
std::vector<Tableau> brute(Kind kind, int n) {
  const int h = height_of(kind, n);
  std::vector<int> rows(h, 0);
  std::vector<Tableau> out;
  while (true) {
    Tableau t(n, rows);
    if (validate(t, kind, n)) out.push_back(t);
    int k = h - 1;
    while (k >= 0 && rows[k] == n) rows[k--] = 0;
    if (k < 0) break;
    ++rows[k];
  }
  return out;
}

}  // namespace

TEST_CASE("streams match brute force, including order") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(collect_configs(Kind::dellac, n) == brute(Kind::dellac, n));
    CHECK(collect_configs(Kind::even_extended, n) == brute(Kind::even_extended, n));
  }
  for (int n = 1; n <= 2; ++n) CHECK(collect_configs(Kind::odd_extended, n) == brute(Kind::odd_extended, n));
  for (int N = 1; N <= 4; ++N) {
    CAPTURE(N);
    CHECK(collect_configs(Kind::symmetric_dellac, N) == brute(Kind::symmetric_dellac, N));
  }
}

TEST_CASE("family sizes") {
  const std::vector<std::size_t> h{1, 2, 7, 38, 295};
  for (int N = 1; N <= 5; ++N) CHECK(count_configs(Kind::dellac, N) == h[N - 1]);
  for (int n = 1; n <= 5; ++n) {
    // (n+1)! n! / 2^n and ((n+1)!)^2 / 2^n
    CHECK(BigInt(count_configs(Kind::even_extended, n)) == factorial(n + 1) * factorial(n) / pow2(n));
    CHECK(BigInt(count_configs(Kind::odd_extended, n)) == factorial(n + 1) * factorial(n + 1) / pow2(n));
  }
  CHECK(count_configs(Kind::symmetric_dellac, 6) == 98);
  CHECK(count_configs(Kind::symmetric_dellac, 5) == 21);
}

TEST_CASE("limit stops the stream with LimitExceeded") {
  EnumOptions o;
  o.limit = 5;
  std::size_t seen = 0;
  CHECK_THROWS_AS(enum_dc(3, [&](const Tableau&) { ++seen; }, o), LimitExceeded);
  CHECK(seen == 5);
  o.limit = 7;
  CHECK(enum_dc(3, [](const Tableau&) {}, o) == 7);
}

TEST_CASE("partitioned streams and the parallel driver cover everything once") {
  for (Kind k : {Kind::dellac, Kind::even_extended, Kind::odd_extended, Kind::symmetric_dellac}) {
    const int n = k == Kind::symmetric_dellac ? 6 : 3;
    const auto all = collect_configs(k, n);
    std::vector<Tableau> joined;
    for (const auto& prefix : stream_partitions(k, n, 2)) {
      EnumOptions o;
      o.prefix = prefix;
      for (const auto& t : collect_configs(k, n, o)) joined.push_back(t);
    }
    CHECK(joined == all);

    std::vector<std::vector<Tableau>> parts(3);
    parallel_for_each_config(k, n, 3, [&](int w, const Tableau& t) { parts[w].push_back(t); });
    std::multiset<Tableau> merged;
    for (auto& p : parts) merged.insert(p.begin(), p.end());
    CHECK(merged == std::multiset<Tableau>(all.begin(), all.end()));
  }
}

TEST_CASE("labelings count up in binary from the lowest free point") {
  const Tableau t(2, {1, 1, 2, 2});
  const auto ls = enum_labeled(t);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0].labels == std::vector<std::pair<Box, int>>{{{2, 3}, 0}, {{2, 4}, 0}});
  CHECK(ls[1].labels == std::vector<std::pair<Box, int>>{{{2, 3}, 1}, {{2, 4}, 0}});
  CHECK(ls[3].labels == std::vector<std::pair<Box, int>>{{{2, 3}, 1}, {{2, 4}, 1}});
  for (const auto& l : ls) CHECK(labels_match_free_points(l));
}

TEST_CASE("surjective pistols match brute force") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<SurjectivePistol> want;
    const int m = 2 * n;
    std::vector<int> v(m, 2);
    while (true) {
      SurjectivePistol f{v};
      if (is_surjective_pistol(f)) want.push_back(f);
      int k = m - 1;
      while (k >= 0 && v[k] == m) v[k--] = 2;
      if (k < 0) break;
      v[k] += 2;
    }
    CHECK(collect_sp(n) == want);
  }
  CHECK(collect_sp(2).size() == 3);
  CHECK(collect_sp(3).size() == 17);
  CHECK_FALSE(is_surjective_pistol({{2, 2, 2, 4}}));  // f(3) < 3
  CHECK_FALSE(is_surjective_pistol({{4, 4, 4, 4}}));  // misses 2
}
