#include "dellac/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dellac {

namespace {

// Row-by-row backtracking over the kinds that fill rows bottom to top. For the
// symmetric kind each step fixes row i together with its mirror row 2N+1-i.
class Backtracker {
 public:
  Backtracker(Kind kind, int n, const EnumOptions& opts)
      : kind_(kind), n_(n), opts_(opts), cap_(n + 1, 0) {
    const int h = kind == Kind::odd_extended ? 2 * n + 1 : 2 * n;
    t_ = Tableau(n, h);
    depth_ = kind == Kind::symmetric_dellac ? n : h;
  }

  std::size_t run(const TableauVisitor& visit) {
    visit_ = &visit;
    yielded_ = 0;
    step(1);
    return yielded_;
  }

  // Collects partial rows of length `depth` without completing them.
  std::vector<std::vector<int>> prefixes(int depth) {
    stop_depth_ = depth;
    prefixes_.clear();
    step(1);
    return std::move(prefixes_);
  }

 private:
  int lo(int i) const {
    if (kind_ == Kind::dellac) return std::max(1, i - n_);
    return 1;
  }
  int hi(int i) const { return std::min(n_, i); }

  bool allows_empty(int i) const {
    return kind_ == Kind::odd_extended && i > n_ && !empty_used_;
  }

  bool deadline_ok(int i) const {
    // A Dellac column c receives no points after row N + c.
    if (kind_ == Kind::dellac && i - n_ >= 1) return cap_[i - n_] == 2;
    return true;
  }

  void emit() {
    if (opts_.limit && yielded_ >= *opts_.limit) throw LimitExceeded(*opts_.limit);
    ++yielded_;
    (*visit_)(t_);
  }

  void step(int i) {
    if (stop_depth_ >= 0 && i > stop_depth_) {
      std::vector<int> p(t_.rows().begin(), t_.rows().begin() + stop_depth_);
      prefixes_.push_back(std::move(p));
      return;
    }
    if (i > depth_) {
      emit();
      return;
    }
    const bool forced = i <= static_cast<int>(opts_.prefix.size());
    const int only = forced ? opts_.prefix[i - 1] : -1;

    if (kind_ == Kind::symmetric_dellac) {
      const int mirror = 2 * n_ + 1 - i;
      for (int c = 1; c <= hi(i); ++c) {
        if (forced && c != only) continue;
        const int d = n_ + 1 - c;
        ++cap_[c];
        ++cap_[d];
        if (cap_[c] <= 2 && cap_[d] <= 2) {
          t_.place(i, c);
          t_.place(mirror, d);
          step(i + 1);
          t_.clear(i);
          t_.clear(mirror);
        }
        --cap_[c];
        --cap_[d];
      }
      return;
    }

    if (allows_empty(i) && (!forced || only == 0)) {
      empty_used_ = true;
      step(i + 1);
      empty_used_ = false;
    }
    for (int c = lo(i); c <= hi(i); ++c) {
      if (forced && c != only) continue;
      if (cap_[c] == 2) continue;
      ++cap_[c];
      t_.place(i, c);
      if (deadline_ok(i)) step(i + 1);
      t_.clear(i);
      --cap_[c];
    }
  }

  Kind kind_;
  int n_;
  const EnumOptions& opts_;
  Tableau t_;
  int depth_ = 0;
  std::vector<int> cap_;
  bool empty_used_ = false;
  const TableauVisitor* visit_ = nullptr;
  std::size_t yielded_ = 0;
  int stop_depth_ = -1;
  std::vector<std::vector<int>> prefixes_;
};

}  // namespace

std::size_t for_each_config(Kind kind, int n, const TableauVisitor& visit,
                            const EnumOptions& opts) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  Backtracker bt(kind, n, opts);
  return bt.run(visit);
}

std::vector<Tableau> collect_configs(Kind kind, int n, const EnumOptions& opts) {
  std::vector<Tableau> out;
  for_each_config(kind, n, [&](const Tableau& t) { out.push_back(t); }, opts);
  return out;
}

std::size_t count_configs(Kind kind, int n) {
  return for_each_config(kind, n, [](const Tableau&) {});
}

std::vector<std::vector<int>> stream_partitions(Kind kind, int n, int depth) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  const int max_depth = kind == Kind::symmetric_dellac ? n
                        : kind == Kind::odd_extended   ? 2 * n + 1
                                                       : 2 * n;
  depth = std::clamp(depth, 0, max_depth);
  EnumOptions none;
  Backtracker bt(kind, n, none);
  return bt.prefixes(depth);
}

void parallel_for_each_config(Kind kind, int n, int threads,
                              const std::function<void(int, const Tableau&)>& visit) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for_each_config(kind, n, [&](const Tableau& t) { visit(0, t); });
    return;
  }
  // Split deep enough that there are several prefixes per worker.
  int depth = 1;
  auto parts = stream_partitions(kind, n, depth);
  const int max_depth = kind == Kind::symmetric_dellac ? n : 2 * n;
  while (parts.size() < static_cast<std::size_t>(4 * threads) && depth < max_depth)
    parts = stream_partitions(kind, n, ++depth);

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k; (k = next.fetch_add(1)) < parts.size();) {
        EnumOptions o;
        o.prefix = parts[k];
        for_each_config(kind, n, [&](const Tableau& t) { visit(w, t); }, o);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<LabeledExtended> enum_labeled(const Tableau& t) {
  const auto fp = free_points(t);
  if (fp.size() >= 31) throw std::invalid_argument("too many free points");
  std::vector<LabeledExtended> out;
  const unsigned total = 1u << fp.size();
  out.reserve(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    LabeledExtended l{t, {}};
    for (std::size_t k = 0; k < fp.size(); ++k) l.labels.emplace_back(fp[k], (mask >> k) & 1u);
    out.push_back(std::move(l));
  }
  return out;
}

bool is_surjective_pistol(const SurjectivePistol& f) {
  if (f.values.empty() || f.values.size() % 2 != 0) return false;
  const int n = f.n();
  std::vector<bool> hit(n + 1, false);
  for (int j = 1; j <= 2 * n; ++j) {
    int v = f(j);
    if (v < j || v > 2 * n || v % 2 != 0) return false;
    hit[v / 2] = true;
  }
  for (int k = 1; k <= n; ++k)
    if (!hit[k]) return false;
  return true;
}

namespace {

void pistol_step(int j, int n, SurjectivePistol& f, std::vector<int>& uses,
                 int missing, const std::function<void(const SurjectivePistol&)>& visit,
                 const EnumOptions& opts, std::size_t& yielded) {
  if (j > 2 * n) {
    if (missing != 0) return;
    if (opts.limit && yielded >= *opts.limit) throw LimitExceeded(*opts.limit);
    ++yielded;
    visit(f);
    return;
  }
  // Value 2k can only be hit by positions j <= 2k, so once j passes 2k the
  // value must already be used.
  for (int v = (j + 1) / 2 * 2; v <= 2 * n; v += 2) {
    const bool fresh = uses[v / 2] == 0;
    ++uses[v / 2];
    f.values[j - 1] = v;
    const int still_missing = missing - (fresh ? 1 : 0);
    const bool dead = (j % 2 == 0) && uses[j / 2] == 0;
    if (!dead) pistol_step(j + 1, n, f, uses, still_missing, visit, opts, yielded);
    --uses[v / 2];
  }
}

}  // namespace

std::size_t enum_sp(int n, const std::function<void(const SurjectivePistol&)>& visit,
                    const EnumOptions& opts) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  SurjectivePistol f{std::vector<int>(2 * n, 0)};
  std::vector<int> uses(n + 1, 0);
  std::size_t yielded = 0;
  pistol_step(1, n, f, uses, n, visit, opts, yielded);
  return yielded;
}

std::vector<SurjectivePistol> collect_sp(int n) {
  std::vector<SurjectivePistol> out;
  enum_sp(n, [&](const SurjectivePistol& f) { out.push_back(f); });
  return out;
}

}  // namespace dellac
