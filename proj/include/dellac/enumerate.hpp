#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dellac/tableau.hpp"

namespace dellac {

// Raised when a stream would yield more items than the caller's cap.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(std::size_t limit)
      : std::runtime_error("enumeration limit of " + std::to_string(limit) + " items exceeded"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

struct EnumOptions {
  std::optional<std::size_t> limit;
  // Fixed leading row choices (bottom rows first). For symmetric_dellac the
  // prefix covers the lower half only, since the upper half is its mirror.
  std::vector<int> prefix;
};

using TableauVisitor = std::function<void(const Tableau&)>;

// Streams every configuration of the kind exactly once, in ascending
// lexicographic order of rows() (empty row sorts first). The visited tableau
// is a scratch buffer owned by the stream; copy it to keep it. Returns the
// number of items yielded.
std::size_t for_each_config(Kind kind, int n, const TableauVisitor& visit,
                            const EnumOptions& opts = {});

std::vector<Tableau> collect_configs(Kind kind, int n, const EnumOptions& opts = {});
std::size_t count_configs(Kind kind, int n);

inline std::size_t enum_dc(int n, const TableauVisitor& v, const EnumOptions& o = {}) {
  return for_each_config(Kind::dellac, n, v, o);
}
inline std::size_t enum_sdc(int n, const TableauVisitor& v, const EnumOptions& o = {}) {
  return for_each_config(Kind::symmetric_dellac, n, v, o);
}
inline std::size_t enum_te(int n, const TableauVisitor& v, const EnumOptions& o = {}) {
  return for_each_config(Kind::even_extended, n, v, o);
}
inline std::size_t enum_to(int n, const TableauVisitor& v, const EnumOptions& o = {}) {
  return for_each_config(Kind::odd_extended, n, v, o);
}

// Locally admissible row prefixes of the given depth, in stream order. Some
// may have no completion; streams restricted to them partition the full
// stream either way.
std::vector<std::vector<int>> stream_partitions(Kind kind, int n, int depth);

// Runs `visit` over the full stream split across `threads` workers. Each
// worker gets its own index; the visitor must only touch per-worker state.
void parallel_for_each_config(Kind kind, int n, int threads,
                              const std::function<void(int worker, const Tableau&)>& visit);

// All 2^fr labelings of the free points, counting up in binary with the
// lowest free point as the least significant bit.
std::vector<LabeledExtended> enum_labeled(const Tableau& t);

// f : [2n] -> {2, 4, ..., 2n}, onto, with f(j) >= j.
struct SurjectivePistol {
  std::vector<int> values;  // values[j-1] = f(j)

  int n() const { return static_cast<int>(values.size()) / 2; }
  int operator()(int j) const { return values[j - 1]; }
  bool operator==(const SurjectivePistol&) const = default;
};

bool is_surjective_pistol(const SurjectivePistol& f);

std::size_t enum_sp(int n, const std::function<void(const SurjectivePistol&)>& visit,
                    const EnumOptions& opts = {});
std::vector<SurjectivePistol> collect_sp(int n);

}  // namespace dellac
