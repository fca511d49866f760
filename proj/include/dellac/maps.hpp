#pragma once

#include <map>
#include <vector>

#include "dellac/stats.hpp"
#include "dellac/tableau.hpp"

namespace dellac {

// ---------------------------------------------------------------------------
// Labeled extended configurations <-> symmetric Dellac configurations.

// T_n^e with free-point bits -> SDC_{2n}.
Tableau even_expand(const LabeledExtended& l);
// Inverse of even_expand; throws std::invalid_argument on non-symmetric input.
LabeledExtended even_reduce(const Tableau& d);

// T_n^o with free-point bits -> SDC_{2n+1}.
Tableau odd_expand(const LabeledExtended& l);
LabeledExtended odd_reduce(const Tableau& d);

// ---------------------------------------------------------------------------
// Insertion: plot a point in column `col` at the unique row whose root is
// `target`. Returns the plotted box. Throws std::invalid_argument when the
// column hypotheses fail or the target is outside [col, H-col] u {H}.
Box insert_point(Tableau& t, int col, int target);

// ---------------------------------------------------------------------------
// The surjection T_n^e -> T_{n-1}^e.

struct PiResult {
  Tableau image;        // in T_{n-1}^e
  std::vector<Box> X;   // points of the image coming from Max(T), sorted
  bool operator==(const PiResult&) const = default;
};

PiResult pi_forward(const Tableau& t);

enum class FiberLabel { b, r, g, b_prime, r_prime, g_prime };
const char* label_name(FiberLabel l);

enum class FiberSituation { S1, S2, S3 };
const char* situation_name(FiberSituation s);

// Labels of Omax(T0) for a chosen X; the unprimed letters mark exactly X.
std::map<Box, FiberLabel> fiber_labels(const Tableau& t0, const PathReport& rep,
                                       const std::vector<Box>& X);

// Situation computed from the labels.
FiberSituation classify_fiber(const Tableau& t0, const PathReport& rep,
                              const std::vector<Box>& X,
                              const std::map<Box, FiberLabel>& labels);

struct Fiber {
  FiberSituation situation;
  std::vector<Tableau> members;  // one element, or T^{3/} then T^{3\}
};

// X must be a proper subset of Omax(T0); throws std::invalid_argument otherwise.
Fiber pi_fiber(const Tableau& t0, const std::vector<Box>& X);

// Situation read off a member T of the fiber instead of the labels: S2 iff
// p_{n+1} is free; S1 iff additionally column n-1 meets neither R(T) nor G(T).
FiberSituation situation_from_tableau(const Tableau& t);

// Union of pi_fiber over every proper subset X of Omax(T0).
std::vector<Tableau> pi_preimage(const Tableau& t0);

// Every proper subset of Omax(T0), by increasing size then lexicographically.
std::vector<std::vector<Box>> proper_subsets_of_omax(const PathReport& rep);

// ---------------------------------------------------------------------------
// The surjection T_n^e -> T_{n-1}^o.

Tableau p_forward(const Tableau& t);

enum class ColumnWord { b, r, br, bg };
const char* word_name(ColumnWord w);
ColumnWord parse_word(const std::string& s);

using LabelFunction = std::map<int, ColumnWord>;  // column -> word

// J(T0): columns holding a V point; Jg(T0): columns holding a G point.
std::vector<int> J_columns(const PathReport& odd_rep);
std::vector<int> Jg_columns(const PathReport& odd_rep);

// L(T0): b/r off Jg, br/bg/r on Jg.
std::vector<LabelFunction> label_functions(const Tableau& t0);
bool is_admissible(const LabelFunction& l, const PathReport& odd_rep);

// U^l(T0); throws std::invalid_argument when l is not in L(T0).
Tableau p_fiber(const Tableau& t0, const LabelFunction& l);

// The word of each V-column read back from T (the inverse of p_fiber).
LabelFunction label_function_of(const Tableau& t);

std::vector<Tableau> p_preimage(const Tableau& t0);

}  // namespace dellac
