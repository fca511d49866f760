#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dellac/tableau.hpp"

namespace dellac {

// ---------------------------------------------------------------------------
// Inversions on Dellac configurations.

using Inversion = std::pair<Box, Box>;  // first is strictly left of and above second

std::vector<Inversion> inversions(const Tableau& d);
int inv(const Tableau& d);
// Orbits of (p1, p2) -> (r(p2), r(p1)) on the inversion set, r the half-turn.
int tilde_inv(const Tableau& d);
// Inversions of the form (p, r(p)).
int fixed_pairs(const Tableau& d);
int bar_inv(const Tableau& d);

// ---------------------------------------------------------------------------
// Paths and roots on extended configurations. Every function here works on
// both T_n^e (height 2n) and T_n^o (height 2n+1); the height decides.

// The column-record subsequence of the deterministic walk started at the
// point of row `start_row`. Empty when that row is empty.
std::vector<Box> path_S(const Tableau& t, int start_row);

// Reverse walk of row indices from box (col:row), truncated right after the
// root shows up twice, e.g. (10, 14, 14). Throws std::invalid_argument when
// root_defined() fails.
std::vector<int> iota_path(const Tableau& t, int col, int row);
int root(const Tableau& t, int col, int row);

// True when (col, row) satisfies the hypotheses of root(): columns before
// `col` hold two points, rows 1..col-1 hold one point with j <= i, and row
// `row` lies in [col, H] with its first col-1 boxes empty.
bool root_defined(const Tableau& t, int col, int row);

struct PathReport {
  bool odd = false;

  // T_n^e
  std::vector<Box> B, R;
  std::vector<Box> G;  // sorted by column
  std::vector<Box> Bprime, Rprime, Gprime;
  int b = 0, r = 0, g = 0;
  int bP = 0, rP = 0, gP = 0;  // counted over columns 1..n-1 only
  int max = 0, omax = 0, maxP = 0;
  int i_min = 0, i_max = 0;
  int prime_case = 0;  // which of the four B'/R' cases fired, 1-based

  // T_n^o (G shared with the even case)
  std::vector<Box> V;
  int v = 0;

  int fr = 0;
};

PathReport path_report(const Tableau& t);      // T_n^e
PathReport path_report_odd(const Tableau& t);  // T_n^o

// Max(T): B and R without their last points, plus G.
std::vector<Box> max_set(const PathReport& rep);
// Omax(T): all of B, R and G.
std::vector<Box> omax_set(const PathReport& rep);
// Max'(T): elements of B', R', G' lying in columns 1..n-1.
std::vector<Box> max_prime_set(const PathReport& rep, int n);

// ---------------------------------------------------------------------------
// Point labels driving the surjections.

enum class ForwardLabel { beta, rho, gamma };
enum class NuLabel { nu, gamma };

const char* label_name(ForwardLabel l);
const char* label_name(NuLabel l);

// Labels of Max(T) and Max'(T) (columns 1..n-1). When a point matches more
// than one rule the first listed rule wins.
std::map<Box, ForwardLabel> assign_forward_labels(const Tableau& t, const PathReport& rep);
std::map<Box, ForwardLabel> assign_forward_labels(const Tableau& t);
// B and R points of Max(T) get nu, G points get gamma.
std::map<Box, NuLabel> assign_nu_labels(const Tableau& t, const PathReport& rep);

}  // namespace dellac
