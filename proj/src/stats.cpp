#include "dellac/stats.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dellac {

std::vector<Inversion> inversions(const Tableau& d) {
  std::vector<Inversion> out;
  const auto pts = d.points();
  for (const Box& p1 : pts)
    for (const Box& p2 : pts)
      if (p1.col < p2.col && p1.row > p2.row) out.emplace_back(p1, p2);
  return out;
}

int inv(const Tableau& d) { return static_cast<int>(inversions(d).size()); }

namespace {

Box half_turn(const Tableau& d, const Box& p) {
  return {d.width() + 1 - p.col, d.height() + 1 - p.row};
}

}  // namespace

int tilde_inv(const Tableau& d) {
  std::set<Inversion> orbits;
  for (const auto& [p1, p2] : inversions(d)) {
    Inversion mirror{half_turn(d, p2), half_turn(d, p1)};
    orbits.insert(std::min(Inversion{p1, p2}, mirror));
  }
  return static_cast<int>(orbits.size());
}

int fixed_pairs(const Tableau& d) {
  int k = 0;
  for (const auto& [p1, p2] : inversions(d))
    if (half_turn(d, p1) == p2) ++k;
  return k;
}

int bar_inv(const Tableau& d) { return tilde_inv(d) - fixed_pairs(d); }

// ---------------------------------------------------------------------------

std::vector<Box> path_S(const Tableau& t, int start_row) {
  const int n = t.width();
  const int h = t.height();
  if (start_row < 1 || start_row > h) throw std::invalid_argument("start row out of range");
  if (t.is_empty(start_row)) return {};

  const ColumnIndex cols(t);
  std::vector<bool> seen(h + 1, false);
  std::vector<Box> records;
  Box p{t.col(start_row), start_row};
  for (int steps = 0;; ++steps) {
    if (steps > 4 * h) throw std::logic_error("path walk did not settle");
    if (records.empty() || p.col > records.back().col) records.push_back(p);
    if (p.col == n) break;
    seen[p.row] = true;
    const int next = cols.is_upper(p) ? h - p.col : p.col;
    // An empty target row (odd case) freezes the walk; a revisit means the
    // walk has entered a cycle and shows nothing new.
    if (t.is_empty(next) || seen[next]) break;
    p = {t.col(next), next};
  }
  return records;
}

bool root_defined(const Tableau& t, int col, int row) {
  const int h = t.height();
  if (col < 1 || col > t.width() || row < col || row > h) return false;
  for (int c = 1; c < col; ++c)
    if (t.points_in_column(c) != 2) return false;
  for (int i = 1; i < col; ++i)
    if (t.is_empty(i) || t.col(i) > i) return false;
  return t.is_empty(row) || t.col(row) >= col;
}

std::vector<int> iota_path(const Tableau& t, int col, int row) {
  if (!root_defined(t, col, row))
    throw std::invalid_argument("root undefined at box " + to_string(Box{col, row}));
  const int h = t.height();
  const ColumnIndex cols(t);
  std::vector<int> seq{row};
  int i = row;
  for (int steps = 0;; ++steps) {
    if (steps > 4 * h) throw std::logic_error("reverse walk did not settle");
    if ((i >= col && i <= h - col) || i == h) break;
    if (i >= h - col + 1) {
      i = cols.upper(h - i);
    } else {
      i = cols.lower(i);
    }
    if (i == 0) throw std::logic_error("reverse walk reached an incomplete column");
    seq.push_back(i);
  }
  seq.push_back(i);
  return seq;
}

int root(const Tableau& t, int col, int row) { return iota_path(t, col, row).back(); }

// ---------------------------------------------------------------------------

namespace {

bool has(const std::vector<Box>& v, const Box& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

std::vector<Box> green_points(const Tableau& t, const ColumnIndex& cols,
                              const std::vector<Box>& anchor) {
  std::vector<Box> out;
  for (const Box& p : free_points(t)) {
    if (!has(anchor, cols.partner(p))) continue;
    if (root(t, p.col, p.row) == p.col) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_before_last_column(const std::vector<Box>& v, int n) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [n](const Box& p) { return p.col < n; }));
}

}  // namespace

PathReport path_report(const Tableau& t) {
  const int n = t.width();
  if (t.height() != 2 * n) throw std::invalid_argument("path_report expects an even extended tableau");
  const ColumnIndex cols(t);
  PathReport rep;
  rep.fr = free_count(t);
  rep.B = path_S(t, n);
  rep.R = path_S(t, 2 * n);
  rep.G = green_points(t, cols, rep.B);
  rep.b = static_cast<int>(rep.B.size()) - 1;
  rep.r = static_cast<int>(rep.R.size()) - 1;
  rep.g = static_cast<int>(rep.G.size());
  rep.max = rep.b + rep.r + rep.g;
  rep.omax = static_cast<int>(omax_set(rep).size());

  if (n < 2) return rep;

  const int j_below = t.col(n - 1), j_above = t.col(n + 1);
  rep.i_min = j_below <= j_above ? n - 1 : n + 1;
  rep.i_max = j_below <= j_above ? n + 1 : n - 1;
  auto in_column = [](const std::vector<Box>& v, int c) {
    return std::any_of(v.begin(), v.end(), [c](const Box& p) { return p.col == c; });
  };
  int first = 0, second = 0;
  if (in_column(rep.R, n - 1)) {
    rep.prime_case = 1;
    first = rep.i_min, second = rep.i_max;
  } else if (in_column(rep.G, n - 1)) {
    rep.prime_case = 2;
    first = rep.i_max, second = rep.i_min;
  } else if (is_free(t, {t.col(n + 1), n + 1})) {
    rep.prime_case = 3;
    first = n + 1, second = n - 1;
  } else {
    rep.prime_case = 4;
    first = n - 1, second = n + 1;
  }
  rep.Bprime = path_S(t, first);
  rep.Rprime = path_S(t, second);
  rep.Gprime = green_points(t, cols, rep.Bprime);
  rep.bP = count_before_last_column(rep.Bprime, n);
  rep.rP = count_before_last_column(rep.Rprime, n);
  rep.gP = count_before_last_column(rep.Gprime, n);
  rep.maxP = rep.bP + rep.rP + rep.gP;
  return rep;
}

PathReport path_report_odd(const Tableau& t) {
  const int n = t.width();
  if (t.height() != 2 * n + 1) throw std::invalid_argument("path_report_odd expects an odd extended tableau");
  const ColumnIndex cols(t);
  PathReport rep;
  rep.odd = true;
  rep.fr = free_count(t);
  rep.V = path_S(t, 2 * n + 1);
  rep.G = green_points(t, cols, rep.V);
  rep.v = static_cast<int>(rep.V.size());
  rep.g = static_cast<int>(rep.G.size());
  return rep;
}

std::vector<Box> max_set(const PathReport& rep) {
  std::vector<Box> out;
  if (!rep.B.empty()) out.insert(out.end(), rep.B.begin(), rep.B.end() - 1);
  if (!rep.R.empty()) out.insert(out.end(), rep.R.begin(), rep.R.end() - 1);
  out.insert(out.end(), rep.G.begin(), rep.G.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Box> omax_set(const PathReport& rep) {
  std::vector<Box> out = rep.B;
  out.insert(out.end(), rep.R.begin(), rep.R.end());
  out.insert(out.end(), rep.G.begin(), rep.G.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Box> max_prime_set(const PathReport& rep, int n) {
  std::vector<Box> out;
  for (const auto* v : {&rep.Bprime, &rep.Rprime, &rep.Gprime})
    for (const Box& p : *v)
      if (p.col < n) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

const char* label_name(ForwardLabel l) {
  switch (l) {
    case ForwardLabel::beta: return "beta";
    case ForwardLabel::rho: return "rho";
    case ForwardLabel::gamma: return "gamma";
  }
  return "?";
}

const char* label_name(NuLabel l) { return l == NuLabel::nu ? "nu" : "gamma"; }

std::map<Box, ForwardLabel> assign_forward_labels(const Tableau& t, const PathReport& rep) {
  const int n = t.width();
  const ColumnIndex cols(t);
  std::map<Box, ForwardLabel> out;
  auto restrict = [n](const std::vector<Box>& v) {
    std::vector<Box> r;
    for (const Box& p : v)
      if (p.col < n) r.push_back(p);
    return r;
  };
  const auto B = restrict(rep.B), R = restrict(rep.R), G = restrict(rep.G);
  const auto Bp = restrict(rep.Bprime), Rp = restrict(rep.Rprime), Gp = restrict(rep.Gprime);

  // Column pairs: one point on B with its partner on B', or one on R' with
  // its partner on R.
  for (const Box& p1 : B) {
    Box p2 = cols.partner(p1);
    if (has(Bp, p2) && !out.count(p1) && !out.count(p2)) {
      out[p1] = ForwardLabel::beta;
      out[p2] = ForwardLabel::gamma;
    }
  }
  for (const Box& p1 : Rp) {
    Box p2 = cols.partner(p1);
    if (has(R, p2) && !out.count(p1) && !out.count(p2)) {
      out[p1] = ForwardLabel::beta;
      out[p2] = ForwardLabel::gamma;
    }
  }
  auto label_rest = [&](const std::vector<Box>& v, ForwardLabel l) {
    for (const Box& p : v)
      if (!out.count(p)) out[p] = l;
  };
  label_rest(B, ForwardLabel::beta);
  label_rest(Bp, ForwardLabel::beta);
  label_rest(R, ForwardLabel::rho);
  label_rest(Rp, ForwardLabel::rho);
  label_rest(G, ForwardLabel::gamma);
  label_rest(Gp, ForwardLabel::gamma);
  return out;
}

std::map<Box, ForwardLabel> assign_forward_labels(const Tableau& t) {
  return assign_forward_labels(t, path_report(t));
}

std::map<Box, NuLabel> assign_nu_labels(const Tableau& t, const PathReport& rep) {
  std::map<Box, NuLabel> out;
  for (const Box& p : max_set(rep)) out[p] = NuLabel::nu;
  for (const Box& p : rep.G) out[p] = NuLabel::gamma;
  (void)t;
  return out;
}

}  // namespace dellac
