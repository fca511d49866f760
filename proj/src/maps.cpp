#include "dellac/maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dellac {

namespace {

bool has(const std::vector<Box>& v, const Box& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

void require_valid(const Tableau& t, Kind kind, const char* what) {
  auto rep = validate(t, kind);
  if (!rep) throw std::logic_error(std::string(what) + " produced an invalid tableau: " + rep.violation);
}

}  // namespace

// ---------------------------------------------------------------------------

Tableau even_expand(const LabeledExtended& l) {
  const Tableau& t = l.base;
  if (!validate(t, Kind::even_extended)) throw std::invalid_argument("even_expand needs a T_n^e tableau");
  if (!labels_match_free_points(l)) throw std::invalid_argument("labels must cover exactly the free points");
  const int n = t.width();
  Tableau d(2 * n, 4 * n);
  std::map<Box, int> bit(l.labels.begin(), l.labels.end());
  for (const Box& p : t.points()) {
    auto it = bit.find(p);
    const int c = (it != bit.end() && it->second == 0) ? 2 * n + 1 - p.col : p.col;
    d.place(p.row, c);
    d.place(4 * n + 1 - p.row, 2 * n + 1 - c);
  }
  return d;
}

LabeledExtended even_reduce(const Tableau& d) {
  if (d.width() % 2 != 0 || !validate(d, Kind::symmetric_dellac))
    throw std::invalid_argument("even_reduce needs an element of SDC_{2n}");
  const int n = d.width() / 2;
  Tableau t(n, 2 * n);
  std::vector<int> bits(2 * n + 1, -1);
  for (int i = 1; i <= 2 * n; ++i) {
    const int c = d.col(i);
    if (c <= n) {
      t.place(i, c);
      if (is_free(t, {c, i})) bits[i] = 1;
    } else {
      const int back = 2 * n + 1 - c;
      if (i + back < 2 * n + 1) throw std::invalid_argument("mirrored point is not free");
      t.place(i, back);
      bits[i] = 0;
    }
  }
  LabeledExtended out{t, {}};
  for (const Box& p : free_points(t)) out.labels.emplace_back(p, bits[p.row]);
  return out;
}

Tableau odd_expand(const LabeledExtended& l) {
  const Tableau& t = l.base;
  if (!validate(t, Kind::odd_extended)) throw std::invalid_argument("odd_expand needs a T_n^o tableau");
  if (!labels_match_free_points(l)) throw std::invalid_argument("labels must cover exactly the free points");
  const int n = t.width();
  const int w = 2 * n + 1, h = 4 * n + 2;
  Tableau d(w, h);
  std::map<Box, int> bit(l.labels.begin(), l.labels.end());
  for (int i = 1; i <= t.height(); ++i) {
    int c;
    if (t.is_empty(i)) {
      c = n + 1;
    } else {
      auto it = bit.find({t.col(i), i});
      c = (it != bit.end() && it->second == 0) ? w + 1 - t.col(i) : t.col(i);
    }
    d.place(i, c);
    d.place(h + 1 - i, w + 1 - c);
  }
  return d;
}

LabeledExtended odd_reduce(const Tableau& d) {
  if (d.width() % 2 != 1 || !validate(d, Kind::symmetric_dellac))
    throw std::invalid_argument("odd_reduce needs an element of SDC_{2n+1}");
  const int n = (d.width() - 1) / 2;
  Tableau t(n, 2 * n + 1);
  std::vector<int> bits(2 * n + 2, -1);
  for (int i = 1; i <= 2 * n + 1; ++i) {
    const int c = d.col(i);
    if (c == n + 1) continue;  // becomes the empty row
    if (c <= n) {
      t.place(i, c);
      if (is_free(t, {c, i})) bits[i] = 1;
    } else {
      const int back = 2 * n + 2 - c;
      if (i + back < 2 * n + 2) throw std::invalid_argument("mirrored point is not free");
      t.place(i, back);
      bits[i] = 0;
    }
  }
  LabeledExtended out{t, {}};
  for (const Box& p : free_points(t)) out.labels.emplace_back(p, bits[p.row]);
  return out;
}

// ---------------------------------------------------------------------------

Box insert_point(Tableau& t, int col, int target) {
  const int h = t.height();
  if (col < 1 || col > t.width()) throw std::invalid_argument("column out of range");
  if (!((target >= col && target <= h - col) || target == h))
    throw std::invalid_argument("insertion target outside [j, H-j] u {H}");
  for (int c = 1; c < col; ++c)
    if (t.points_in_column(c) != 2) throw std::invalid_argument("earlier column is not full");
  for (int i = 1; i < col; ++i)
    if (t.is_empty(i) || t.col(i) > i) throw std::invalid_argument("low row lacks a point on or above the diagonal");
  if (t.points_in_column(col) >= 2) throw std::invalid_argument("column is already full");

  for (int i = col; i <= h; ++i) {
    if (!t.is_empty(i) && t.col(i) < col) continue;
    if (root(t, col, i) != target) continue;
    if (!t.is_empty(i)) throw std::logic_error("insertion lands on an occupied row " + std::to_string(i));
    t.place(i, col);
    return {col, i};
  }
  throw std::logic_error("no row has the requested root");
}

// ---------------------------------------------------------------------------

PiResult pi_forward(const Tableau& t) {
  if (!validate(t, Kind::even_extended)) throw std::invalid_argument("pi_forward needs a T_n^e tableau");
  const int n = t.width();
  if (n < 2) throw std::invalid_argument("pi_forward needs n >= 2");
  const PathReport rep = path_report(t);
  const auto max = max_set(rep);
  const auto max_p = max_prime_set(rep, n);
  const auto labels = assign_forward_labels(t, rep);

  Tableau out(n - 1, 2 * n - 2);
  for (const Box& p : t.points()) {
    if (p.col == n || has(max, p) || has(max_p, p)) continue;
    if (p.row == n || p.row == n + 1) throw std::logic_error("row n or n+1 survives the projection");
    out.place(p.row < n ? p.row : p.row - 2, p.col);
  }

  PiResult res{{}, {}};
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<std::pair<int, Box>> todo;  // (target, source)
    for (const auto& [p, l] : labels) {
      if (p.col != j) continue;
      int target = 0;
      switch (l) {
        case ForwardLabel::beta: target = n - 1; break;
        case ForwardLabel::rho: target = 2 * n - 2; break;
        // In the last column the diagonal target coincides with the beta
        // one; the gamma point there becomes the end of R in the image.
        case ForwardLabel::gamma: target = j < n - 1 ? j : 2 * n - 2; break;
      }
      todo.emplace_back(target, p);
    }
    std::sort(todo.begin(), todo.end());
    for (const auto& [target, src] : todo) {
      Box plotted = insert_point(out, j, target);
      if (has(max, src)) res.X.push_back(plotted);
    }
  }
  std::sort(res.X.begin(), res.X.end());
  require_valid(out, Kind::even_extended, "pi_forward");
  res.image = std::move(out);
  return res;
}

const char* label_name(FiberLabel l) {
  switch (l) {
    case FiberLabel::b: return "b";
    case FiberLabel::r: return "r";
    case FiberLabel::g: return "g";
    case FiberLabel::b_prime: return "b'";
    case FiberLabel::r_prime: return "r'";
    case FiberLabel::g_prime: return "g'";
  }
  return "?";
}

const char* situation_name(FiberSituation s) {
  switch (s) {
    case FiberSituation::S1: return "S1";
    case FiberSituation::S2: return "S2";
    case FiberSituation::S3: return "S3";
  }
  return "?";
}

std::map<Box, FiberLabel> fiber_labels(const Tableau& t0, const PathReport& rep,
                                       const std::vector<Box>& X) {
  using L = FiberLabel;
  const int last = t0.width();
  const ColumnIndex cols(t0);
  auto in_x = [&](const Box& p) { return has(X, p); };
  std::map<Box, L> out;

  for (const Box& p : rep.G) {
    const Box q = cols.partner(p);
    const bool px = in_x(p), qx = in_x(q);
    if (!px && !qx) {
      out[p] = L::g_prime, out[q] = L::b_prime;
    } else if (qx && !px) {
      out[p] = L::b_prime, out[q] = L::b;
    } else if (px && !qx) {
      out[p] = L::r, out[q] = L::r_prime;
    } else {
      out[p] = L::g, out[q] = L::b;
    }
  }
  for (std::size_t k = 0; k + 1 < rep.B.size(); ++k)
    if (!out.count(rep.B[k])) out[rep.B[k]] = in_x(rep.B[k]) ? L::b : L::b_prime;
  for (std::size_t k = 0; k + 1 < rep.R.size(); ++k)
    if (!out.count(rep.R[k])) out[rep.R[k]] = in_x(rep.R[k]) ? L::r : L::r_prime;

  const Box pb = rep.B.back(), pr = rep.R.back();
  if (!in_x(pr)) {
    out[pr] = L::r_prime;
    out[pb] = in_x(pb) ? L::b : L::b_prime;
    return out;
  }
  const auto omax = omax_set(rep);
  int j_min = last;
  for (const Box& p : omax)
    if (!in_x(p)) j_min = std::min(j_min, p.col);
  if (j_min == last) {
    out[pb] = L::b_prime, out[pr] = L::r;
    return out;
  }
  bool has_b_prime = false;
  for (const Box& p : omax)
    if (p.col == j_min && out.count(p) && out[p] == L::b_prime) has_b_prime = true;
  if (has_b_prime) {
    out[pr] = L::r;
    out[pb] = in_x(pb) ? L::b : L::b_prime;
  } else if (!in_x(pb)) {
    out[pb] = L::r_prime, out[pr] = L::r;
  } else {
    out[pb] = L::b, out[pr] = L::g;
  }
  return out;
}

FiberSituation classify_fiber(const Tableau& t0, const PathReport& rep,
                              const std::vector<Box>& X,
                              const std::map<Box, FiberLabel>& labels) {
  (void)t0;
  const int k = static_cast<int>(X.size());
  const int i = rep.max;
  auto is_rg = [&](const Box& p) {
    auto l = labels.at(p);
    return l == FiberLabel::r || l == FiberLabel::g;
  };
  const bool last_rg = is_rg(rep.B.back()) || is_rg(rep.R.back());
  bool any_b_prime = false, any_r_prime = false;
  for (const auto& [p, l] : labels) {
    if (has(X, p)) continue;
    any_b_prime |= l == FiberLabel::b_prime;
    any_r_prime |= l == FiberLabel::r_prime;
  }
  if (k <= i && !last_rg) return FiberSituation::S1;
  if (k == i + 1 || (last_rg && !(any_b_prime && any_r_prime))) return FiberSituation::S2;
  return FiberSituation::S3;
}

Fiber pi_fiber(const Tableau& t0, const std::vector<Box>& X) {
  if (!validate(t0, Kind::even_extended)) throw std::invalid_argument("pi_fiber needs a T_{n-1}^e tableau");
  const PathReport rep = path_report(t0);
  const auto omax = omax_set(rep);
  std::set<Box> xs(X.begin(), X.end());
  if (xs.size() != X.size()) throw std::invalid_argument("X has repeated points");
  for (const Box& p : X)
    if (!has(omax, p)) throw std::invalid_argument("X is not a subset of Omax(T0): " + to_string(p));
  if (X.size() >= omax.size()) throw std::invalid_argument("X must be a proper subset of Omax(T0)");

  const auto labels = fiber_labels(t0, rep, X);
  const FiberSituation sit = classify_fiber(t0, rep, X, labels);
  const int n = t0.width() + 1;

  Tableau base(n, 2 * n);
  for (const Box& p : t0.points())
    if (!has(omax, p)) base.place(p.row < n ? p.row : p.row + 2, p.col);

  using L = FiberLabel;
  const L last_b = labels.at(rep.B.back()), last_r = labels.at(rep.R.back());
  const bool crossed = (last_b == L::r_prime && last_r == L::r) || (last_b == L::b && last_r == L::g);
  const int copies = sit == FiberSituation::S3 ? 2 : 1;
  std::vector<Tableau> members(copies, base);

  for (int j = 1; j <= n - 1; ++j) {
    for (int copy = 0; copy < copies; ++copy) {
      std::vector<int> targets;
      for (const auto& [p, l] : labels) {
        if (p.col != j) continue;
        int target = 0;
        switch (l) {
          case L::b: target = n; break;
          case L::r: target = 2 * n; break;
          case L::g:
          case L::g_prime: target = j; break;
          case L::b_prime:
          case L::r_prime: {
            const bool bprime = l == L::b_prime;
            if (sit == FiberSituation::S1) {
              target = bprime ? n - 1 : n + 1;
            } else if (sit == FiberSituation::S2) {
              target = n - 1;
            } else {
              // T^{3/} is copy 0, T^{3\} is copy 1.
              bool low = bprime ? !crossed : crossed;
              if (copy == 1) low = !low;
              target = low ? n - 1 : n + 1;
            }
            break;
          }
        }
        targets.push_back(target);
      }
      std::sort(targets.begin(), targets.end());
      for (int target : targets) insert_point(members[copy], j, target);
    }
  }
  for (auto& m : members) {
    insert_point(m, n, n);
    insert_point(m, n, 2 * n);
    require_valid(m, Kind::even_extended, "pi_fiber");
  }
  return {sit, std::move(members)};
}

FiberSituation situation_from_tableau(const Tableau& t) {
  const int n = t.width();
  if (is_free(t, {t.col(n + 1), n + 1})) return FiberSituation::S2;
  const PathReport rep = path_report(t);
  for (const auto* v : {&rep.R, &rep.G})
    for (const Box& p : *v)
      if (p.col == n - 1) return FiberSituation::S3;
  return FiberSituation::S1;
}

std::vector<std::vector<Box>> proper_subsets_of_omax(const PathReport& rep) {
  const auto omax = omax_set(rep);
  const int m = static_cast<int>(omax.size());
  std::vector<std::vector<Box>> out;
  for (int size = 0; size < m; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<Box> x;
      for (int k = 0; k < m; ++k)
        if (pick[k]) x.push_back(omax[k]);
      out.push_back(std::move(x));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<Tableau> pi_preimage(const Tableau& t0) {
  std::vector<Tableau> out;
  for (const auto& X : proper_subsets_of_omax(path_report(t0))) {
    auto f = pi_fiber(t0, X);
    for (auto& m : f.members) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------

Tableau p_forward(const Tableau& t) {
  if (!validate(t, Kind::even_extended)) throw std::invalid_argument("p_forward needs a T_n^e tableau");
  const int n = t.width();
  if (n < 2) throw std::invalid_argument("p_forward needs n >= 2");
  const PathReport rep = path_report(t);
  const auto max = max_set(rep);
  const auto labels = assign_nu_labels(t, rep);
  const int h = 2 * n - 1;

  Tableau out(n - 1, h);
  for (const Box& p : t.points()) {
    if (p.col == n || has(max, p)) continue;
    if (p.row == n) throw std::logic_error("row n survives the projection");
    out.place(p.row < n ? p.row : p.row - 1, p.col);
  }
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<NuLabel> here;
    for (const auto& [p, l] : labels)
      if (p.col == j) here.push_back(l);
    if (here.empty()) continue;
    if (here.size() == 1) {
      insert_point(out, j, here[0] == NuLabel::nu ? h : j);
    } else {
      // A B point with an R or G partner: the pair lands on the V slot and
      // the diagonal slot.
      insert_point(out, j, j);
      insert_point(out, j, h);
    }
  }
  require_valid(out, Kind::odd_extended, "p_forward");
  return out;
}

const char* word_name(ColumnWord w) {
  switch (w) {
    case ColumnWord::b: return "b";
    case ColumnWord::r: return "r";
    case ColumnWord::br: return "br";
    case ColumnWord::bg: return "bg";
  }
  return "?";
}

ColumnWord parse_word(const std::string& s) {
  if (s == "b") return ColumnWord::b;
  if (s == "r") return ColumnWord::r;
  if (s == "br") return ColumnWord::br;
  if (s == "bg") return ColumnWord::bg;
  throw std::invalid_argument("unknown column word: " + s);
}

std::vector<int> J_columns(const PathReport& rep) {
  std::set<int> s;
  for (const Box& p : rep.V) s.insert(p.col);
  return {s.begin(), s.end()};
}

std::vector<int> Jg_columns(const PathReport& rep) {
  std::set<int> s;
  for (const Box& p : rep.G) s.insert(p.col);
  return {s.begin(), s.end()};
}

bool is_admissible(const LabelFunction& l, const PathReport& rep) {
  const auto J = J_columns(rep), Jg = Jg_columns(rep);
  if (l.size() != J.size()) return false;
  for (int j : J) {
    auto it = l.find(j);
    if (it == l.end()) return false;
    const bool green = std::find(Jg.begin(), Jg.end(), j) != Jg.end();
    const ColumnWord w = it->second;
    if (green ? w == ColumnWord::b : (w == ColumnWord::br || w == ColumnWord::bg)) return false;
  }
  return true;
}

std::vector<LabelFunction> label_functions(const Tableau& t0) {
  const PathReport rep = path_report_odd(t0);
  const auto J = J_columns(rep), Jg = Jg_columns(rep);
  std::vector<LabelFunction> out{LabelFunction{}};
  for (int j : J) {
    const bool green = std::find(Jg.begin(), Jg.end(), j) != Jg.end();
    std::vector<ColumnWord> options = green
        ? std::vector<ColumnWord>{ColumnWord::br, ColumnWord::bg, ColumnWord::r}
        : std::vector<ColumnWord>{ColumnWord::b, ColumnWord::r};
    std::vector<LabelFunction> next;
    for (const auto& partial : out) {
      for (ColumnWord w : options) {
        auto l = partial;
        l[j] = w;
        next.push_back(std::move(l));
      }
    }
    out = std::move(next);
  }
  return out;
}

Tableau p_fiber(const Tableau& t0, const LabelFunction& l) {
  if (!validate(t0, Kind::odd_extended)) throw std::invalid_argument("p_fiber needs a T_{n-1}^o tableau");
  const PathReport rep = path_report_odd(t0);
  if (!is_admissible(l, rep)) throw std::invalid_argument("label function is not in L(T0)");
  const int n = t0.width() + 1;

  Tableau t(n, 2 * n);
  for (const Box& p : t0.points())
    if (!has(rep.V, p) && !has(rep.G, p)) t.place(p.row < n ? p.row : p.row + 1, p.col);

  const auto Jg = Jg_columns(rep);
  for (const auto& [j, w] : l) {
    const bool green = std::find(Jg.begin(), Jg.end(), j) != Jg.end();
    std::vector<int> targets;
    switch (w) {
      case ColumnWord::b: targets = {n}; break;
      case ColumnWord::r: targets = green ? std::vector<int>{j, 2 * n} : std::vector<int>{2 * n}; break;
      case ColumnWord::br: targets = {n, 2 * n}; break;
      case ColumnWord::bg: targets = {j, n}; break;
    }
    for (int target : targets) insert_point(t, j, target);
  }
  insert_point(t, n, n);
  insert_point(t, n, 2 * n);
  require_valid(t, Kind::even_extended, "p_fiber");
  return t;
}

LabelFunction label_function_of(const Tableau& t) {
  const int n = t.width();
  const PathReport rep = path_report(t);
  LabelFunction out;
  for (int j = 1; j < n; ++j) {
    auto in_col = [j](const std::vector<Box>& v, bool skip_last) {
      const std::size_t end = skip_last && !v.empty() ? v.size() - 1 : v.size();
      for (std::size_t k = 0; k < end; ++k)
        if (v[k].col == j) return true;
      return false;
    };
    const bool b = in_col(rep.B, true), r = in_col(rep.R, true), g = in_col(rep.G, false);
    if (b && r) out[j] = ColumnWord::br;
    else if (b && g) out[j] = ColumnWord::bg;
    else if (b) out[j] = ColumnWord::b;
    else if (r) out[j] = ColumnWord::r;
  }
  return out;
}

std::vector<Tableau> p_preimage(const Tableau& t0) {
  std::vector<Tableau> out;
  for (const auto& l : label_functions(t0)) out.push_back(p_fiber(t0, l));
  return out;
}

}  // namespace dellac
