#include "dellac/tableau.hpp"

#include <stdexcept>

namespace dellac {

std::string to_string(const Box& b) {
  return std::to_string(b.col) + ":" + std::to_string(b.row);
}

Box parse_box(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("box must look like \"j:i\": " + s);
  try {
    std::size_t used_col = 0, used_row = 0;
    int col = std::stoi(s.substr(0, colon), &used_col);
    int row = std::stoi(s.substr(colon + 1), &used_row);
    if (used_col != colon || used_row != s.size() - colon - 1)
      throw std::invalid_argument("trailing characters");
    return {col, row};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("box must look like \"j:i\": " + s);
  }
}

const char* kind_tag(Kind k) {
  switch (k) {
    case Kind::dellac: return "dc";
    case Kind::symmetric_dellac: return "sdc";
    case Kind::even_extended: return "te";
    case Kind::odd_extended: return "to";
  }
  return "?";
}

Kind parse_kind(const std::string& tag) {
  if (tag == "dc") return Kind::dellac;
  if (tag == "sdc") return Kind::symmetric_dellac;
  if (tag == "te") return Kind::even_extended;
  if (tag == "to") return Kind::odd_extended;
  throw std::invalid_argument("unknown kind: " + tag);
}

Tableau::Tableau(int width, int height) : width_(width), rows_(height, 0) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("tableau dimensions must be positive");
}

Tableau::Tableau(int width, std::vector<int> rows)
    : width_(width), rows_(std::move(rows)) {
  if (width < 1 || rows_.empty())
    throw std::invalid_argument("tableau dimensions must be positive");
  for (int c : rows_)
    if (c < 0 || c > width)
      throw std::invalid_argument("column out of range: " + std::to_string(c));
}

std::vector<Box> Tableau::points() const {
  std::vector<Box> out;
  out.reserve(rows_.size());
  for (int i = 1; i <= height(); ++i)
    if (col(i) != 0) out.push_back({col(i), i});
  return out;
}

bool Tableau::contains(const Box& b) const {
  return b.row >= 1 && b.row <= height() && b.col != 0 && col(b.row) == b.col;
}

int Tableau::points_in_column(int c) const {
  int k = 0;
  for (int v : rows_) k += (v == c);
  return k;
}

ColumnIndex::ColumnIndex(const Tableau& t) : rows_(t.width(), {0, 0}) {
  for (int i = 1; i <= t.height(); ++i) {
    int c = t.col(i);
    if (c == 0) continue;
    auto& slot = rows_[c - 1];
    if (slot[0] == 0) {
      slot[0] = i;
    } else if (slot[1] == 0) {
      slot[1] = i;
    } else {
      throw std::invalid_argument("column " + std::to_string(c) +
                                  " holds more than two points");
    }
  }
}

int ColumnIndex::count(int col) const {
  return (rows_[col - 1][0] != 0) + (rows_[col - 1][1] != 0);
}

Box ColumnIndex::partner(const Box& p) const {
  const auto& r = rows_[p.col - 1];
  if (r[0] == p.row) return {p.col, r[1]};
  return {p.col, r[0]};
}

namespace {

ValidityReport fail(std::string what, std::optional<Box> where = std::nullopt) {
  return {false, std::move(what), where};
}

}  // namespace

ValidityReport validate(const Tableau& t, Kind kind, int n) {
  if (n < 1) return fail("size parameter must be positive");
  if (t.width() != n) return fail("width must equal n");
  const int expected_h = kind == Kind::odd_extended ? 2 * n + 1 : 2 * n;
  if (t.height() != expected_h) return fail("height must equal " + std::to_string(expected_h));

  // Column capacity first, so later checks can assume at most two per column.
  std::vector<int> per_col(n + 1, 0);
  for (int i = 1; i <= t.height(); ++i) {
    int c = t.col(i);
    if (c != 0 && ++per_col[c] > 2) return fail("column holds more than two points", Box{c, i});
  }

  if (kind == Kind::odd_extended) {
    int empties = 0;
    for (int i = 1; i <= t.height(); ++i) {
      if (!t.is_empty(i)) continue;
      if (i <= n) return fail("row below n+1 is empty", Box{0, i});
      if (++empties > 1) return fail("more than one empty row", Box{0, i});
    }
    if (empties == 0) return fail("no empty row");
  } else {
    for (int i = 1; i <= t.height(); ++i)
      if (t.is_empty(i)) return fail("row is empty", Box{0, i});
  }

  for (int c = 1; c <= n; ++c)
    if (per_col[c] != 2) return fail("column does not hold exactly two points", Box{c, 0});

  for (const Box& p : t.points()) {
    if (p.col > p.row) return fail("point violates j <= i", p);
    if ((kind == Kind::dellac || kind == Kind::symmetric_dellac) && p.row > n + p.col)
      return fail("point violates i <= N + j", p);
  }

  if (kind == Kind::symmetric_dellac) {
    for (const Box& p : t.points()) {
      Box image{n + 1 - p.col, 2 * n + 1 - p.row};
      if (!t.contains(image)) return fail("configuration is not fixed by the half-turn", p);
    }
  }
  return {};
}

ValidityReport validate(const Tableau& t, Kind kind) { return validate(t, kind, t.width()); }

Tableau rotate_pi(const Tableau& d) {
  const int w = d.width(), h = d.height();
  Tableau out(w, h);
  for (const Box& p : d.points()) out.place(h + 1 - p.row, w + 1 - p.col);
  return out;
}

bool is_symmetric(const Tableau& d) { return rotate_pi(d) == d; }

namespace {

int free_threshold(const Tableau& t) {
  const int n = t.width();
  return t.height() % 2 == 0 ? 2 * n + 1 : 2 * n + 2;
}

}  // namespace

bool is_free(const Tableau& t, const Box& p) { return p.row + p.col >= free_threshold(t); }

std::vector<Box> free_points(const Tableau& t) {
  std::vector<Box> out;
  const int threshold = free_threshold(t);
  for (const Box& p : t.points())
    if (p.row + p.col >= threshold) out.push_back(p);
  return out;
}

int free_count(const Tableau& t) {
  int k = 0;
  const int threshold = free_threshold(t);
  for (int i = 1; i <= t.height(); ++i)
    if (t.col(i) != 0 && i + t.col(i) >= threshold) ++k;
  return k;
}

int empty_row(const Tableau& t) {
  for (int i = 1; i <= t.height(); ++i)
    if (t.is_empty(i)) return i;
  return 0;
}

Tableau delete_empty_row(const Tableau& t) {
  const int e = empty_row(t);
  if (e == 0) throw std::invalid_argument("tableau has no empty row");
  std::vector<int> rows;
  rows.reserve(t.height() - 1);
  for (int i = 1; i <= t.height(); ++i)
    if (i != e) rows.push_back(t.col(i));
  return Tableau(t.width(), std::move(rows));
}

Tableau insert_empty_row(const Tableau& t, int row) {
  if (row < 1 || row > t.height() + 1) throw std::invalid_argument("row out of range");
  std::vector<int> rows = t.rows();
  rows.insert(rows.begin() + (row - 1), 0);
  return Tableau(t.width(), std::move(rows));
}

bool labels_match_free_points(const LabeledExtended& l) {
  auto fp = free_points(l.base);
  if (fp.size() != l.labels.size()) return false;
  for (std::size_t k = 0; k < fp.size(); ++k) {
    if (fp[k] != l.labels[k].first) return false;
    if (l.labels[k].second != 0 && l.labels[k].second != 1) return false;
  }
  return true;
}

}  // namespace dellac
