#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace dellac {

// A box (j:i): column j counted from the left, row i counted from the bottom,
// both 1-based.
struct Box {
  int col = 0;
  int row = 0;

  auto operator<=>(const Box&) const = default;
};

std::string to_string(const Box& b);  // "j:i"
Box parse_box(const std::string& s);

enum class Kind {
  dellac,            // DC_N: N x 2N, j <= i <= N + j
  symmetric_dellac,  // SDC_N: DC_N fixed by the half-turn
  even_extended,     // T_n^e: n x 2n, j <= i
  odd_extended,      // T_n^o: n x (2n+1), one empty row among the top n+1
};

const char* kind_tag(Kind k);  // "dc" | "sdc" | "te" | "to"
Kind parse_kind(const std::string& tag);

// Row-major grid with at most one point per row. rows()[i-1] holds the column
// of the point in row i, or 0 when the row is empty.
class Tableau {
 public:
  Tableau() = default;
  Tableau(int width, int height);
  Tableau(int width, std::vector<int> rows);

  int width() const { return width_; }
  int height() const { return static_cast<int>(rows_.size()); }

  int col(int row) const { return rows_[row - 1]; }
  bool is_empty(int row) const { return rows_[row - 1] == 0; }
  void place(int row, int col) { rows_[row - 1] = col; }
  void clear(int row) { rows_[row - 1] = 0; }

  const std::vector<int>& rows() const { return rows_; }
  std::vector<Box> points() const;  // bottom to top
  bool contains(const Box& b) const;
  int points_in_column(int col) const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    return rows_ <=> o.rows_;
  }

 private:
  int width_ = 0;
  std::vector<int> rows_;
};

// Rows of the (at most two) points of each column, lower first; 0 if absent.
class ColumnIndex {
 public:
  explicit ColumnIndex(const Tableau& t);

  int lower(int col) const { return rows_[col - 1][0]; }
  int upper(int col) const { return rows_[col - 1][1]; }
  int count(int col) const;
  bool is_upper(const Box& p) const { return upper(p.col) == p.row; }
  // The other point of p's column; row 0 when p is alone.
  Box partner(const Box& p) const;

 private:
  std::vector<std::array<int, 2>> rows_;
};

struct ValidityReport {
  bool valid = true;
  std::string violation;       // empty when valid
  std::optional<Box> witness;  // offending box (row-only faults use col 0)

  explicit operator bool() const { return valid; }
};

// n is the size parameter of the kind (N for dc/sdc, n for te/to); the width
// must equal n in every case.
ValidityReport validate(const Tableau& t, Kind kind, int n);
ValidityReport validate(const Tableau& t, Kind kind);  // n taken from width

Tableau rotate_pi(const Tableau& d);
bool is_symmetric(const Tableau& d);

// Points on or beyond the anti-diagonal: i + j >= 2n + 1 for T_n^e and
// i + j >= 2n + 2 for T_n^o. The kind is read off the height.
std::vector<Box> free_points(const Tableau& t);
int free_count(const Tableau& t);
bool is_free(const Tableau& t, const Box& p);

int empty_row(const Tableau& t);  // first empty row, 0 if none
Tableau delete_empty_row(const Tableau& t);
Tableau insert_empty_row(const Tableau& t, int row);

// Free-point bits attached to an extended configuration.
struct LabeledExtended {
  Tableau base;
  std::vector<std::pair<Box, int>> labels;  // one entry per free point, by row

  bool operator==(const LabeledExtended&) const = default;
};

bool labels_match_free_points(const LabeledExtended& l);

}  // namespace dellac
