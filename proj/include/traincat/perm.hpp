#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace traincat {

// Raised when an enumeration or dense computation would exceed its size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of N x {1..m}. Indices and colors are 1-based.
struct Point {
  int color = 1;
  int index = 1;

  auto operator<=>(const Point&) const = default;
};

/// Finitely supported permutation of N x {1..m}.
///
/// Stored as a sorted association list of the moved points only, so two equal
/// permutations always have identical storage.
class ColoredPerm {
 public:
  using Entry = std::pair<Point, Point>;

  ColoredPerm() = default;
  explicit ColoredPerm(int color_count);

  /// Validates bijectivity; identity pairs are discarded.
  static ColoredPerm from_entries(int color_count, std::vector<Entry> entries);
  /// Single color; images[i-1] = p(i).
  static ColoredPerm from_images(std::span<const int> images);
  static ColoredPerm from_images(std::initializer_list<int> images);
  /// Single color, product of the given disjoint cycles.
  static ColoredPerm from_cycles(const std::vector<std::vector<int>>& cycles);
  static ColoredPerm transposition(int a, int b);

  int color_count() const { return m_; }
  Point operator()(Point x) const;
  int operator()(int i) const;  // single color shortcut

  std::span<const Entry> entries() const { return map_; }
  std::vector<Point> support() const;
  std::size_t support_size() const { return map_.size(); }
  /// s(g): the largest index moved by g, 0 for the identity.
  int max_index() const;
  bool is_identity() const { return map_.empty(); }

  /// Images of 1..n in color 1 (n at least max_index()).
  std::vector<int> images(int n) const;

  friend bool operator==(const ColoredPerm&, const ColoredPerm&) = default;

 private:
  int m_ = 1;
  std::vector<Entry> map_;
};

/// (p o q)(x) = p(q(x)).
ColoredPerm compose(const ColoredPerm& p, const ColoredPerm& q);
ColoredPerm inverse(const ColoredPerm& p);

/// Nontrivial cycles, each starting at its smallest point; cycles sorted.
std::vector<std::vector<Point>> cycles(const ColoredPerm& p);
/// k -> r_k for k >= 2.
std::map<int, int> cycle_type(const ColoredPerm& p);

/// Fixes 1..beta, swaps beta+1..beta+j with beta+j+1..beta+2j, in every color.
ColoredPerm theta_j(int beta, int j, int color_count = 1);

/// Square 0-1 matrix with at most one unit per row and column.
class Matrix01 {
 public:
  explicit Matrix01(int n = 0);
  /// Rows of 0/1 values; throws if not a partial permutation matrix.
  static Matrix01 from_rows(const std::vector<std::vector<int>>& rows);
  static Matrix01 identity(int n);
  /// Diagonal with units in the first beta positions.
  static Matrix01 theta(int beta, int n);

  int size() const { return static_cast<int>(row_of_col_.size()); }
  int entry(int i, int j) const;
  /// Row holding the unit of column j, or 0.
  int row_of(int j) const { return row_of_col_.at(j - 1); }

  friend bool operator==(const Matrix01&, const Matrix01&) = default;
  friend Matrix01 corner(const ColoredPerm& p, int n);

 private:
  std::vector<int> row_of_col_;
};

/// (i,j) entry is 1 iff p(j) = i, for i,j <= n.
Matrix01 corner(const ColoredPerm& p, int n);
Matrix01 matrix01_mul(const Matrix01& a, const Matrix01& b);

/// Levels of the subgroup filtration. A single entry applies to every color.
class CosetLevel {
 public:
  CosetLevel(int level = 0) : per_color_{level} { check(); }  // NOLINT: implicit by design
  explicit CosetLevel(std::vector<int> per_color);

  int at(int color) const;
  int min() const;
  int max() const;
  bool is_zero() const { return max() == 0; }
  std::span<const int> values() const { return per_color_; }
  std::string str() const;

  friend bool operator==(const CosetLevel&, const CosetLevel&) = default;

 private:
  void check() const;
  std::vector<int> per_color_;
};

// Text and JSON forms.
std::string to_cycle_string(const ColoredPerm& p);
ColoredPerm parse_cycles(const std::string& text, int color_count = 0);
std::string to_json_string(const ColoredPerm& p);
ColoredPerm perm_from_json_string(const std::string& text);

}  // namespace traincat
