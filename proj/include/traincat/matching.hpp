#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "traincat/perm.hpp"

namespace traincat {

/// Plus and minus cells with one perfect plus-minus matching per color.
///
/// This is the common combinatorial core of equipped surfaces (cells are
/// polygons, colors are edge colors) and of gem complexes (cells are chambers,
/// colors are facet colors). Colors are 0-based here. Plus labels are exactly
/// 1..beta, minus labels exactly 1..alpha.
class ColoredMatching {
 public:
  ColoredMatching() = default;
  /// match[c][x] is the minus partner of plus cell x in color c; labels are 0 when absent.
  ColoredMatching(int colors, std::vector<std::vector<int>> match, std::vector<int> plus_labels,
                  std::vector<int> minus_labels, int alpha, int beta);

  /// Plus cell k is matched in color c to minus cell perms[c](k), k = 1..n.
  /// Unlabeled trivial components are dropped.
  static ColoredMatching from_tuple(const std::vector<ColoredPerm>& perms, int alpha, int beta, int n);

  int colors() const { return colors_; }
  int cells() const { return static_cast<int>(plus_label_.size()); }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int partner(int color, int plus) const { return match_[color][plus]; }
  int plus_partner(int color, int minus) const { return inv_[color][minus]; }
  int plus_label(int x) const { return plus_label_[x]; }
  int minus_label(int y) const { return minus_label_[y]; }
  int plus_with_label(int k) const;
  int minus_with_label(int k) const;

  /// Removes components made of one plus and one minus cell without labels.
  ColoredMatching drop_trivial() const;
  /// Swaps signs and inverts matchings.
  ColoredMatching involution() const;
  /// Same object with internal cell numbers shuffled.
  ColoredMatching shuffled(std::mt19937_64& rng) const;

  struct Component {
    std::vector<int> plus;
    std::vector<int> minus;
  };
  /// Components of the graph using only the colors in color_mask.
  std::vector<Component> components(std::uint32_t color_mask) const;
  std::vector<Component> components() const { return components(all_colors()); }
  std::uint32_t all_colors() const { return (1u << colors_) - 1u; }

  /// Orbits of x -> plus_partner(c2, partner(c1, x)) on plus cells.
  std::vector<std::vector<int>> corner_cycles(int c1, int c2) const;

  /// Canonical code; equal codes iff isomorphic (colors, signs and labels preserved).
  std::string canon(const std::string& tag) const;

  /// Matching permutations of a fully labeled object, recovered through labels.
  std::vector<ColoredPerm> to_tuple() const;

  std::string to_json(const std::string& kind) const;
  static ColoredMatching from_json(const std::string& text, const std::string& kind);
  std::string to_dot(const std::string& name) const;

  friend bool operator==(const ColoredMatching&, const ColoredMatching&) = default;

 private:
  std::vector<int> component_code(const std::vector<int>& plus_cells, int start, std::vector<int>& plus_id,
                                  std::vector<int>& minus_id) const;

  int colors_ = 0;
  int alpha_ = 0;
  int beta_ = 0;
  std::vector<std::vector<int>> match_;
  std::vector<std::vector<int>> inv_;
  std::vector<int> plus_label_;
  std::vector<int> minus_label_;
};

/// p lives at levels (alpha, beta), q at (beta, gamma). Entries of p (plus labels)
/// and exits of q (minus labels) are removed and the dangling slots joined color by
/// color. Trivial components are dropped unless keep_trivial is set.
ColoredMatching glue(const ColoredMatching& p, const ColoredMatching& q, bool keep_trivial = false);

}  // namespace traincat
