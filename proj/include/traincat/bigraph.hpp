#pragma once

#include <random>
#include <string>
#include <vector>

#include "traincat/perm.hpp"

namespace traincat {

/// Bipartite l-valent multigraph with plus and minus vertices.
///
/// Semi-edge s (0..l-1) of plus vertex x is joined to semi-edge t of minus vertex
/// y. Labeled vertices carry colors s+1 on their semi-edges; the slot order of an
/// unlabeled vertex carries no meaning. Plus labels are 1..beta, minus 1..alpha.
class BipartiteDiagram {
 public:
  BipartiteDiagram() = default;
  /// match[x*l + s] = y*l + t.
  BipartiteDiagram(int valence, std::vector<int> match, std::vector<int> plus_labels, std::vector<int> minus_labels,
                   int alpha, int beta);

  int valence() const { return l_; }
  int vertices() const { return static_cast<int>(plus_label_.size()); }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  /// Minus semi-edge (y*l + t) joined to semi-edge s of plus vertex x.
  int partner(int x, int s) const { return match_[x * l_ + s]; }
  int plus_partner(int y, int t) const { return inv_[y * l_ + t]; }
  int plus_label(int x) const { return plus_label_[x]; }
  int minus_label(int y) const { return minus_label_[y]; }
  int plus_with_label(int k) const;
  /// Semi-edge color, or 0 when absent.
  int plus_color(int x, int s) const { return plus_label_[x] ? s + 1 : 0; }
  int minus_color(int y, int t) const { return minus_label_[y] ? t + 1 : 0; }

  BipartiteDiagram drop_trivial() const;
  BipartiteDiagram shuffled(std::mt19937_64& rng) const;

  friend bool operator==(const BipartiteDiagram&, const BipartiteDiagram&) = default;

 private:
  int l_ = 1;
  int alpha_ = 0;
  int beta_ = 0;
  std::vector<int> match_;
  std::vector<int> inv_;
  std::vector<int> plus_label_;
  std::vector<int> minus_label_;
};

BipartiteDiagram graph_from_perm(const ColoredPerm& g, int alpha, int beta, int n);
/// Drops plus labels above beta and minus labels above alpha, with their colors.
BipartiteDiagram graph_forget(const BipartiteDiagram& d, int alpha, int beta);
BipartiteDiagram graph_mul(const BipartiteDiagram& d1, const BipartiteDiagram& d2);
BipartiteDiagram graph_involution(const BipartiteDiagram& d);
BipartiteDiagram identity_graph(int valence, int level);
std::string graph_canon(const BipartiteDiagram& d);

std::string graph_to_json(const BipartiteDiagram& d);
BipartiteDiagram graph_from_json(const std::string& text);
std::string graph_to_dot(const BipartiteDiagram& d);

}  // namespace traincat
