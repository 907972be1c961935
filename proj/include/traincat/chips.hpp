#pragma once

#include <compare>
#include <string>
#include <vector>

#include "traincat/characters.hpp"
#include "traincat/perm.hpp"

namespace traincat {

enum class Row { Top = 0, Bottom = 1 };
enum class Side { Left = 0, Right = 1 };

struct ChipEndpoint {
  Row row = Row::Top;
  Side side = Side::Left;
  int index = 1;

  auto operator<=>(const ChipEndpoint&) const = default;
};

struct ChipArc {
  ChipEndpoint a;  // a < b
  ChipEndpoint b;
  int roods = 0;

  auto operator<=>(const ChipArc&) const = default;
};

/// Arc diagram of a double coset of the bisymmetric pair.
///
/// The top row carries 2*beta labeled endpoints, the bottom row 2*alpha. Closed
/// chains are kept only through their rood counts; 2-rood cycles are dropped.
class Chip {
 public:
  Chip() = default;
  /// Sorts and validates (every endpoint used once, parities, cycle counts).
  Chip(int alpha, int beta, std::vector<ChipArc> arcs, std::vector<int> cycles);

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  const std::vector<ChipArc>& arcs() const { return arcs_; }
  const std::vector<int>& cycles() const { return cycles_; }

  friend bool operator==(const Chip&, const Chip&) = default;

 private:
  int alpha_ = 0;
  int beta_ = 0;
  std::vector<ChipArc> arcs_;
  std::vector<int> cycles_;
};

/// g1 draws the left vertical strands, g2 the right ones.
Chip chip_from_pair(const ColoredPerm& g1, const ColoredPerm& g2, int alpha, int beta);
/// Top row of c1 is glued to the bottom row of c2.
Chip chip_mul(const Chip& c1, const Chip& c2);
Chip chip_involution(const Chip& c);
Chip identity_chip(int level);
std::string chip_canon(const Chip& c);
double chip_thoma_eval(const Chip& c, const ThomaParams& params);

std::string chip_to_json(const Chip& c);
Chip chip_from_json(const std::string& text);

}  // namespace traincat
