#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "traincat/perm.hpp"

namespace traincat {

enum class PairKind {
  Bisymmetric,  // S x S with the diagonal
  Diagonal,     // n copies of S with the diagonal
  Wreath,       // S(N x {1..l}) with the wreath product of S and S_l
  Young,        // S(N x {1..m}) with the product of S over each color
};

struct PairSpec {
  PairKind kind = PairKind::Bisymmetric;
  int copies = 2;  // factors of G (Bisymmetric, Diagonal), otherwise 1
  int colors = 1;  // colors of each factor (Wreath, Young), otherwise 1

  static PairSpec bisymmetric() { return {PairKind::Bisymmetric, 2, 1}; }
  static PairSpec diagonal(int copies);
  static PairSpec wreath(int valence);
  static PairSpec young(int colors);

  bool is_product() const { return kind == PairKind::Bisymmetric || kind == PairKind::Diagonal; }
  std::string name() const;
};

/// One permutation per factor of G (a single one for Wreath and Young).
using GroupElement = std::vector<ColoredPerm>;

void validate_element(const PairSpec& spec, const GroupElement& g);
GroupElement identity_element(const PairSpec& spec);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse_element(const GroupElement& g);
/// Largest index moved by any component.
int max_support(const GroupElement& g);

/// theta_j[beta] as an element of G: diagonal in product groups, whole columns for
/// Wreath, per color level for Young.
GroupElement theta_element(const PairSpec& spec, const CosetLevel& beta, int j);
/// j used by the product construction: max(s(p), s(q), alpha, gamma) - beta + 1, at least 1.
int default_j(const PairSpec& spec, const GroupElement& p, const GroupElement& q, const CosetLevel& alpha,
              const CosetLevel& beta, const CosetLevel& gamma);

struct CosetProduct {
  GroupElement r;
  int j = 0;
};

/// r = p * theta_j[beta] * q, a representative of the product of K[alpha] p K[beta]
/// and K[beta] q K[gamma]. alpha and gamma only fix the meaning of the result.
CosetProduct coset_product_rep(const PairSpec& spec, const GroupElement& p, const GroupElement& q,
                               const CosetLevel& alpha, const CosetLevel& beta, const CosetLevel& gamma);
GroupElement theta_product(const PairSpec& spec, const GroupElement& p, const GroupElement& q,
                           const CosetLevel& beta, int j);

/// Canonical code of the double coset K[alpha] g K[beta].
using Encoder = std::function<std::string(const GroupElement& g, const CosetLevel& alpha, const CosetLevel& beta)>;

/// True iff the codes of p theta_i q agree for i = j..j+extra.
bool stabilization_check(const PairSpec& spec, const GroupElement& p, const GroupElement& q,
                         const CosetLevel& alpha, const CosetLevel& beta, const CosetLevel& gamma,
                         const Encoder& encoder, int extra);

/// Group order bound: TRAINCAT_BOUND if set, else 10^7.
std::uint64_t default_bound();

/// Double cosets of K_n[alpha] \ G_n / K_n[beta] by breadth-first closure.
class FiniteDoubleCosets {
 public:
  FiniteDoubleCosets(const PairSpec& spec, int n, const CosetLevel& alpha, const CosetLevel& beta,
                     std::uint64_t bound = default_bound());

  std::uint64_t group_order() const { return order_; }
  int orbit_count() const { return orbit_count_; }
  int orbit_of(std::uint64_t rank) const { return orbit_[rank]; }
  int orbit_of(const GroupElement& g) const;
  GroupElement element(std::uint64_t rank) const;
  std::uint64_t rank(const GroupElement& g) const;
  std::vector<std::vector<GroupElement>> orbits() const;

 private:
  using Flat = std::vector<int>;  // blocks_ consecutive permutations of points_ (0-based)
  Flat unrank(std::uint64_t r) const;
  std::uint64_t rank_flat(const Flat& f) const;
  Flat to_flat(const GroupElement& g) const;

  PairSpec spec_;
  int n_;
  int blocks_;
  int points_;
  std::uint64_t order_ = 1;
  std::uint64_t block_order_ = 1;
  std::vector<std::vector<int>> left_gens_, right_gens_;
  std::vector<int> orbit_;
  int orbit_count_ = 0;
};

std::vector<std::vector<GroupElement>> enumerate_double_cosets_finite(const PairSpec& spec, int n,
                                                                      const CosetLevel& alpha,
                                                                      const CosetLevel& beta,
                                                                      std::uint64_t bound = default_bound());
bool same_coset_finite(const PairSpec& spec, int n, const CosetLevel& alpha, const CosetLevel& beta,
                       const GroupElement& g, const GroupElement& h, std::uint64_t bound = default_bound());

// Seeded generators shared by tests and verification suites.
using Rng = std::mt19937_64;
/// Uniform permutation of {1..n} x {1..colors}.
ColoredPerm random_perm(Rng& rng, int n, int colors = 1);
/// Uniform element of G_n.
GroupElement random_element(Rng& rng, const PairSpec& spec, int n);
/// Random element of K[level] moving only indices <= n.
GroupElement random_subgroup_element(Rng& rng, const PairSpec& spec, const CosetLevel& level, int n);

}  // namespace traincat
