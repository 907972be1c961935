#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "traincat/characters.hpp"
#include "traincat/coeff_tensor.hpp"
#include "traincat/perm.hpp"

namespace traincat {

/// Default size bound for dense tensor powers.
inline constexpr std::uint64_t kDenseBound = 10'000'000;

/// xi^(x)N with positions ordered block by block: position (m, f) is (m-1)*n + f-1.
Eigen::VectorXcd tensor_power(const CoeffTensor& xi, int n_blocks, std::uint64_t bound = kDenseBound);

/// Moves the factor at position i to position sigma[i]. With parities
/// (parities[i][b] for basis vector b at position i) each basis tensor picks up
/// its Koszul sign.
Eigen::VectorXcd permute_positions(const Eigen::VectorXcd& v, const std::vector<int>& local_dims,
                                   const std::vector<int>& sigma,
                                   const std::vector<std::vector<int>>* parities = nullptr);

/// <rho(g) Xi_N, Xi_N>, where rho(g) moves the factor at (m, f) to (g_f(m), f).
std::complex<double> rep_matrix_element(const CoeffTensor& xi, int n_blocks, const std::vector<ColoredPerm>& g,
                                        std::uint64_t bound = kDenseBound);
/// Same with Koszul signs from xi.parities.
std::complex<double> super_rep_matrix_element(const CoeffTensor& xi, int n_blocks, const std::vector<ColoredPerm>& g,
                                              std::uint64_t bound = kDenseBound);

/// (-1)^(inversions of g among the odd positions); positions are 1..parities.size().
int koszul_sign(const ColoredPerm& g, const std::vector<int>& parities);

/// sum sqrt(alpha_j) e_j (x) e_j + sum sqrt(beta_m) f_m (x) f_m, with the f_m odd.
/// Needs gamma = 0.
CoeffTensor thoma_tensor(const ThomaParams& params);

/// <rho(g) Xi, Xi> for Xi the product over (k, color) of xis[color], k <= N, and
/// g a permutation of N x {1..m}.
std::complex<double> young_tensor_value(const std::vector<Eigen::VectorXcd>& xis, const ColoredPerm& g, int n_blocks,
                                        std::uint64_t bound = kDenseBound);

struct ProjectorOptions {
  std::uint64_t bound = 40'320;  // largest (N-beta)! averaged exactly
  bool monte_carlo = false;
  int samples = 2000;
  std::uint64_t seed = 1;
};

/// Average of the diagonal action of all permutations of blocks beta+1..N.
Eigen::VectorXcd projector_average(const CoeffTensor& xi, int n_blocks, int beta, const Eigen::VectorXcd& v,
                                   const ProjectorOptions& opts = {});

/// Vector of X^(x)h (x) Sym^(N-h) X, X the block space of xi, stored on the basis
/// e_I (x) S(occ), where S(occ) is the unnormalized sum of all arrangements of the
/// multiset occ. Exact for any N, so large N stays cheap.
class TailSymmetricState {
 public:
  static TailSymmetricState power(const CoeffTensor& xi, int n_blocks, int head);

  int head() const { return head_; }
  int blocks() const { return n_; }
  /// Splits one more block off the symmetric tail.
  void expand_to(int head);
  /// rho(g); supports must lie within the head.
  void apply(const std::vector<ColoredPerm>& g);
  /// Averages over permutations of blocks level+1..N; the head shrinks to level.
  void project(int level);
  std::complex<double> inner(const TailSymmetricState& other) const;
  TailSymmetricState operator-(const TailSymmetricState& other) const;
  double norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }
  Eigen::VectorXcd to_dense(std::uint64_t bound = kDenseBound) const;

 private:
  int index_of(const std::vector<int>& occ) const;
  void build_tail(int length);

  std::vector<int> dims_;  // factor dims inside a block
  int block_dim_ = 1;
  int n_ = 0;
  int head_ = 0;
  std::vector<std::vector<int>> occs_;  // occupations of the current tail
  std::vector<double> arrangements_;    // number of arrangements of each occupation
  Eigen::MatrixXcd coeff_;              // rows: head index, cols: occupation
};

/// || P[a] rho(p) P[b] rho(q) Xi - P[a] rho(p theta_j q) Xi || at N blocks, j as in
/// the coset product.
double multiplicativity_drift(const CoeffTensor& xi, const std::vector<ColoredPerm>& p,
                              const std::vector<ColoredPerm>& q, int alpha, int beta, int n_blocks);

}  // namespace traincat
