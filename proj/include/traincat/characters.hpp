#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "traincat/perm.hpp"

namespace traincat {

/// Thoma parameters with finitely many nonzero alpha and beta.
/// gamma = 1 - sum(alpha) - sum(beta) is derived and never stored.
class ThomaParams {
 public:
  ThomaParams() : ThomaParams({1.0}, {}) {}
  ThomaParams(std::vector<double> alphas, std::vector<double> betas);
  /// "alpha=0.5,0.25 beta=0.2"; either part may be omitted.
  static ThomaParams parse(const std::string& text);

  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }
  double gamma() const;
  /// sum alpha^k + (-1)^(k-1) sum beta^k
  double power_sum(int k) const;

 private:
  std::vector<double> alphas_;
  std::vector<double> betas_;
};

double thoma_char(const ThomaParams& params, const ColoredPerm& g);

struct PsdReport {
  Eigen::MatrixXd gram;
  double min_eigenvalue = 0.0;
};

/// Gram matrix f(g_i g_j^-1) of the Thoma character and its smallest eigenvalue.
PsdReport thoma_psd_check(const ThomaParams& params, const std::vector<ColoredPerm>& perms);

/// Color-flow counts s(nu, mu), nu != mu; the diagonal is zero.
class SMatrix {
 public:
  explicit SMatrix(int m = 1);
  /// Throws if the matrix is not balanced, negative, or has a nonzero diagonal.
  explicit SMatrix(Eigen::MatrixXi counts);
  /// Cycle nu_1 -> nu_2 -> ... -> nu_p -> nu_1 over distinct colors (1-based).
  static SMatrix cycle(int m, const std::vector<int>& colors);
  /// JSON rows; "." entries stand for the ignored diagonal.
  static SMatrix parse(const std::string& text);

  int size() const { return static_cast<int>(s_.rows()); }
  int operator()(int nu, int mu) const { return s_(nu - 1, mu - 1); }
  const Eigen::MatrixXi& matrix() const { return s_; }
  SMatrix transpose() const { return SMatrix(Eigen::MatrixXi(s_.transpose())); }
  bool is_zero() const { return s_.isZero(); }

  friend SMatrix operator+(const SMatrix& a, const SMatrix& b);
  friend bool operator==(const SMatrix& a, const SMatrix& b) { return a.s_ == b.s_; }

 private:
  Eigen::MatrixXi s_;
};

SMatrix s_matrix(const ColoredPerm& g);
/// Complete invariant of the level-zero Young double coset of g.
SMatrix coset_invariant_young(const ColoredPerm& g, const CosetLevel& levels);
/// Greedy cycle decomposition; each cycle lists distinct colors.
std::vector<std::vector<int>> cycle_decompose(const SMatrix& s);

/// Hermitian positive semidefinite matrix with unit diagonal.
class GramSpec {
 public:
  explicit GramSpec(Eigen::MatrixXcd a, double tol = 1e-9);
  static GramSpec ones(int m);
  /// Gram matrix a(nu, mu) = <xi_nu, xi_mu>, linear in the first argument.
  static GramSpec of_vectors(const std::vector<Eigen::VectorXcd>& xis);
  /// "ones(m)" or JSON rows of numbers or [re, im] pairs.
  static GramSpec parse(const std::string& text);

  int size() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return a_; }

 private:
  Eigen::MatrixXcd a_;
};

std::complex<double> nessonov_char(const GramSpec& a, const SMatrix& s);
std::complex<double> young_spherical(const std::vector<Eigen::VectorXcd>& xis, const ColoredPerm& g);

}  // namespace traincat
