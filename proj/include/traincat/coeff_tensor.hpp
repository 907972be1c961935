#pragma once

#include <complex>
#include <random>
#include <vector>

namespace traincat {

/// Dense coefficients of a vector in V_1 (x) ... (x) V_n, row-major in (i_1, ..., i_n).
struct CoeffTensor {
  std::vector<int> dims;
  std::vector<std::complex<double>> coeffs;
  /// Optional: parities[f][i] in {0, 1} for basis vector i of factor f.
  std::vector<std::vector<int>> parities;

  /// Checks sizes, unit norm, and evenness when parities are present.
  void validate(double tol = 1e-12) const;
  std::size_t size() const { return coeffs.size(); }
  int factors() const { return static_cast<int>(dims.size()); }
  /// Random unit vector with the given dims (no parities).
  static CoeffTensor random(std::mt19937_64& rng, std::vector<int> dims);
};

}  // namespace traincat
