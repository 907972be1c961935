#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "traincat/encoders.hpp"

namespace traincat {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  long cases = 0;
  long failures = 0;
  double max_deviation = 0.0;  // only for numeric checks
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what);
  void deviation(double d, double tol, const std::string& what);
  std::string summary() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int cases = 50;        // per level combination where levels apply
  int max_level = 3;
  int max_support = 8;
};

/// chips, surfaces:3, gem:3, bigraph:3
std::vector<Encoding> standard_encodings();

CheckResult check_gluing(const Encoding& enc, const SuiteOptions& opts);
/// Codes of p theta_i q agree for i = j..j+extra.
CheckResult check_stabilization(const Encoding& enc, const SuiteOptions& opts, int extra = 3);
CheckResult check_associativity(const Encoding& enc, const SuiteOptions& opts);
/// (ab)* = b* a*, a** = a, and identities act trivially.
CheckResult check_involution(const Encoding& enc, const SuiteOptions& opts);

/// Thoma formula vs the super tensor oracle on S_4 at N = 4.
CheckResult check_thoma_oracle(const SuiteOptions& opts);
/// Assignment sum of the surface vs <rho(g) Xi, Xi>, dims <= 2 per color, N <= 4.
CheckResult check_assignment_oracle(const SuiteOptions& opts);
/// Young spherical function vs the truncated tensor value, m <= 3.
CheckResult check_young_oracle(const SuiteOptions& opts);
/// Smallest Gram eigenvalue of Thoma characters on random 6-subsets of S_5.
CheckResult check_thoma_psd(const SuiteOptions& opts);
/// |chi| <= 1 and chi(S1 + S2) = chi(S1) chi(S2).
CheckResult check_nessonov(const SuiteOptions& opts);

/// Exhaustive S_3^3 plus opts.cases random triples: even Euler characteristics at most 2,
/// vertex counts vs quotient cycles, components vs orbits.
CheckResult check_topology(const SuiteOptions& opts);
/// surface_of_gem vs surface_from_tuple for gems of dimension dim.
CheckResult check_gem_surface(const SuiteOptions& opts, int dim);

/// suite: stabilization, gluing, characters, topology, or all.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts);

}  // namespace traincat
