#include "traincat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "traincat/characters.hpp"
#include "traincat/tensor_oracle.hpp"

namespace traincat {

void CheckResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

void CheckResult::deviation(double d, double tol, const std::string& what) {
  ++cases;
  if (std::isnan(d)) d = INFINITY;
  max_deviation = std::max(max_deviation, d);
  if (!(d <= tol)) fail(what + " deviation " + std::to_string(d));
}

std::string CheckResult::summary() const {
  std::ostringstream out;
  out << name << ": " << cases << " cases, " << failures << " failures";
  if (max_deviation > 0) out << ", max deviation " << max_deviation;
  if (failures) out << "; first: " << first_failure;
  return out.str();
}

std::vector<Encoding> standard_encodings() {
  return {Encoding(EncoderKind::Chips, 2), Encoding(EncoderKind::Surfaces, 3), Encoding(EncoderKind::Gem, 3),
          Encoding(EncoderKind::Bigraph, 3)};
}

namespace {

using cplx = std::complex<double>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GroupElement draw(Rng& rng, const Encoding& enc, const SuiteOptions& opts) {
  return random_element(rng, enc.spec(), uniform(rng, 1, opts.max_support));
}

std::string describe(const GroupElement& g) {
  std::string s;
  for (const auto& p : g) s += (s.empty() ? "" : "; ") + to_cycle_string(p);
  return s;
}

std::string describe(const GroupElement& p, const GroupElement& q, int a, int b, int c) {
  return "p=[" + describe(p) + "] q=[" + describe(q) + "] levels " + std::to_string(a) + "," + std::to_string(b) +
         "," + std::to_string(c);
}

template <class F>
void for_levels(const SuiteOptions& opts, F&& f) {
  for (int a = 0; a <= opts.max_level; ++a)
    for (int b = 0; b <= opts.max_level; ++b)
      for (int c = 0; c <= opts.max_level; ++c) f(a, b, c);
}

Eigen::VectorXcd random_unit(Rng& rng, int d) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v[i] = cplx(normal(rng), normal(rng));
  return v / v.norm();
}

ThomaParams random_thoma(Rng& rng) {
  std::uniform_real_distribution<double> unit;
  std::vector<double> a(uniform(rng, 0, 3)), b(uniform(rng, 0, 2));
  double total = 0;
  for (auto& x : a) total += (x = unit(rng));
  for (auto& x : b) total += (x = unit(rng));
  const double scale = total > 0 ? unit(rng) / total : 0;
  for (auto& x : a) x *= scale;
  for (auto& x : b) x *= scale;
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  return ThomaParams(a, b);
}

SMatrix random_balanced(Rng& rng, int m) {
  SMatrix s(m);
  const int count = uniform(rng, 0, 3);
  for (int k = 0; k < count; ++k) {
    std::vector<int> colors(m);
    std::iota(colors.begin(), colors.end(), 1);
    std::shuffle(colors.begin(), colors.end(), rng);
    colors.resize(uniform(rng, 2, m));
    s = s + SMatrix::cycle(m, colors);
  }
  return s;
}

int count_cycles(const ColoredPerm& g, int n) {
  std::vector<bool> seen(n + 1, false);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (int x = i; !seen[x]; x = g(x)) seen[x] = true;
  }
  return count;
}

int count_orbits(const std::vector<ColoredPerm>& gens, int n) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = n;
  for (const auto& g : gens)
    for (int i = 1; i <= n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  return count;
}

void check_triple(CheckResult& res, const GroupElement& g, int n) {
  ++res.cases;
  const auto& [r, y, b] = std::tie(g[0], g[1], g[2]);
  EquippedSurface s = surface_from_tuple(g, 0, 0, n);
  for (const auto& comp : components(s))
    if (comp.euler > 2 || comp.euler % 2 != 0) return res.fail("euler " + std::to_string(comp.euler) + " for " + describe(g));
  // Points with r(i) = y(i) = b(i) give sphere components, which the surface drops.
  int spheres = 0;
  for (int i = 1; i <= n; ++i) spheres += r(i) == y(i) && y(i) == b(i);
  std::vector<int> expect = {count_cycles(compose(inverse(y), b), n), count_cycles(compose(inverse(b), r), n),
                             count_cycles(compose(inverse(r), y), n)};
  for (int& e : expect) e -= spheres;
  if (vertex_counts_by_color(s) != expect) return res.fail("vertex counts for " + describe(g));
  const int orbits = count_orbits({compose(inverse(y), b), compose(inverse(b), r)}, n) - spheres;
  if (static_cast<int>(components(s).size()) != orbits) res.fail("component count for " + describe(g));
}

}  // namespace

CheckResult check_gluing(const Encoding& enc, const SuiteOptions& opts) {
  CheckResult res{"gluing " + enc.name()};
  Rng rng(opts.seed);
  for_levels(opts, [&](int a, int b, int c) {
    for (int t = 0; t < opts.cases; ++t) {
      GroupElement p = draw(rng, enc, opts), q = draw(rng, enc, opts);
      ++res.cases;
      CosetProduct prod = coset_product_rep(enc.spec(), p, q, a, b, c);
      if (enc.canon(enc.mul(enc.encode(p, a, b), enc.encode(q, b, c))) != enc.canon(enc.encode(prod.r, a, c)))
        res.fail(describe(p, q, a, b, c));
    }
  });
  return res;
}

CheckResult check_stabilization(const Encoding& enc, const SuiteOptions& opts, int extra) {
  CheckResult res{"stabilization " + enc.name()};
  Rng rng(opts.seed + 1);
  const Encoder code = enc.encoder();
  for_levels(opts, [&](int a, int b, int c) {
    for (int t = 0; t < opts.cases; ++t) {
      GroupElement p = draw(rng, enc, opts), q = draw(rng, enc, opts);
      ++res.cases;
      if (!stabilization_check(enc.spec(), p, q, a, b, c, code, extra)) res.fail(describe(p, q, a, b, c));
    }
  });
  return res;
}

CheckResult check_associativity(const Encoding& enc, const SuiteOptions& opts) {
  CheckResult res{"associativity " + enc.name()};
  Rng rng(opts.seed + 2);
  for (int t = 0; t < opts.cases; ++t) {
    int l[4];
    for (int& x : l) x = uniform(rng, 0, opts.max_level);
    CosetDatum p = enc.encode(draw(rng, enc, opts), l[0], l[1]);
    CosetDatum q = enc.encode(draw(rng, enc, opts), l[1], l[2]);
    CosetDatum r = enc.encode(draw(rng, enc, opts), l[2], l[3]);
    ++res.cases;
    if (enc.canon(enc.mul(enc.mul(p, q), r)) != enc.canon(enc.mul(p, enc.mul(q, r))))
      res.fail("case " + std::to_string(t) + ": " + enc.canon(p) + " / " + enc.canon(q) + " / " + enc.canon(r));
  }
  return res;
}

CheckResult check_involution(const Encoding& enc, const SuiteOptions& opts) {
  CheckResult res{"involution " + enc.name()};
  Rng rng(opts.seed + 3);
  for (int t = 0; t < opts.cases; ++t) {
    int l[3];
    for (int& x : l) x = uniform(rng, 0, opts.max_level);
    CosetDatum p = enc.encode(draw(rng, enc, opts), l[0], l[1]);
    CosetDatum q = enc.encode(draw(rng, enc, opts), l[1], l[2]);
    ++res.cases;
    const std::string tag = "case " + std::to_string(t) + ": " + enc.canon(p) + " / " + enc.canon(q);
    if (enc.canon(enc.involution(enc.mul(p, q))) != enc.canon(enc.mul(enc.involution(q), enc.involution(p))))
      res.fail(tag + " (pq)* != q* p*");
    else if (enc.canon(enc.involution(enc.involution(p))) != enc.canon(p))
      res.fail(tag + " p** != p");
    else if (enc.canon(enc.mul(p, enc.identity(l[1]))) != enc.canon(p) ||
             enc.canon(enc.mul(enc.identity(l[0]), p)) != enc.canon(p))
      res.fail(tag + " identity");
  }
  return res;
}

CheckResult check_thoma_oracle(const SuiteOptions& opts) {
  CheckResult res{"thoma formula vs tensor oracle"};
  Rng rng(opts.seed + 4);
  const std::vector<ThomaParams> sets = {ThomaParams({1.0}, {}), ThomaParams({}, {1.0}), ThomaParams({0.5, 0.5}, {}),
                                         ThomaParams({0.5, 0.25, 0.25}, {}), ThomaParams({0.5}, {0.5})};
  for (const auto& params : sets) {
    const CoeffTensor xi = thoma_tensor(params);
    for (int t = 0; t < opts.cases; ++t) {
      ColoredPerm g = random_perm(rng, 4);
      cplx oracle = super_rep_matrix_element(xi, 4, {g, ColoredPerm(1)});
      res.deviation(std::abs(oracle - thoma_char(params, g)), 1e-10, to_cycle_string(g));
    }
  }
  return res;
}

CheckResult check_assignment_oracle(const SuiteOptions& opts) {
  CheckResult res{"assignment sum vs tensor oracle"};
  Rng rng(opts.seed + 5);
  const PairSpec spec = PairSpec::diagonal(3);
  for (int t = 0; t < opts.cases; ++t) {
    const int n = uniform(rng, 1, 4);
    const CoeffTensor xi = CoeffTensor::random(rng, {uniform(rng, 1, 2), uniform(rng, 1, 2), uniform(rng, 1, 2)});
    GroupElement g = random_element(rng, spec, n);
    cplx oracle = rep_matrix_element(xi, n, g);
    cplx formula = spherical_assignment_sum(surface_from_tuple(g, 0, 0, n), xi);
    res.deviation(std::abs(oracle - formula), 1e-10, describe(g));
  }
  return res;
}

CheckResult check_young_oracle(const SuiteOptions& opts) {
  CheckResult res{"young spherical vs tensor oracle"};
  Rng rng(opts.seed + 6);
  for (int t = 0; t < opts.cases; ++t) {
    const int m = uniform(rng, 1, 3), d = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
    std::vector<Eigen::VectorXcd> xis;
    for (int c = 0; c < m; ++c) xis.push_back(random_unit(rng, d));
    ColoredPerm g = random_perm(rng, n, m);
    res.deviation(std::abs(young_spherical(xis, g) - young_tensor_value(xis, g, n)), 1e-10, to_cycle_string(g));
  }
  return res;
}

CheckResult check_thoma_psd(const SuiteOptions& opts) {
  CheckResult res{"thoma gram matrices"};
  Rng rng(opts.seed + 7);
  for (int t = 0; t < opts.cases; ++t) {
    std::set<std::vector<int>> seen;
    std::vector<ColoredPerm> perms;
    while (perms.size() < 6) {
      ColoredPerm g = random_perm(rng, 5);
      if (seen.insert(g.images(5)).second) perms.push_back(g);
    }
    PsdReport rep = thoma_psd_check(random_thoma(rng), perms);
    res.deviation(std::max(0.0, -rep.min_eigenvalue), 1e-9, "negative eigenvalue");
  }
  return res;
}

CheckResult check_nessonov(const SuiteOptions& opts) {
  CheckResult res{"nessonov bound and multiplicativity"};
  Rng rng(opts.seed + 8);
  for (int t = 0; t < opts.cases; ++t) {
    const int m = uniform(rng, 2, 4), d = uniform(rng, 1, 3);
    std::vector<Eigen::VectorXcd> xis;
    for (int c = 0; c < m; ++c) xis.push_back(random_unit(rng, d));
    const GramSpec a = GramSpec::of_vectors(xis);
    SMatrix s1 = random_balanced(rng, m), s2 = random_balanced(rng, m);
    cplx c1 = nessonov_char(a, s1), c2 = nessonov_char(a, s2), c12 = nessonov_char(a, s1 + s2);
    res.deviation(std::max({0.0, std::abs(c1) - 1, std::abs(c2) - 1}), 1e-12, "bound");
    res.deviation(std::abs(c12 - c1 * c2), 1e-12, "multiplicativity");
  }
  return res;
}

CheckResult check_topology(const SuiteOptions& opts) {
  CheckResult res{"surface topology"};
  std::vector<std::vector<int>> s3;
  std::vector<int> base = {1, 2, 3};
  do s3.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  for (const auto& r : s3)
    for (const auto& y : s3)
      for (const auto& b : s3)
        check_triple(res, {ColoredPerm::from_images(r), ColoredPerm::from_images(y), ColoredPerm::from_images(b)}, 3);
  Rng rng(opts.seed + 9);
  for (int t = 0; t < opts.cases; ++t) {
    const int n = uniform(rng, 1, opts.max_support);
    check_triple(res, random_element(rng, PairSpec::diagonal(3), n), n);
  }
  return res;
}

CheckResult check_gem_surface(const SuiteOptions& opts, int dim) {
  CheckResult res{"gem vs polygon surface, dimension " + std::to_string(dim)};
  Rng rng(opts.seed + 10 + static_cast<std::uint64_t>(dim));
  const PairSpec spec = PairSpec::diagonal(dim + 1);
  for (int t = 0; t < opts.cases; ++t) {
    const int a = uniform(rng, 0, opts.max_level), b = uniform(rng, 0, opts.max_level);
    const int n = std::max({uniform(rng, 1, opts.max_support), a, b});
    GroupElement g = random_element(rng, spec, n);
    ++res.cases;
    if (surface_canon(surface_of_gem(gem_from_tuple(g, a, b, n))) != surface_canon(surface_from_tuple(g, a, b, n)))
      res.fail(describe(g));
  }
  return res;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "stabilization" && suite != "gluing" && suite != "characters" && suite != "topology")
    throw std::invalid_argument("unknown suite: " + suite);
  if (all || suite == "stabilization")
    for (const auto& enc : standard_encodings()) out.push_back(check_stabilization(enc, opts));
  if (all || suite == "gluing")
    for (const auto& enc : standard_encodings()) {
      out.push_back(check_gluing(enc, opts));
      out.push_back(check_associativity(enc, opts));
      out.push_back(check_involution(enc, opts));
    }
  if (all || suite == "characters") {
    out.push_back(check_thoma_oracle(opts));
    out.push_back(check_assignment_oracle(opts));
    out.push_back(check_young_oracle(opts));
    out.push_back(check_thoma_psd(opts));
    out.push_back(check_nessonov(opts));
  }
  if (all || suite == "topology") {
    out.push_back(check_topology(opts));
    out.push_back(check_gem_surface(opts, 2));
    out.push_back(check_gem_surface(opts, 3));
  }
  return out;
}

}  // namespace traincat
