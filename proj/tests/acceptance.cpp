// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "traincat/tensor_oracle.hpp"
#include "traincat/verify.hpp"

using namespace traincat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  void absorb(const CheckResult& r) { require(r.ok(), r.summary()); }
};

// Orbits of the finite model vs distinct canonical codes; codes must be constant on each orbit.
int distinct_codes(const Encoding& enc, int n, int a, int b, Outcome& out) {
  FiniteDoubleCosets f(enc.spec(), n, a, b);
  std::set<std::string> codes;
  for (const auto& orbit : f.orbits()) {
    const std::string c0 = enc.canon(enc.encode(orbit.front(), a, b));
    for (const auto& g : orbit) {
      if (enc.canon(enc.encode(g, a, b)) != c0) {
        out.require(false, enc.name() + ": code not constant on an orbit at n=" + std::to_string(n));
        break;
      }
    }
    codes.insert(c0);
  }
  std::ostringstream what;
  what << enc.name() << " n=" << n << " levels " << a << "," << b << ": " << f.orbit_count() << " orbits, "
       << codes.size() << " codes";
  out.require(static_cast<int>(codes.size()) == f.orbit_count(), what.str());
  return f.orbit_count();
}

Outcome criterion_counts() {
  Outcome out;
  const Encoding bi(EncoderKind::Chips, 2), tri(EncoderKind::Surfaces, 3), bigraph(EncoderKind::Bigraph, 3),
      gem(EncoderKind::Gem, 2);
  const int bi_expected[] = {1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) {
    const int got = distinct_codes(bi, n, 0, 0, out);
    out.require(got == bi_expected[n - 1], "bisymmetric n=" + std::to_string(n) + " count " + std::to_string(got));
  }
  out.require(distinct_codes(tri, 3, 0, 0, out) == 11, "trisymmetric n=3 count");
  out.require(distinct_codes(tri, 4, 0, 0, out) == 43, "trisymmetric n=4 count");
  for (int n = 1; n <= 2; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) distinct_codes(bigraph, n, a, b, out);
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (const Encoding* enc : {&bi, &tri, &gem}) distinct_codes(*enc, n, a, b, out);
  return out;
}

SuiteOptions options(int cases) {
  SuiteOptions o;
  o.seed = 20240601;
  o.cases = cases;
  o.max_level = 3;
  o.max_support = 8;
  return o;
}

Outcome criterion_gluing() {
  Outcome out;
  for (const Encoding& enc : standard_encodings()) {
    out.absorb(check_gluing(enc, options(500)));
    out.absorb(check_stabilization(enc, options(500)));
  }
  return out;
}

Outcome criterion_category_laws() {
  Outcome out;
  for (const Encoding& enc : standard_encodings()) {
    out.absorb(check_associativity(enc, options(200)));
    out.absorb(check_involution(enc, options(200)));
  }
  return out;
}

Outcome criterion_oracles() {
  Outcome out;
  out.absorb(check_thoma_oracle(options(50)));
  out.absorb(check_assignment_oracle(options(50)));
  out.absorb(check_young_oracle(options(50)));
  return out;
}

Outcome criterion_positivity() {
  Outcome out;
  out.absorb(check_thoma_psd(options(20)));
  out.absorb(check_nessonov(options(100)));
  return out;
}

Outcome criterion_topology() {
  Outcome out;
  out.absorb(check_topology(options(500)));
  out.absorb(check_gem_surface(options(200), 2));
  out.absorb(check_gem_surface(options(200), 3));
  return out;
}

Outcome criterion_drift() {
  Outcome out;
  Rng rng(7);
  const PairSpec spec = PairSpec::bisymmetric();
  int done = 0, draws = 0;
  while (done < 10 && draws < 500) {
    ++draws;
    CoeffTensor xi = CoeffTensor::random(rng, {2, 2});
    GroupElement p = random_element(rng, spec, 3), q = random_element(rng, spec, 3);
    const int alpha = static_cast<int>(rng() % 2), beta = 1 + static_cast<int>(rng() % 2);
    const double d8 = multiplicativity_drift(xi, p, q, alpha, beta, 8);
    if (d8 < 1e-12) continue;
    const double d16 = multiplicativity_drift(xi, p, q, alpha, beta, 16);
    std::ostringstream what;
    what << "case " << done << ": d8=" << d8 << " d16=" << d16;
    out.require(d16 < d8, what.str());
    ++done;
  }
  out.require(done == 10, "only " + std::to_string(done) + " cases with nonzero drift");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"double coset counts match canonical codes", criterion_counts},
      {"gluing and stabilization", criterion_gluing},
      {"associativity and involution", criterion_category_laws},
      {"characters match tensor oracles", criterion_oracles},
      {"positive definiteness and multiplicativity", criterion_positivity},
      {"surface and gem topology", criterion_topology},
      {"tensor multiplicativity drift decreases", criterion_drift},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
