#include "traincat/gem.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace traincat {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Vertex id of every plus and minus cell for vertex color w.
struct VertexMap {
  std::vector<int> plus, minus;
  int count = 0;
};

VertexMap vertex_map(const ColoredMatching& m, int w) {
  VertexMap vm;
  vm.plus.assign(m.cells(), -1);
  vm.minus.assign(m.cells(), -1);
  auto comps = m.components(m.all_colors() & ~(1u << w));
  for (const auto& comp : comps) {
    for (int x : comp.plus) vm.plus[x] = vm.count;
    for (int y : comp.minus) vm.minus[y] = vm.count;
    ++vm.count;
  }
  return vm;
}

}  // namespace

GemComplex::GemComplex(ColoredMatching core) : core_(std::move(core)) {
  if (core_.colors() < 2) throw std::invalid_argument("gems need dimension at least 1");
}

int FaceRecord::dimension() const { return std::popcount(colors) - 1; }

GemComplex gem_from_tuple(const std::vector<ColoredPerm>& perms, int alpha, int beta, int n) {
  if (perms.size() < 2) throw std::invalid_argument("gems need at least two permutations");
  return GemComplex(ColoredMatching::from_tuple(perms, alpha, beta, n));
}

std::vector<FaceRecord> faces(const GemComplex& g, std::uint32_t w) {
  const std::uint32_t all = g.core().all_colors();
  if (w == 0 || (w & ~all) != 0) throw std::invalid_argument("invalid vertex color set");
  std::vector<FaceRecord> out;
  for (auto& comp : g.core().components(all & ~w)) out.push_back({w, std::move(comp.plus), std::move(comp.minus)});
  return out;
}

std::vector<FaceRecord> faces(const GemComplex& g, const std::vector<int>& w) {
  std::uint32_t mask = 0;
  for (int c : w) {
    if (c < 0 || c > g.dim()) throw std::invalid_argument("vertex color out of range");
    if (mask >> c & 1u) throw std::invalid_argument("repeated vertex color");
    mask |= 1u << c;
  }
  return faces(g, mask);
}

GemComplex gem_mul(const GemComplex& g1, const GemComplex& g2) { return GemComplex(glue(g1.core(), g2.core())); }

GemComplex gem_involution(const GemComplex& g) { return GemComplex(g.core().involution()); }

GemComplex identity_gem(int dim, int level) {
  return gem_from_tuple(std::vector<ColoredPerm>(dim + 1), level, level, level);
}

FVector f_vector(const GemComplex& g) {
  const ColoredMatching& m = g.core();
  const int n = g.dim();
  auto comps = m.components();
  std::vector<int> plus_comp(m.cells()), minus_comp(m.cells());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (int x : comps[i].plus) plus_comp[x] = static_cast<int>(i);
    for (int y : comps[i].minus) minus_comp[y] = static_cast<int>(i);
  }
  FVector fv;
  fv.f.assign(n + 1, 0);
  fv.component_euler.assign(comps.size(), 0);
  for (std::uint32_t w = 1; w <= m.all_colors(); ++w) {
    for (const auto& face : faces(g, w)) {
      int d = face.dimension();
      ++fv.f[d];
      int c = face.plus_chambers.empty() ? minus_comp[face.minus_chambers.front()] : plus_comp[face.plus_chambers.front()];
      fv.component_euler[c] += d % 2 == 0 ? 1 : -1;
    }
  }
  return fv;
}

EquippedSurface surface_of_gem(const GemComplex& g) { return EquippedSurface(g.core()); }

std::string gem_canon(const GemComplex& g) { return g.core().canon("gem"); }

VertexCountComparison compare_vertex_counts(const GemComplex& g1, const GemComplex& g2) {
  const ColoredMatching &p = g1.core(), &q = g2.core();
  if (p.beta() != q.alpha()) throw std::invalid_argument("inner levels do not match");
  if (p.colors() != q.colors()) throw std::invalid_argument("dimensions differ");
  const int k = p.colors();
  VertexCountComparison out;
  for (int w = 0; w < k; ++w) {
    VertexMap vp = vertex_map(p, w), vq = vertex_map(q, w);
    UnionFind uf(vp.count + vq.count);
    // The boundary of entry l of p is pasted onto the boundary of exit l of q.
    for (int l = 1; l <= p.beta(); ++l) uf.unite(vp.plus[p.plus_with_label(l)], vp.count + vq.minus[q.minus_with_label(l)]);
    for (int v = 0; v < vp.count + vq.count; ++v) out.naive += uf.find(v) == v;
  }
  GemComplex glued(glue(p, q, true));
  for (int w = 0; w < k; ++w) out.normalized += static_cast<int>(faces(glued, 1u << w).size());
  return out;
}

std::string gem_to_json(const GemComplex& g) { return g.core().to_json("gem"); }

GemComplex gem_from_json(const std::string& text) { return GemComplex(ColoredMatching::from_json(text, "gem")); }

std::string gem_to_off(const GemComplex& g) {
  if (g.dim() != 2) throw std::invalid_argument("OFF export needs a 2-dimensional gem");
  const ColoredMatching& m = g.core();
  std::vector<VertexMap> vm;
  std::vector<int> base;
  int total = 0;
  for (int w = 0; w < 3; ++w) {
    vm.push_back(vertex_map(m, w));
    base.push_back(total);
    total += vm.back().count;
  }
  std::ostringstream out;
  out << "OFF\n" << total << ' ' << 2 * m.cells() << " 0\n";
  for (int v = 0; v < total; ++v) {
    double t = 2.0 * M_PI * v / std::max(total, 1);
    int w = 0;
    while (w + 1 < 3 && base[w + 1] <= v) ++w;
    out << std::cos(t) << ' ' << std::sin(t) << ' ' << w << '\n';
  }
  // Plus triangles keep the color order, minus triangles reverse it.
  for (int x = 0; x < m.cells(); ++x)
    out << "3 " << base[0] + vm[0].plus[x] << ' ' << base[1] + vm[1].plus[x] << ' ' << base[2] + vm[2].plus[x] << '\n';
  for (int y = 0; y < m.cells(); ++y)
    out << "3 " << base[2] + vm[2].minus[y] << ' ' << base[1] + vm[1].minus[y] << ' ' << base[0] + vm[0].minus[y]
        << '\n';
  return out.str();
}

}  // namespace traincat
