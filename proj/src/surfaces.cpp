#include "traincat/surfaces.hpp"

#include <algorithm>
#include <limits>

namespace traincat {

namespace {

using cplx = std::complex<double>;

// A dense tensor whose axes are named by edge ids.
struct EdgeTensor {
  std::vector<int> axes;
  std::vector<int> dims;
  std::vector<cplx> data;  // row-major over axes

  std::size_t size() const { return data.size(); }
};

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * static_cast<std::size_t>(dims[i + 1]);
  return s;
}

// Offsets of every multi-index over `dims`, each position weighted by `weights`.
std::vector<std::size_t> offsets(const std::vector<int>& dims, const std::vector<std::size_t>& weights) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  std::vector<std::size_t> out(total, 0);
  std::vector<int> idx(dims.size(), 0);
  std::size_t off = 0;
  for (std::size_t t = 0; t < total; ++t) {
    out[t] = off;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      if (++idx[i] < dims[i]) {
        off += weights[i];
        break;
      }
      off -= weights[i] * static_cast<std::size_t>(dims[i] - 1);
      idx[i] = 0;
    }
  }
  return out;
}

EdgeTensor contract(const EdgeTensor& a, const EdgeTensor& b) {
  auto sa = strides_of(a.dims), sb = strides_of(b.dims);
  std::vector<int> shared_dims, out_axes, out_dims;
  std::vector<std::size_t> shared_wa, shared_wb, out_wa, out_wb;
  for (std::size_t i = 0; i < a.axes.size(); ++i) {
    auto it = std::find(b.axes.begin(), b.axes.end(), a.axes[i]);
    if (it != b.axes.end()) {
      shared_dims.push_back(a.dims[i]);
      shared_wa.push_back(sa[i]);
      shared_wb.push_back(sb[it - b.axes.begin()]);
    } else {
      out_axes.push_back(a.axes[i]);
      out_dims.push_back(a.dims[i]);
      out_wa.push_back(sa[i]);
      out_wb.push_back(0);
    }
  }
  for (std::size_t i = 0; i < b.axes.size(); ++i) {
    if (std::find(a.axes.begin(), a.axes.end(), b.axes[i]) != a.axes.end()) continue;
    out_axes.push_back(b.axes[i]);
    out_dims.push_back(b.dims[i]);
    out_wa.push_back(0);
    out_wb.push_back(sb[i]);
  }
  auto ra = offsets(out_dims, out_wa), rb = offsets(out_dims, out_wb);
  auto qa = offsets(shared_dims, shared_wa), qb = offsets(shared_dims, shared_wb);
  EdgeTensor r{out_axes, out_dims, std::vector<cplx>(ra.size())};
  for (std::size_t t = 0; t < ra.size(); ++t) {
    cplx acc = 0;
    for (std::size_t s = 0; s < qa.size(); ++s) acc += a.data[ra[t] + qa[s]] * b.data[rb[t] + qb[s]];
    r.data[t] = acc;
  }
  return r;
}

std::size_t result_size(const EdgeTensor& a, const EdgeTensor& b, bool& shares) {
  std::size_t size = 1;
  shares = false;
  for (std::size_t i = 0; i < a.axes.size(); ++i) {
    if (std::find(b.axes.begin(), b.axes.end(), a.axes[i]) != b.axes.end())
      shares = true;
    else
      size *= static_cast<std::size_t>(a.dims[i]);
  }
  for (std::size_t i = 0; i < b.axes.size(); ++i)
    if (std::find(a.axes.begin(), a.axes.end(), b.axes[i]) == a.axes.end()) size *= static_cast<std::size_t>(b.dims[i]);
  return size;
}

cplx contract_network(std::vector<EdgeTensor> ts) {
  while (ts.size() > 1) {
    std::size_t best_i = 0, best_j = 1, best = std::numeric_limits<std::size_t>::max();
    bool found = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        bool shares = false;
        std::size_t s = result_size(ts[i], ts[j], shares);
        if (shares && s < best) {
          best = s;
          best_i = i;
          best_j = j;
          found = true;
        }
      }
    }
    if (!found) {
      // Disconnected pieces: the value factorizes.
      cplx v = 1;
      for (auto& t : ts) v *= contract_network({t});
      return v;
    }
    EdgeTensor merged = contract(ts[best_i], ts[best_j]);
    ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(best_j));
    ts[best_i] = std::move(merged);
  }
  if (!ts[0].axes.empty()) throw std::logic_error("tensor network has open edges");
  return ts[0].data[0];
}

void check_assignment_input(const EquippedSurface& s, const CoeffTensor& coeffs) {
  if (s.alpha() != 0 || s.beta() != 0) throw std::invalid_argument("assignment sums need a (0,0) surface");
  if (coeffs.factors() != s.colors()) throw std::invalid_argument("coefficient factors differ from the color count");
  coeffs.validate(1e-9);
}

}  // namespace

EquippedSurface::EquippedSurface(ColoredMatching core) : core_(std::move(core)) {
  if (core_.colors() < 2) throw std::invalid_argument("surfaces need at least two colors");
}

EquippedSurface surface_from_tuple(const std::vector<ColoredPerm>& perms, int alpha, int beta, int n) {
  if (perms.size() < 2) throw std::invalid_argument("surfaces need at least two permutations");
  return EquippedSurface(ColoredMatching::from_tuple(perms, alpha, beta, n));
}

std::vector<ColoredPerm> tuple_from_surface(const EquippedSurface& s) { return s.core().to_tuple(); }

EquippedSurface surface_mul(const EquippedSurface& s1, const EquippedSurface& s2) {
  return EquippedSurface(glue(s1.core(), s2.core()));
}

EquippedSurface surface_involution(const EquippedSurface& s) { return EquippedSurface(s.core().involution()); }

EquippedSurface identity_surface(int colors, int level) {
  return surface_from_tuple(std::vector<ColoredPerm>(colors), level, level, level);
}

std::vector<SurfaceVertex> vertices(const EquippedSurface& s) {
  std::vector<SurfaceVertex> out;
  const int n = s.colors();
  for (int c = 1; c <= n; ++c) {
    for (auto& cyc : s.core().corner_cycles(c - 1, c % n)) out.push_back({c, std::move(cyc)});
  }
  return out;
}

std::vector<int> vertex_counts(const EquippedSurface& s) {
  std::vector<int> counts(s.colors(), 0);
  for (const auto& v : vertices(s)) ++counts[v.corner - 1];
  return counts;
}

std::vector<int> vertex_counts_by_color(const EquippedSurface& s) {
  if (s.colors() != 3) throw std::invalid_argument("vertex colors are defined for triangles");
  auto c = vertex_counts(s);
  return {c[1], c[2], c[0]};
}

std::vector<SurfaceComponent> components(const EquippedSurface& s) {
  const int n = s.colors();
  auto comps = s.core().components();
  std::vector<int> comp_of(s.plus_faces(), -1);
  std::vector<SurfaceComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    SurfaceComponent sc;
    sc.plus_faces = comps[i].plus;
    sc.minus_faces = comps[i].minus;
    sc.vertices.assign(n, 0);
    for (int x : sc.plus_faces) comp_of[x] = static_cast<int>(i);
    out.push_back(std::move(sc));
  }
  for (const auto& v : vertices(s)) ++out[comp_of[v.plus_faces.front()]].vertices[v.corner - 1];
  for (auto& sc : out) {
    const int p = static_cast<int>(sc.plus_faces.size());
    for (int v : sc.vertices) sc.V += v;
    sc.E = n * p;
    sc.F = 2 * p;
    sc.euler = sc.V - sc.E + sc.F;
    sc.genus = (2 - sc.euler) / 2;
  }
  return out;
}

std::string surface_canon(const EquippedSurface& s) { return s.core().canon("surface"); }

std::complex<double> spherical_assignment_sum(const EquippedSurface& s, const CoeffTensor& coeffs) {
  check_assignment_input(s, coeffs);
  const ColoredMatching& m = s.core();
  const int n = s.colors(), cells = m.cells();
  std::vector<cplx> conj(coeffs.coeffs.size());
  for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = std::conj(coeffs.coeffs[i]);
  cplx value = 1;
  for (const auto& comp : m.components()) {
    std::vector<EdgeTensor> ts;
    // Edge (c, x): side of color c of plus face x.
    for (int x : comp.plus) {
      EdgeTensor t{{}, coeffs.dims, coeffs.coeffs};
      for (int c = 0; c < n; ++c) t.axes.push_back(c * cells + x);
      ts.push_back(std::move(t));
    }
    for (int y : comp.minus) {
      EdgeTensor t{{}, coeffs.dims, conj};
      for (int c = 0; c < n; ++c) t.axes.push_back(c * cells + m.plus_partner(c, y));
      ts.push_back(std::move(t));
    }
    value *= contract_network(std::move(ts));
  }
  return value;
}

std::complex<double> spherical_assignment_sum_bruteforce(const EquippedSurface& s, const CoeffTensor& coeffs,
                                                         std::uint64_t bound) {
  check_assignment_input(s, coeffs);
  const ColoredMatching& m = s.core();
  const int n = s.colors(), cells = m.cells();
  // Edge (c, x) takes values in 0..dims[c]-1.
  std::vector<int> edge_dims;
  std::uint64_t total = 1;
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < cells; ++x) {
      edge_dims.push_back(coeffs.dims[c]);
      total *= static_cast<std::uint64_t>(coeffs.dims[c]);
      if (total > bound) throw BoundExceeded("too many edge assignments");
    }
  }
  auto strides = strides_of(coeffs.dims);
  std::vector<int> val(edge_dims.size(), 0);
  cplx sum = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    cplx term = 1;
    for (int x = 0; x < cells; ++x) {
      std::size_t off = 0;
      for (int c = 0; c < n; ++c) off += strides[c] * static_cast<std::size_t>(val[c * cells + x]);
      term *= coeffs.coeffs[off];
    }
    for (int y = 0; y < cells; ++y) {
      std::size_t off = 0;
      for (int c = 0; c < n; ++c) off += strides[c] * static_cast<std::size_t>(val[c * cells + m.plus_partner(c, y)]);
      term *= std::conj(coeffs.coeffs[off]);
    }
    sum += term;
    for (int i = static_cast<int>(val.size()) - 1; i >= 0; --i) {
      if (++val[i] < edge_dims[i]) break;
      val[i] = 0;
    }
  }
  return sum;
}

std::string surface_to_json(const EquippedSurface& s) { return s.core().to_json("surface"); }

EquippedSurface surface_from_json(const std::string& text) {
  return EquippedSurface(ColoredMatching::from_json(text, "surface"));
}

std::string surface_to_dot(const EquippedSurface& s) { return s.core().to_dot("surface"); }

}  // namespace traincat
