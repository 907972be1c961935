#pragma once

#include <complex>
#include <string>
#include <vector>

#include "traincat/coeff_tensor.hpp"
#include "traincat/matching.hpp"
#include "traincat/perm.hpp"

namespace traincat {

/// Oriented surface glued from n-gons with colored sides, checkerwise signed,
/// with plus faces labeled 1..beta and minus faces labeled 1..alpha.
/// Side colors 1..n run clockwise on plus faces; plus face x and minus face
/// core().partner(c-1, x) share their side of color c.
class EquippedSurface {
 public:
  EquippedSurface() = default;
  explicit EquippedSurface(ColoredMatching core);

  const ColoredMatching& core() const { return core_; }
  int colors() const { return core_.colors(); }
  int alpha() const { return core_.alpha(); }
  int beta() const { return core_.beta(); }
  int plus_faces() const { return core_.cells(); }

  friend bool operator==(const EquippedSurface&, const EquippedSurface&) = default;

 private:
  ColoredMatching core_;
};

struct SurfaceComponent {
  std::vector<int> plus_faces;
  std::vector<int> minus_faces;
  /// vertices[c-1]: vertices at the corner between colors c and c+1 (cyclically).
  std::vector<int> vertices;
  int V = 0;
  int E = 0;
  int F = 0;
  int euler = 0;
  int genus = 0;
};

/// A vertex: the cyclic run of plus faces met by walking around it.
struct SurfaceVertex {
  int corner = 1;  // between colors corner and corner+1 (mod n)
  std::vector<int> plus_faces;
};

EquippedSurface surface_from_tuple(const std::vector<ColoredPerm>& perms, int alpha, int beta, int n);
std::vector<ColoredPerm> tuple_from_surface(const EquippedSurface& s);
EquippedSurface surface_mul(const EquippedSurface& s1, const EquippedSurface& s2);
EquippedSurface surface_involution(const EquippedSurface& s);
EquippedSurface identity_surface(int colors, int level);

std::vector<SurfaceVertex> vertices(const EquippedSurface& s);
/// Vertex counts indexed by corner 1..n.
std::vector<int> vertex_counts(const EquippedSurface& s);
/// For triangles: vertex counts by the color opposite to the corner (red, yellow, blue).
std::vector<int> vertex_counts_by_color(const EquippedSurface& s);
std::vector<SurfaceComponent> components(const EquippedSurface& s);

std::string surface_canon(const EquippedSurface& s);

/// Sum over index assignments to edges of prod(plus faces) alpha * prod(minus faces) conj(alpha),
/// contracted component by component.
std::complex<double> spherical_assignment_sum(const EquippedSurface& s, const CoeffTensor& coeffs);
/// The same sum by raw enumeration of all edge assignments (tiny instances only).
std::complex<double> spherical_assignment_sum_bruteforce(const EquippedSurface& s, const CoeffTensor& coeffs,
                                                         std::uint64_t bound = 10'000'000);

std::string surface_to_json(const EquippedSurface& s);
EquippedSurface surface_from_json(const std::string& text);
std::string surface_to_dot(const EquippedSurface& s);

}  // namespace traincat
