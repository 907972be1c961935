#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traincat/matching.hpp"
#include "traincat/surfaces.hpp"

namespace traincat {

/// Oriented pseudomanifold of dimension n, given by its chambers (n-simplices)
/// and one plus-minus matching per facet color 0..n. Chamber x and
/// core().partner(c, x) are glued along their facets of color c.
class GemComplex {
 public:
  GemComplex() = default;
  explicit GemComplex(ColoredMatching core);

  const ColoredMatching& core() const { return core_; }
  int dim() const { return core_.colors() - 1; }
  int alpha() const { return core_.alpha(); }
  int beta() const { return core_.beta(); }
  int plus_chambers() const { return core_.cells(); }

  friend bool operator==(const GemComplex&, const GemComplex&) = default;

 private:
  ColoredMatching core_;
};

/// A face spanned by the vertex colors in W: a component of the chamber graph
/// that uses only the colors outside W.
struct FaceRecord {
  std::uint32_t colors = 0;  // the set W as a bit mask
  std::vector<int> plus_chambers;
  std::vector<int> minus_chambers;
  int dimension() const;
};

struct FVector {
  std::vector<int> f;  // f[i] = number of faces of dimension i
  std::vector<int> component_euler;
};

GemComplex gem_from_tuple(const std::vector<ColoredPerm>& perms, int alpha, int beta, int n);
std::vector<FaceRecord> faces(const GemComplex& g, const std::vector<int>& w);
std::vector<FaceRecord> faces(const GemComplex& g, std::uint32_t w);
GemComplex gem_mul(const GemComplex& g1, const GemComplex& g2);
GemComplex gem_involution(const GemComplex& g);
GemComplex identity_gem(int dim, int level);
FVector f_vector(const GemComplex& g);
EquippedSurface surface_of_gem(const GemComplex& g);
std::string gem_canon(const GemComplex& g);

/// Vertex counts of the product before and after normalization: `naive`
/// identifies the vertices of the two factors across the glued holes, while
/// `normalized` counts the vertices of the glued complex (both keep trivial
/// components so that the counts are comparable).
struct VertexCountComparison {
  int naive = 0;
  int normalized = 0;
};
VertexCountComparison compare_vertex_counts(const GemComplex& g1, const GemComplex& g2);

std::string gem_to_json(const GemComplex& g);
GemComplex gem_from_json(const std::string& text);
/// OFF-style listing of a 2-dimensional gem: its vertices and triangles.
std::string gem_to_off(const GemComplex& g);

}  // namespace traincat
