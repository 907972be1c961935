#pragma once

#include <string>
#include <variant>

#include "traincat/bigraph.hpp"
#include "traincat/chips.hpp"
#include "traincat/coset_oracle.hpp"
#include "traincat/gem.hpp"
#include "traincat/surfaces.hpp"

namespace traincat {

enum class EncoderKind { Chips, Surfaces, Gem, Bigraph };

using CosetDatum = std::variant<Chip, EquippedSurface, GemComplex, BipartiteDiagram>;

/// Uniform access to the four combinatorial encodings of double cosets.
class Encoding {
 public:
  /// param: colors for Surfaces, dimension for Gem, valence for Bigraph; ignored for Chips.
  Encoding(EncoderKind kind, int param);

  EncoderKind kind() const { return kind_; }
  const PairSpec& spec() const { return spec_; }
  std::string name() const;

  /// Datum of K[alpha] g K[beta], truncated at the support of g.
  CosetDatum encode(const GroupElement& g, int alpha, int beta) const;
  CosetDatum mul(const CosetDatum& a, const CosetDatum& b) const;
  CosetDatum involution(const CosetDatum& a) const;
  CosetDatum identity(int level) const;
  std::string canon(const CosetDatum& a) const;
  std::string to_json(const CosetDatum& a) const;
  CosetDatum from_json(const std::string& text) const;
  std::string to_dot(const CosetDatum& a) const;
  int alpha(const CosetDatum& a) const;
  int beta(const CosetDatum& a) const;
  /// canon(encode(g, alpha, beta)), usable with stabilization_check.
  Encoder encoder() const;

 private:
  EncoderKind kind_;
  int param_;
  PairSpec spec_;
};

/// "bi", "tri", "ngon:K", "gem:N", "bigraph:L" (also "wreath:L").
Encoding parse_encoding(const std::string& pair);

}  // namespace traincat
