#include "traincat/encoders.hpp"

#include <algorithm>

namespace traincat {

namespace {

template <class T>
const T& as(const CosetDatum& d) {
  if (const T* p = std::get_if<T>(&d)) return *p;
  throw std::invalid_argument("coset datum of the wrong encoding");
}

int parse_param(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad " + what + " in pair: " + s);
}

}  // namespace

Encoding::Encoding(EncoderKind kind, int param) : kind_(kind), param_(param) {
  switch (kind) {
    case EncoderKind::Chips:
      param_ = 2;
      spec_ = PairSpec::bisymmetric();
      break;
    case EncoderKind::Surfaces:
      if (param < 2) throw std::invalid_argument("surfaces need at least two colors");
      spec_ = PairSpec::diagonal(param);
      break;
    case EncoderKind::Gem:
      if (param < 1) throw std::invalid_argument("gems need dimension at least 1");
      spec_ = PairSpec::diagonal(param + 1);
      break;
    case EncoderKind::Bigraph:
      spec_ = PairSpec::wreath(param);
      break;
  }
}

std::string Encoding::name() const {
  switch (kind_) {
    case EncoderKind::Chips: return "chips";
    case EncoderKind::Surfaces: return "surfaces:" + std::to_string(param_);
    case EncoderKind::Gem: return "gem:" + std::to_string(param_);
    case EncoderKind::Bigraph: return "bigraph:" + std::to_string(param_);
  }
  return "?";
}

CosetDatum Encoding::encode(const GroupElement& g, int alpha, int beta) const {
  validate_element(spec_, g);
  const int n = std::max({max_support(g), alpha, beta, 1});
  switch (kind_) {
    case EncoderKind::Chips: return chip_from_pair(g[0], g[1], alpha, beta);
    case EncoderKind::Surfaces: return surface_from_tuple(g, alpha, beta, n);
    case EncoderKind::Gem: return gem_from_tuple(g, alpha, beta, n);
    case EncoderKind::Bigraph: return graph_from_perm(g[0], alpha, beta, n);
  }
  throw std::logic_error("unknown encoding");
}

CosetDatum Encoding::mul(const CosetDatum& a, const CosetDatum& b) const {
  switch (kind_) {
    case EncoderKind::Chips: return chip_mul(as<Chip>(a), as<Chip>(b));
    case EncoderKind::Surfaces: return surface_mul(as<EquippedSurface>(a), as<EquippedSurface>(b));
    case EncoderKind::Gem: return gem_mul(as<GemComplex>(a), as<GemComplex>(b));
    case EncoderKind::Bigraph: return graph_mul(as<BipartiteDiagram>(a), as<BipartiteDiagram>(b));
  }
  throw std::logic_error("unknown encoding");
}

CosetDatum Encoding::involution(const CosetDatum& a) const {
  switch (kind_) {
    case EncoderKind::Chips: return chip_involution(as<Chip>(a));
    case EncoderKind::Surfaces: return surface_involution(as<EquippedSurface>(a));
    case EncoderKind::Gem: return gem_involution(as<GemComplex>(a));
    case EncoderKind::Bigraph: return graph_involution(as<BipartiteDiagram>(a));
  }
  throw std::logic_error("unknown encoding");
}

CosetDatum Encoding::identity(int level) const { return encode(identity_element(spec_), level, level); }

std::string Encoding::canon(const CosetDatum& a) const {
  switch (kind_) {
    case EncoderKind::Chips: return chip_canon(as<Chip>(a));
    case EncoderKind::Surfaces: return surface_canon(as<EquippedSurface>(a));
    case EncoderKind::Gem: return gem_canon(as<GemComplex>(a));
    case EncoderKind::Bigraph: return graph_canon(as<BipartiteDiagram>(a));
  }
  throw std::logic_error("unknown encoding");
}

std::string Encoding::to_json(const CosetDatum& a) const {
  switch (kind_) {
    case EncoderKind::Chips: return chip_to_json(as<Chip>(a));
    case EncoderKind::Surfaces: return surface_to_json(as<EquippedSurface>(a));
    case EncoderKind::Gem: return gem_to_json(as<GemComplex>(a));
    case EncoderKind::Bigraph: return graph_to_json(as<BipartiteDiagram>(a));
  }
  throw std::logic_error("unknown encoding");
}

CosetDatum Encoding::from_json(const std::string& text) const {
  switch (kind_) {
    case EncoderKind::Chips: return chip_from_json(text);
    case EncoderKind::Surfaces: {
      EquippedSurface s = surface_from_json(text);
      if (s.colors() != param_) throw std::invalid_argument("surface has the wrong number of colors");
      return s;
    }
    case EncoderKind::Gem: {
      GemComplex g = gem_from_json(text);
      if (g.dim() != param_) throw std::invalid_argument("gem has the wrong dimension");
      return g;
    }
    case EncoderKind::Bigraph: {
      BipartiteDiagram d = graph_from_json(text);
      if (d.valence() != param_) throw std::invalid_argument("bigraph has the wrong valence");
      return d;
    }
  }
  throw std::logic_error("unknown encoding");
}

std::string Encoding::to_dot(const CosetDatum& a) const {
  switch (kind_) {
    case EncoderKind::Chips: {
      const Chip& c = as<Chip>(a);
      std::string out = "graph chip {\n";
      auto node = [](const ChipEndpoint& e) {
        return std::string(e.row == Row::Top ? "t" : "b") + (e.side == Side::Left ? "L" : "R") + std::to_string(e.index);
      };
      for (const auto& arc : c.arcs())
        out += "  " + node(arc.a) + " -- " + node(arc.b) + " [label=\"" + std::to_string(arc.roods) + "\"];\n";
      for (std::size_t i = 0; i < c.cycles().size(); ++i)
        out += "  cycle" + std::to_string(i + 1) + " [shape=circle, label=\"" + std::to_string(c.cycles()[i]) + "\"];\n";
      return out + "}\n";
    }
    case EncoderKind::Surfaces: return surface_to_dot(as<EquippedSurface>(a));
    case EncoderKind::Gem: return as<GemComplex>(a).core().to_dot("gem");
    case EncoderKind::Bigraph: return graph_to_dot(as<BipartiteDiagram>(a));
  }
  throw std::logic_error("unknown encoding");
}

int Encoding::alpha(const CosetDatum& a) const {
  return std::visit([](const auto& d) { return d.alpha(); }, a);
}

int Encoding::beta(const CosetDatum& a) const {
  return std::visit([](const auto& d) { return d.beta(); }, a);
}

Encoder Encoding::encoder() const {
  Encoding self = *this;
  return [self](const GroupElement& g, const CosetLevel& alpha, const CosetLevel& beta) {
    return self.canon(self.encode(g, alpha.at(1), beta.at(1)));
  };
}

Encoding parse_encoding(const std::string& pair) {
  if (pair == "bi" || pair == "bisymmetric" || pair == "chips") return Encoding(EncoderKind::Chips, 2);
  if (pair == "tri" || pair == "trisymmetric") return Encoding(EncoderKind::Surfaces, 3);
  auto colon = pair.find(':');
  if (colon != std::string::npos) {
    std::string head = pair.substr(0, colon), arg = pair.substr(colon + 1);
    if (head == "ngon" || head == "surfaces") return Encoding(EncoderKind::Surfaces, parse_param(arg, "color count"));
    if (head == "gem") return Encoding(EncoderKind::Gem, parse_param(arg, "dimension"));
    if (head == "bigraph" || head == "wreath") return Encoding(EncoderKind::Bigraph, parse_param(arg, "valence"));
  }
  throw std::invalid_argument("unknown pair: " + pair);
}

}  // namespace traincat
