#include "traincat/coset_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace traincat {

PairSpec PairSpec::diagonal(int copies) {
  if (copies < 2) throw std::invalid_argument("diagonal pair needs at least two copies");
  return {PairKind::Diagonal, copies, 1};
}

PairSpec PairSpec::wreath(int valence) {
  if (valence < 1) throw std::invalid_argument("valence must be positive");
  return {PairKind::Wreath, 1, valence};
}

PairSpec PairSpec::young(int colors) {
  if (colors < 1) throw std::invalid_argument("color count must be positive");
  return {PairKind::Young, 1, colors};
}

std::string PairSpec::name() const {
  switch (kind) {
    case PairKind::Bisymmetric: return "bisymmetric";
    case PairKind::Diagonal: return "diagonal:" + std::to_string(copies);
    case PairKind::Wreath: return "wreath:" + std::to_string(colors);
    case PairKind::Young: return "young:" + std::to_string(colors);
  }
  return "?";
}

void validate_element(const PairSpec& spec, const GroupElement& g) {
  if (static_cast<int>(g.size()) != spec.copies)
    throw std::invalid_argument("element has " + std::to_string(g.size()) + " components, pair " + spec.name() +
                                " needs " + std::to_string(spec.copies));
  for (const auto& c : g) {
    if (c.color_count() != spec.colors) throw std::invalid_argument("component color count does not match the pair");
  }
}

GroupElement identity_element(const PairSpec& spec) { return GroupElement(spec.copies, ColoredPerm(spec.colors)); }

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("component count mismatch");
  GroupElement r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(compose(a[i], b[i]));
  return r;
}

GroupElement inverse_element(const GroupElement& g) {
  GroupElement r;
  r.reserve(g.size());
  for (const auto& c : g) r.push_back(inverse(c));
  return r;
}

int max_support(const GroupElement& g) {
  int s = 0;
  for (const auto& c : g) s = std::max(s, c.max_index());
  return s;
}

GroupElement theta_element(const PairSpec& spec, const CosetLevel& beta, int j) {
  if (spec.kind != PairKind::Young) return GroupElement(spec.copies, theta_j(beta.at(1), j, spec.colors));
  std::vector<ColoredPerm::Entry> entries;
  for (int c = 1; c <= spec.colors; ++c) {
    const ColoredPerm block = theta_j(beta.at(c), j);
    for (const auto& [x, y] : block.entries())
      entries.push_back({Point{c, x.index}, Point{c, y.index}});
  }
  return {ColoredPerm::from_entries(spec.colors, std::move(entries))};
}

int default_j(const PairSpec& spec, const GroupElement& p, const GroupElement& q, const CosetLevel& alpha,
              const CosetLevel& beta, const CosetLevel& gamma) {
  // Outer levels above the supports count as support: theta must clear them too.
  int s = std::max({max_support(p), max_support(q), alpha.max(), gamma.max()});
  int b = spec.kind == PairKind::Young ? beta.min() : beta.at(1);
  return std::max(1, s - b + 1);
}

GroupElement theta_product(const PairSpec& spec, const GroupElement& p, const GroupElement& q,
                           const CosetLevel& beta, int j) {
  validate_element(spec, p);
  validate_element(spec, q);
  return multiply(multiply(p, theta_element(spec, beta, j)), q);
}

CosetProduct coset_product_rep(const PairSpec& spec, const GroupElement& p, const GroupElement& q,
                               const CosetLevel& alpha, const CosetLevel& beta, const CosetLevel& gamma) {
  int j = default_j(spec, p, q, alpha, beta, gamma);
  return {theta_product(spec, p, q, beta, j), j};
}

bool stabilization_check(const PairSpec& spec, const GroupElement& p, const GroupElement& q,
                         const CosetLevel& alpha, const CosetLevel& beta, const CosetLevel& gamma,
                         const Encoder& encoder, int extra) {
  if (extra < 1) throw std::invalid_argument("extra must be at least 1");
  int j = default_j(spec, p, q, alpha, beta, gamma);
  std::string first = encoder(theta_product(spec, p, q, beta, j), alpha, gamma);
  for (int i = 1; i <= extra; ++i) {
    if (encoder(theta_product(spec, p, q, beta, j + i), alpha, gamma) != first) return false;
  }
  return true;
}

std::uint64_t default_bound() {
  if (const char* env = std::getenv("TRAINCAT_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

namespace {

std::vector<int> transposition_of(int points, int a, int b) {
  std::vector<int> t(points);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[a], t[b]);
  return t;
}

}  // namespace

FiniteDoubleCosets::FiniteDoubleCosets(const PairSpec& spec, int n, const CosetLevel& alpha, const CosetLevel& beta,
                                       std::uint64_t bound)
    : spec_(spec), n_(n), blocks_(spec.copies), points_(n * spec.colors) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (points_ > 20) throw BoundExceeded("finite group too large");
  for (int i = 2; i <= points_; ++i) block_order_ *= static_cast<std::uint64_t>(i);
  for (int b = 0; b < blocks_; ++b) {
    if (order_ > bound / block_order_) throw BoundExceeded("group order exceeds bound " + std::to_string(bound));
    order_ *= block_order_;
  }
  if (order_ > bound) throw BoundExceeded("group order exceeds bound " + std::to_string(bound));

  const int l = spec.colors;
  auto gens = [&](const CosetLevel& level) {
    std::vector<std::vector<int>> out;
    switch (spec.kind) {
      case PairKind::Bisymmetric:
      case PairKind::Diagonal:
        for (int k = level.at(1); k + 1 < n; ++k) out.push_back(transposition_of(points_, k, k + 1));
        break;
      case PairKind::Wreath:
        // Swap neighbouring free columns, and colors within the first free column.
        for (int k = level.at(1); k + 1 < n; ++k) {
          std::vector<int> t(points_);
          std::iota(t.begin(), t.end(), 0);
          for (int c = 0; c < l; ++c) std::swap(t[k * l + c], t[(k + 1) * l + c]);
          out.push_back(t);
        }
        if (level.at(1) < n) {
          for (int c = 0; c + 1 < l; ++c)
            out.push_back(transposition_of(points_, level.at(1) * l + c, level.at(1) * l + c + 1));
        }
        break;
      case PairKind::Young:
        for (int c = 0; c < l; ++c) {
          for (int k = level.at(c + 1); k + 1 < n; ++k) out.push_back(transposition_of(points_, k * l + c, (k + 1) * l + c));
        }
        break;
    }
    return out;
  };
  left_gens_ = gens(alpha);
  right_gens_ = gens(beta);

  orbit_.assign(order_, -1);
  std::vector<std::uint64_t> queue;
  Flat g, h(blocks_ * points_);
  for (std::uint64_t start = 0; start < order_; ++start) {
    if (orbit_[start] >= 0) continue;
    int id = orbit_count_++;
    orbit_[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      g = unrank(queue[head]);
      auto visit = [&] {
        std::uint64_t r = rank_flat(h);
        if (orbit_[r] < 0) {
          orbit_[r] = id;
          queue.push_back(r);
        }
      };
      for (const auto& k : left_gens_) {
        for (int i = 0; i < blocks_ * points_; ++i) h[i] = k[g[i]];
        visit();
      }
      for (const auto& k : right_gens_) {
        for (int b = 0; b < blocks_; ++b)
          for (int x = 0; x < points_; ++x) h[b * points_ + x] = g[b * points_ + k[x]];
        visit();
      }
    }
  }
}

FiniteDoubleCosets::Flat FiniteDoubleCosets::unrank(std::uint64_t r) const {
  Flat f(blocks_ * points_);
  std::vector<int> avail;
  for (int b = blocks_ - 1; b >= 0; --b) {
    std::uint64_t code = r % block_order_;
    r /= block_order_;
    avail.resize(points_);
    std::iota(avail.begin(), avail.end(), 0);
    // Lehmer digit i has radix points_ - i.
    std::vector<int> digits(points_);
    for (int i = points_ - 1; i >= 0; --i) {
      std::uint64_t radix = static_cast<std::uint64_t>(points_ - i);
      digits[i] = static_cast<int>(code % radix);
      code /= radix;
    }
    for (int i = 0; i < points_; ++i) {
      f[b * points_ + i] = avail[digits[i]];
      avail.erase(avail.begin() + digits[i]);
    }
  }
  return f;
}

std::uint64_t FiniteDoubleCosets::rank_flat(const Flat& f) const {
  std::uint64_t r = 0;
  for (int b = 0; b < blocks_; ++b) {
    std::uint64_t code = 0;
    const int* p = f.data() + b * points_;
    for (int i = 0; i < points_; ++i) {
      int smaller = 0;
      for (int k = i + 1; k < points_; ++k) smaller += p[k] < p[i];
      code = code * static_cast<std::uint64_t>(points_ - i) + static_cast<std::uint64_t>(smaller);
    }
    r = r * block_order_ + code;
  }
  return r;
}

FiniteDoubleCosets::Flat FiniteDoubleCosets::to_flat(const GroupElement& g) const {
  validate_element(spec_, g);
  if (max_support(g) > n_) throw std::invalid_argument("element support exceeds n");
  const int l = spec_.colors;
  Flat f(blocks_ * points_);
  for (int b = 0; b < blocks_; ++b) {
    for (int x = 0; x < points_; ++x) {
      Point y = g[b](Point{x % l + 1, x / l + 1});
      f[b * points_ + x] = (y.index - 1) * l + (y.color - 1);
    }
  }
  return f;
}

GroupElement FiniteDoubleCosets::element(std::uint64_t rank) const {
  Flat f = unrank(rank);
  const int l = spec_.colors;
  GroupElement g;
  for (int b = 0; b < blocks_; ++b) {
    std::vector<ColoredPerm::Entry> entries;
    for (int x = 0; x < points_; ++x) {
      int y = f[b * points_ + x];
      if (x != y) entries.push_back({Point{x % l + 1, x / l + 1}, Point{y % l + 1, y / l + 1}});
    }
    g.push_back(ColoredPerm::from_entries(l, std::move(entries)));
  }
  return g;
}

std::uint64_t FiniteDoubleCosets::rank(const GroupElement& g) const { return rank_flat(to_flat(g)); }

int FiniteDoubleCosets::orbit_of(const GroupElement& g) const { return orbit_[rank(g)]; }

std::vector<std::vector<GroupElement>> FiniteDoubleCosets::orbits() const {
  std::vector<std::vector<GroupElement>> out(orbit_count_);
  for (std::uint64_t r = 0; r < order_; ++r) out[orbit_[r]].push_back(element(r));
  return out;
}

std::vector<std::vector<GroupElement>> enumerate_double_cosets_finite(const PairSpec& spec, int n,
                                                                      const CosetLevel& alpha,
                                                                      const CosetLevel& beta, std::uint64_t bound) {
  return FiniteDoubleCosets(spec, n, alpha, beta, bound).orbits();
}

bool same_coset_finite(const PairSpec& spec, int n, const CosetLevel& alpha, const CosetLevel& beta,
                       const GroupElement& g, const GroupElement& h, std::uint64_t bound) {
  FiniteDoubleCosets cosets(spec, n, alpha, beta, bound);
  return cosets.orbit_of(g) == cosets.orbit_of(h);
}

ColoredPerm random_perm(Rng& rng, int n, int colors) {
  std::vector<Point> pts;
  for (int k = 1; k <= n; ++k)
    for (int c = 1; c <= colors; ++c) pts.push_back(Point{c, k});
  std::vector<Point> img = pts;
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<ColoredPerm::Entry> entries;
  for (std::size_t i = 0; i < pts.size(); ++i) entries.push_back({pts[i], img[i]});
  return ColoredPerm::from_entries(colors, std::move(entries));
}

GroupElement random_element(Rng& rng, const PairSpec& spec, int n) {
  GroupElement g;
  for (int b = 0; b < spec.copies; ++b) g.push_back(random_perm(rng, n, spec.colors));
  return g;
}

GroupElement random_subgroup_element(Rng& rng, const PairSpec& spec, const CosetLevel& level, int n) {
  auto shuffled_tail = [&](int from) {
    std::vector<int> idx;
    for (int k = from + 1; k <= n; ++k) idx.push_back(k);
    std::vector<int> img = idx;
    std::shuffle(img.begin(), img.end(), rng);
    return std::pair{idx, img};
  };
  std::vector<ColoredPerm::Entry> entries;
  const int l = spec.colors;
  switch (spec.kind) {
    case PairKind::Bisymmetric:
    case PairKind::Diagonal: {
      auto [idx, img] = shuffled_tail(level.at(1));
      for (std::size_t i = 0; i < idx.size(); ++i) entries.push_back({Point{1, idx[i]}, Point{1, img[i]}});
      return GroupElement(spec.copies, ColoredPerm::from_entries(1, std::move(entries)));
    }
    case PairKind::Wreath: {
      auto [idx, img] = shuffled_tail(level.at(1));
      std::vector<int> colors(l);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        std::iota(colors.begin(), colors.end(), 1);
        std::shuffle(colors.begin(), colors.end(), rng);
        for (int c = 1; c <= l; ++c) entries.push_back({Point{c, idx[i]}, Point{colors[c - 1], img[i]}});
      }
      return {ColoredPerm::from_entries(l, std::move(entries))};
    }
    case PairKind::Young: {
      for (int c = 1; c <= l; ++c) {
        auto [idx, img] = shuffled_tail(level.at(c));
        for (std::size_t i = 0; i < idx.size(); ++i) entries.push_back({Point{c, idx[i]}, Point{c, img[i]}});
      }
      return {ColoredPerm::from_entries(l, std::move(entries))};
    }
  }
  return identity_element(spec);
}

}  // namespace traincat
