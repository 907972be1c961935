#include "traincat/bigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace traincat {

namespace {

void check_labels(const std::vector<int>& labels, int level, const char* what) {
  std::vector<int> seen(level + 1, 0);
  for (int l : labels) {
    if (l == 0) continue;
    if (l < 0 || l > level || seen[l]++) throw std::invalid_argument(std::string("bad ") + what + " labels");
  }
  for (int k = 1; k <= level; ++k)
    if (!seen[k]) throw std::invalid_argument(std::string("missing ") + what + " label " + std::to_string(k));
}

// Canonical form of a vertex-colored graph whose edges carry integer weights,
// by individualization and refinement. Every leaf of the search tree is
// encoded and the smallest code wins.
class CanonicalSearch {
 public:
  CanonicalSearch(std::vector<int> init, std::vector<std::vector<int>> weight,
                  std::function<std::vector<int>(const std::vector<int>&)> encode)
      : n_(static_cast<int>(init.size())), weight_(std::move(weight)), encode_(std::move(encode)) {
    search(ranks(init));
  }

  const std::vector<int>& best() const { return best_; }

 private:
  static std::vector<int> ranks(const std::vector<int>& keys) {
    std::vector<int> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    return out;
  }

  static int distinct(const std::vector<int>& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  }

  void refine(std::vector<int>& c) const {
    int cells = distinct(c);
    std::vector<std::vector<long>> sig(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(1, c[v]);
        std::vector<long> nb;
        for (int u = 0; u < n_; ++u)
          if (weight_[v][u]) nb.push_back(static_cast<long>(c[u]) * 1'000'000L + weight_[v][u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      int now = rank + 1;
      c = std::move(next);
      if (now == cells) break;
      cells = now;
    }
  }

  void search(std::vector<int> c) {
    refine(c);
    if (distinct(c) == n_) {
      auto code = encode_(c);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    std::vector<int> count(n_, 0);
    for (int v : c) ++count[v];
    int cell = 0;
    while (count[cell] < 2) ++cell;
    for (int v = 0; v < n_; ++v) {
      if (c[v] != cell) continue;
      std::vector<int> d(n_);
      for (int u = 0; u < n_; ++u) d[u] = 2 * c[u] + (u == v ? 0 : 1);
      search(ranks(d));
    }
  }

  int n_;
  std::vector<std::vector<int>> weight_;
  std::function<std::vector<int>(const std::vector<int>&)> encode_;
  std::vector<int> best_;
};

}  // namespace

BipartiteDiagram::BipartiteDiagram(int valence, std::vector<int> match, std::vector<int> plus_labels,
                                   std::vector<int> minus_labels, int alpha, int beta)
    : l_(valence),
      alpha_(alpha),
      beta_(beta),
      match_(std::move(match)),
      plus_label_(std::move(plus_labels)),
      minus_label_(std::move(minus_labels)) {
  if (valence < 1) throw std::invalid_argument("valence must be positive");
  const int n = vertices();
  if (static_cast<int>(minus_label_.size()) != n) throw std::invalid_argument("plus and minus vertex counts differ");
  if (static_cast<int>(match_.size()) != n * l_) throw std::invalid_argument("every vertex needs l semi-edges");
  inv_.assign(n * l_, -1);
  for (int i = 0; i < n * l_; ++i) {
    int j = match_[i];
    if (j < 0 || j >= n * l_ || inv_[j] >= 0) throw std::invalid_argument("semi-edges are not perfectly matched");
    inv_[j] = i;
  }
  check_labels(plus_label_, beta, "plus");
  check_labels(minus_label_, alpha, "minus");
}

int BipartiteDiagram::plus_with_label(int k) const {
  auto it = std::find(plus_label_.begin(), plus_label_.end(), k);
  if (k <= 0 || it == plus_label_.end()) throw std::out_of_range("no plus vertex with that label");
  return static_cast<int>(it - plus_label_.begin());
}

BipartiteDiagram BipartiteDiagram::drop_trivial() const {
  const int n = vertices();
  std::vector<bool> drop_plus(n, false), drop_minus(n, false);
  bool any = false;
  for (int x = 0; x < n; ++x) {
    if (plus_label_[x]) continue;
    int y = match_[x * l_] / l_;
    if (minus_label_[y]) continue;
    bool trivial = true;
    for (int s = 1; s < l_ && trivial; ++s) trivial = match_[x * l_ + s] / l_ == y;
    if (trivial) drop_plus[x] = drop_minus[y] = any = true;
  }
  if (!any) return *this;
  std::vector<int> plus_new(n, -1), minus_new(n, -1);
  int np = 0, nm = 0;
  for (int v = 0; v < n; ++v) {
    if (!drop_plus[v]) plus_new[v] = np++;
    if (!drop_minus[v]) minus_new[v] = nm++;
  }
  std::vector<int> match(np * l_), pl(np), ml(nm);
  for (int v = 0; v < n; ++v) {
    if (plus_new[v] >= 0) {
      pl[plus_new[v]] = plus_label_[v];
      for (int s = 0; s < l_; ++s) {
        int m = match_[v * l_ + s];
        match[plus_new[v] * l_ + s] = minus_new[m / l_] * l_ + m % l_;
      }
    }
    if (minus_new[v] >= 0) ml[minus_new[v]] = minus_label_[v];
  }
  return BipartiteDiagram(l_, std::move(match), std::move(pl), std::move(ml), alpha_, beta_);
}

BipartiteDiagram BipartiteDiagram::shuffled(std::mt19937_64& rng) const {
  const int n = vertices();
  std::vector<int> sp(n), sm(n);
  std::iota(sp.begin(), sp.end(), 0);
  std::iota(sm.begin(), sm.end(), 0);
  std::shuffle(sp.begin(), sp.end(), rng);
  std::shuffle(sm.begin(), sm.end(), rng);
  // Slots of unlabeled vertices are also permuted, since they carry no meaning.
  std::vector<std::vector<int>> plus_slot(n), minus_slot(n);
  for (int v = 0; v < n; ++v) {
    plus_slot[v].resize(l_);
    minus_slot[v].resize(l_);
    std::iota(plus_slot[v].begin(), plus_slot[v].end(), 0);
    std::iota(minus_slot[v].begin(), minus_slot[v].end(), 0);
    if (!plus_label_[v]) std::shuffle(plus_slot[v].begin(), plus_slot[v].end(), rng);
    if (!minus_label_[v]) std::shuffle(minus_slot[v].begin(), minus_slot[v].end(), rng);
  }
  std::vector<int> match(n * l_), pl(n), ml(n);
  for (int x = 0; x < n; ++x) {
    pl[sp[x]] = plus_label_[x];
    ml[sm[x]] = minus_label_[x];
    for (int s = 0; s < l_; ++s) {
      int m = match_[x * l_ + s];
      int y = m / l_, t = m % l_;
      match[sp[x] * l_ + plus_slot[x][s]] = sm[y] * l_ + minus_slot[y][t];
    }
  }
  return BipartiteDiagram(l_, std::move(match), std::move(pl), std::move(ml), alpha_, beta_);
}

BipartiteDiagram graph_from_perm(const ColoredPerm& g, int alpha, int beta, int n) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("levels must be non-negative");
  if (g.max_index() > n) throw std::invalid_argument("support exceeds truncation");
  if (n < std::max(alpha, beta)) throw std::invalid_argument("truncation smaller than a level");
  const int l = g.color_count();
  std::vector<int> match(n * l);
  for (int k = 1; k <= n; ++k) {
    for (int c = 1; c <= l; ++c) {
      Point y = g(Point{c, k});
      match[(k - 1) * l + c - 1] = (y.index - 1) * l + y.color - 1;
    }
  }
  std::vector<int> pl(n, 0), ml(n, 0);
  for (int k = 1; k <= beta; ++k) pl[k - 1] = k;
  for (int k = 1; k <= alpha; ++k) ml[k - 1] = k;
  return BipartiteDiagram(l, std::move(match), std::move(pl), std::move(ml), alpha, beta).drop_trivial();
}

BipartiteDiagram graph_forget(const BipartiteDiagram& d, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("levels must be non-negative");
  alpha = std::min(alpha, d.alpha());
  beta = std::min(beta, d.beta());
  const int n = d.vertices(), l = d.valence();
  std::vector<int> match(n * l), pl(n), ml(n);
  for (int x = 0; x < n; ++x) {
    pl[x] = d.plus_label(x) <= beta ? d.plus_label(x) : 0;
    ml[x] = d.minus_label(x) <= alpha ? d.minus_label(x) : 0;
    for (int s = 0; s < l; ++s) match[x * l + s] = d.partner(x, s);
  }
  return BipartiteDiagram(l, std::move(match), std::move(pl), std::move(ml), alpha, beta).drop_trivial();
}

BipartiteDiagram graph_mul(const BipartiteDiagram& d1, const BipartiteDiagram& d2) {
  if (d1.beta() != d2.alpha()) throw std::invalid_argument("inner levels do not match");
  if (d1.valence() != d2.valence()) throw std::invalid_argument("valences differ");
  const int l = d1.valence(), beta = d1.beta();
  const int n1 = d1.vertices(), n2 = d2.vertices(), n = n1 + n2 - beta;
  // Plus vertices: d2's, then d1's unlabeled. Minus vertices: d1's, then d2's unlabeled.
  std::vector<int> plus_new(n1, -1), minus_new(n2, -1);
  int next = n2;
  for (int x = 0; x < n1; ++x)
    if (!d1.plus_label(x)) plus_new[x] = next++;
  next = n1;
  for (int y = 0; y < n2; ++y)
    if (!d2.minus_label(y)) minus_new[y] = next++;
  std::vector<int> match(n * l), pl(n, 0), ml(n, 0);
  for (int x = 0; x < n2; ++x) {
    pl[x] = d2.plus_label(x);
    for (int s = 0; s < l; ++s) {
      int m = d2.partner(x, s);
      int y = m / l, t = m % l;
      int k = d2.minus_label(y);
      // A semi-edge of color t+1 at exit k continues from entry k's semi-edge of the same color.
      match[x * l + s] = k ? d1.partner(d1.plus_with_label(k), t) : minus_new[y] * l + t;
    }
  }
  for (int x = 0; x < n1; ++x) {
    if (plus_new[x] < 0) continue;
    for (int s = 0; s < l; ++s) match[plus_new[x] * l + s] = d1.partner(x, s);
  }
  for (int y = 0; y < n1; ++y) ml[y] = d1.minus_label(y);
  return BipartiteDiagram(l, std::move(match), std::move(pl), std::move(ml), d1.alpha(), d2.beta()).drop_trivial();
}

BipartiteDiagram graph_involution(const BipartiteDiagram& d) {
  const int n = d.vertices(), l = d.valence();
  std::vector<int> match(n * l), pl(n), ml(n);
  for (int y = 0; y < n; ++y) {
    pl[y] = d.minus_label(y);
    ml[y] = d.plus_label(y);
    for (int t = 0; t < l; ++t) match[y * l + t] = d.plus_partner(y, t);
  }
  return BipartiteDiagram(l, std::move(match), std::move(pl), std::move(ml), d.beta(), d.alpha());
}

BipartiteDiagram identity_graph(int valence, int level) {
  return graph_from_perm(ColoredPerm(valence), level, level, level);
}

std::string graph_canon(const BipartiteDiagram& d) {
  const int n = d.vertices(), l = d.valence();
  // Components over plus vertices 0..n-1 and minus vertices n..2n-1.
  std::vector<int> comp(2 * n, -1);
  int ncomp = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int i = 0; i < l; ++i) {
        int u = v < n ? n + d.partner(v, i) / l : d.plus_partner(v - n, i) / l;
        if (comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }

  std::vector<std::string> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < 2 * n; ++v)
      if (comp[v] == c) verts.push_back(v);
    const int m = static_cast<int>(verts.size());
    std::vector<int> local(2 * n, -1);
    for (int i = 0; i < m; ++i) local[verts[i]] = i;
    // Vertex key: sign and label.
    std::vector<int> key(m);
    for (int i = 0; i < m; ++i) {
      int v = verts[i];
      key[i] = v < n ? 2 * d.plus_label(v) : 2 * d.minus_label(v - n) + 1;
    }
    // Edge multisets between a plus vertex and a minus vertex, by end colors.
    std::map<std::pair<int, int>, std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
      int x = verts[i];
      if (x >= n) continue;
      for (int s = 0; s < l; ++s) {
        int e = d.partner(x, s);
        int y = e / l, t = e % l;
        edges[{i, local[n + y]}].push_back(d.plus_color(x, s) * (l + 1) + d.minus_color(y, t));
      }
    }
    std::vector<std::vector<int>> distinct_sets;
    for (auto& [uv, set] : edges) {
      std::sort(set.begin(), set.end());
      distinct_sets.push_back(set);
    }
    std::sort(distinct_sets.begin(), distinct_sets.end());
    distinct_sets.erase(std::unique(distinct_sets.begin(), distinct_sets.end()), distinct_sets.end());
    const int kinds = static_cast<int>(distinct_sets.size());
    std::vector<std::vector<int>> weight(m, std::vector<int>(m, 0));
    for (const auto& [uv, set] : edges) {
      int id = static_cast<int>(std::lower_bound(distinct_sets.begin(), distinct_sets.end(), set) - distinct_sets.begin()) + 1;
      weight[uv.first][uv.second] = id;
      weight[uv.second][uv.first] = id + kinds;
    }
    auto encode = [&](const std::vector<int>& pos) {
      std::vector<int> at(m);
      for (int i = 0; i < m; ++i) at[pos[i]] = i;
      std::vector<int> code;
      code.push_back(m);
      for (int p = 0; p < m; ++p) code.push_back(key[at[p]]);
      for (int p = 0; p < m; ++p) {
        for (int q = 0; q < m; ++q) {
          int w = weight[at[p]][at[q]];
          if (w == 0 || w > kinds) continue;
          code.push_back(p);
          code.push_back(q);
          const auto& set = distinct_sets[w - 1];
          code.push_back(static_cast<int>(set.size()));
          code.insert(code.end(), set.begin(), set.end());
        }
      }
      return code;
    };
    CanonicalSearch search(key, weight, encode);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < search.best().size(); ++i) os << (i ? "," : "") << search.best()[i];
    os << ']';
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  out << "bigraph l=" << l << " a=" << d.alpha() << " b=" << d.beta() << ' ';
  for (const auto& p : parts) out << p;
  return out.str();
}

std::string graph_to_json(const BipartiteDiagram& d) {
  using nlohmann::json;
  const int l = d.valence();
  json edges = json::array();
  for (int x = 0; x < d.vertices(); ++x) {
    for (int s = 0; s < l; ++s) {
      int e = d.partner(x, s);
      edges.push_back({x + 1, s + 1, e / l + 1, e % l + 1});
    }
  }
  json j = {{"kind", "bigraph"},
            {"valence", l},
            {"alpha", d.alpha()},
            {"beta", d.beta()},
            {"vertices", d.vertices()},
            {"edges", edges},
            {"plus_labels", [&] {
               std::vector<int> v;
               for (int x = 0; x < d.vertices(); ++x) v.push_back(d.plus_label(x));
               return v;
             }()},
            {"minus_labels", [&] {
               std::vector<int> v;
               for (int y = 0; y < d.vertices(); ++y) v.push_back(d.minus_label(y));
               return v;
             }()}};
  return j.dump(2);
}

BipartiteDiagram graph_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    json j = json::parse(text);
    if (j.at("kind").get<std::string>() != "bigraph") throw std::invalid_argument("expected JSON of kind bigraph");
    const int l = j.at("valence").get<int>(), n = j.at("vertices").get<int>();
    if (l < 1 || n < 0) throw std::invalid_argument("bad bigraph sizes");
    std::vector<int> match(n * l, -1);
    for (const auto& e : j.at("edges")) {
      int x = e.at(0).get<int>() - 1, s = e.at(1).get<int>() - 1, y = e.at(2).get<int>() - 1, t = e.at(3).get<int>() - 1;
      if (x < 0 || x >= n || s < 0 || s >= l || y < 0 || y >= n || t < 0 || t >= l)
        throw std::invalid_argument("bigraph edge out of range");
      match[x * l + s] = y * l + t;
    }
    return BipartiteDiagram(l, std::move(match), j.at("plus_labels").get<std::vector<int>>(),
                            j.at("minus_labels").get<std::vector<int>>(), j.at("alpha").get<int>(),
                            j.at("beta").get<int>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bigraph JSON: ") + e.what());
  }
}

std::string graph_to_dot(const BipartiteDiagram& d) {
  const int l = d.valence();
  std::ostringstream out;
  out << "graph bigraph {\n";
  for (int x = 0; x < d.vertices(); ++x) {
    out << "  p" << x + 1 << " [shape=circle, label=\"+";
    if (d.plus_label(x)) out << d.plus_label(x);
    out << "\"];\n";
  }
  for (int y = 0; y < d.vertices(); ++y) {
    out << "  m" << y + 1 << " [shape=box, label=\"-";
    if (d.minus_label(y)) out << d.minus_label(y);
    out << "\"];\n";
  }
  for (int x = 0; x < d.vertices(); ++x) {
    for (int s = 0; s < l; ++s) {
      int e = d.partner(x, s);
      int y = e / l, t = e % l;
      out << "  p" << x + 1 << " -- m" << y + 1 << " [taillabel=\"";
      if (d.plus_color(x, s)) out << d.plus_color(x, s);
      out << "\", headlabel=\"";
      if (d.minus_color(y, t)) out << d.minus_color(y, t);
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace traincat
