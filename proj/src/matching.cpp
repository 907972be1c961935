#include "traincat/matching.hpp"

#include <algorithm>
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

}  // namespace

ColoredMatching::ColoredMatching(int colors, std::vector<std::vector<int>> match, std::vector<int> plus_labels,
                                 std::vector<int> minus_labels, int alpha, int beta)
    : colors_(colors),
      alpha_(alpha),
      beta_(beta),
      match_(std::move(match)),
      plus_label_(std::move(plus_labels)),
      minus_label_(std::move(minus_labels)) {
  if (colors < 1 || colors > 30) throw std::invalid_argument("color count out of range");
  if (static_cast<int>(match_.size()) != colors) throw std::invalid_argument("one matching per color required");
  const int n = cells();
  if (static_cast<int>(minus_label_.size()) != n) throw std::invalid_argument("plus and minus cell counts differ");
  inv_.assign(colors, std::vector<int>(n, -1));
  for (int c = 0; c < colors; ++c) {
    if (static_cast<int>(match_[c].size()) != n) throw std::invalid_argument("matching size mismatch");
    for (int x = 0; x < n; ++x) {
      int y = match_[c][x];
      if (y < 0 || y >= n || inv_[c][y] >= 0) throw std::invalid_argument("color matching is not a bijection");
      inv_[c][y] = x;
    }
  }
  check_labels(plus_label_, beta, "plus");
  check_labels(minus_label_, alpha, "minus");
}

ColoredMatching ColoredMatching::from_tuple(const std::vector<ColoredPerm>& perms, int alpha, int beta, int n) {
  if (perms.empty()) throw std::invalid_argument("empty tuple");
  if (alpha < 0 || beta < 0) throw std::invalid_argument("levels must be non-negative");
  if (n < std::max(alpha, beta)) throw std::invalid_argument("truncation smaller than a level");
  std::vector<std::vector<int>> match;
  for (const auto& p : perms) {
    if (p.color_count() != 1) throw std::invalid_argument("tuple components must be single-color");
    if (p.max_index() > n) throw std::invalid_argument("support exceeds truncation");
    std::vector<int> m(n);
    for (int k = 1; k <= n; ++k) m[k - 1] = p(k) - 1;
    match.push_back(std::move(m));
  }
  std::vector<int> pl(n, 0), ml(n, 0);
  for (int k = 1; k <= beta; ++k) pl[k - 1] = k;
  for (int k = 1; k <= alpha; ++k) ml[k - 1] = k;
  return ColoredMatching(static_cast<int>(perms.size()), std::move(match), std::move(pl), std::move(ml), alpha, beta)
      .drop_trivial();
}

int ColoredMatching::plus_with_label(int k) const {
  auto it = std::find(plus_label_.begin(), plus_label_.end(), k);
  if (k <= 0 || it == plus_label_.end()) throw std::out_of_range("no plus cell with that label");
  return static_cast<int>(it - plus_label_.begin());
}

int ColoredMatching::minus_with_label(int k) const {
  auto it = std::find(minus_label_.begin(), minus_label_.end(), k);
  if (k <= 0 || it == minus_label_.end()) throw std::out_of_range("no minus cell with that label");
  return static_cast<int>(it - minus_label_.begin());
}

ColoredMatching ColoredMatching::drop_trivial() const {
  const int n = cells();
  std::vector<bool> drop_plus(n, false), drop_minus(n, false);
  bool any = false;
  for (int x = 0; x < n; ++x) {
    if (plus_label_[x]) continue;
    int y = match_[0][x];
    if (minus_label_[y]) continue;
    bool trivial = true;
    for (int c = 1; c < colors_ && trivial; ++c) trivial = match_[c][x] == y;
    if (trivial) drop_plus[x] = drop_minus[y] = any = true;
  }
  if (!any) return *this;
  std::vector<int> plus_new(n, -1), minus_new(n, -1);
  int np = 0, nm = 0;
  for (int x = 0; x < n; ++x) {
    if (!drop_plus[x]) plus_new[x] = np++;
    if (!drop_minus[x]) minus_new[x] = nm++;
  }
  std::vector<std::vector<int>> match(colors_, std::vector<int>(np));
  std::vector<int> pl(np), ml(nm);
  for (int x = 0; x < n; ++x) {
    if (plus_new[x] >= 0) {
      pl[plus_new[x]] = plus_label_[x];
      for (int c = 0; c < colors_; ++c) match[c][plus_new[x]] = minus_new[match_[c][x]];
    }
    if (minus_new[x] >= 0) ml[minus_new[x]] = minus_label_[x];
  }
  return ColoredMatching(colors_, std::move(match), std::move(pl), std::move(ml), alpha_, beta_);
}

ColoredMatching ColoredMatching::involution() const {
  return ColoredMatching(colors_, inv_, minus_label_, plus_label_, beta_, alpha_);
}

ColoredMatching ColoredMatching::shuffled(std::mt19937_64& rng) const {
  const int n = cells();
  std::vector<int> sp(n), sm(n);
  std::iota(sp.begin(), sp.end(), 0);
  std::iota(sm.begin(), sm.end(), 0);
  std::shuffle(sp.begin(), sp.end(), rng);
  std::shuffle(sm.begin(), sm.end(), rng);
  std::vector<std::vector<int>> match(colors_, std::vector<int>(n));
  std::vector<int> pl(n), ml(n);
  for (int x = 0; x < n; ++x) {
    pl[sp[x]] = plus_label_[x];
    ml[sm[x]] = minus_label_[x];
    for (int c = 0; c < colors_; ++c) match[c][sp[x]] = sm[match_[c][x]];
  }
  return ColoredMatching(colors_, std::move(match), std::move(pl), std::move(ml), alpha_, beta_);
}

std::vector<ColoredMatching::Component> ColoredMatching::components(std::uint32_t color_mask) const {
  const int n = cells();
  std::vector<int> plus_comp(n, -1), minus_comp(n, -1);
  std::vector<Component> out;
  std::vector<std::pair<bool, int>> stack;
  for (int s = 0; s < n; ++s) {
    if (plus_comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    plus_comp[s] = id;
    stack.assign(1, {true, s});
    while (!stack.empty()) {
      auto [is_plus, v] = stack.back();
      stack.pop_back();
      (is_plus ? out[id].plus : out[id].minus).push_back(v);
      for (int c = 0; c < colors_; ++c) {
        if (!(color_mask >> c & 1u)) continue;
        if (is_plus) {
          int y = match_[c][v];
          if (minus_comp[y] < 0) {
            minus_comp[y] = id;
            stack.push_back({false, y});
          }
        } else {
          int x = inv_[c][v];
          if (plus_comp[x] < 0) {
            plus_comp[x] = id;
            stack.push_back({true, x});
          }
        }
      }
    }
  }
  // Minus cells not reached from any plus cell form their own components.
  for (int y = 0; y < n; ++y) {
    if (minus_comp[y] < 0) out.push_back({{}, {y}});
  }
  for (auto& comp : out) {
    std::sort(comp.plus.begin(), comp.plus.end());
    std::sort(comp.minus.begin(), comp.minus.end());
  }
  return out;
}

std::vector<std::vector<int>> ColoredMatching::corner_cycles(int c1, int c2) const {
  const int n = cells();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int x = s;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = inv_[c2][match_[c1][x]];
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> ColoredMatching::component_code(const std::vector<int>& plus_cells, int start,
                                                 std::vector<int>& plus_id, std::vector<int>& minus_id) const {
  // Breadth-first numbering from a plus cell, colors in fixed order.
  std::vector<int> plus_order{start}, minus_order;
  plus_id[start] = 0;
  std::size_t hp = 0, hm = 0;
  while (hp < plus_order.size() || hm < minus_order.size()) {
    if (hp < plus_order.size()) {
      int x = plus_order[hp++];
      for (int c = 0; c < colors_; ++c) {
        int y = match_[c][x];
        if (minus_id[y] < 0) {
          minus_id[y] = static_cast<int>(minus_order.size());
          minus_order.push_back(y);
        }
      }
    } else {
      int y = minus_order[hm++];
      for (int c = 0; c < colors_; ++c) {
        int x = inv_[c][y];
        if (plus_id[x] < 0) {
          plus_id[x] = static_cast<int>(plus_order.size());
          plus_order.push_back(x);
        }
      }
    }
  }
  std::vector<int> code;
  code.reserve(plus_order.size() * (colors_ + 2));
  code.push_back(static_cast<int>(plus_order.size()));
  for (int x : plus_order) {
    code.push_back(plus_label_[x]);
    for (int c = 0; c < colors_; ++c) code.push_back(minus_id[match_[c][x]]);
  }
  for (int y : minus_order) code.push_back(minus_label_[y]);
  for (int x : plus_cells) plus_id[x] = -1;
  for (int y : minus_order) minus_id[y] = -1;
  return code;
}

std::string ColoredMatching::canon(const std::string& tag) const {
  const int n = cells();
  std::vector<int> plus_id(n, -1), minus_id(n, -1);
  std::vector<std::string> parts;
  for (const auto& comp : components()) {
    // Labeled components have a distinguished start; otherwise try all plus cells.
    std::vector<int> starts;
    int best_label = 0;
    for (int x : comp.plus) {
      if (plus_label_[x] && (best_label == 0 || plus_label_[x] < best_label)) {
        best_label = plus_label_[x];
        starts.assign(1, x);
      }
    }
    if (starts.empty()) {
      for (int y : comp.minus) {
        if (minus_label_[y] && (best_label == 0 || minus_label_[y] < best_label)) {
          best_label = minus_label_[y];
          starts.assign(1, inv_[0][y]);
        }
      }
    }
    if (starts.empty()) starts = comp.plus;
    std::vector<int> best;
    for (int s : starts) {
      auto code = component_code(comp.plus, s, plus_id, minus_id);
      if (best.empty() || code < best) best = std::move(code);
    }
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
    os << ']';
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  out << tag << " k=" << colors_ << " a=" << alpha_ << " b=" << beta_ << ' ';
  for (const auto& p : parts) out << p;
  return out.str();
}

std::vector<ColoredPerm> ColoredMatching::to_tuple() const {
  const int n = cells();
  for (int x = 0; x < n; ++x) {
    if (!plus_label_[x] || !minus_label_[x]) throw std::invalid_argument("every cell must be labeled");
  }
  std::vector<ColoredPerm> out;
  for (int c = 0; c < colors_; ++c) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[plus_label_[x] - 1] = minus_label_[match_[c][x]];
    out.push_back(ColoredPerm::from_images(std::span<const int>(images)));
  }
  return out;
}

std::string ColoredMatching::to_json(const std::string& kind) const {
  using nlohmann::json;
  json match = json::array();
  for (const auto& m : match_) {
    json row = json::array();
    for (int y : m) row.push_back(y + 1);
    match.push_back(row);
  }
  json j = {{"kind", kind},           {"colors", colors_},         {"alpha", alpha_},
            {"beta", beta_},          {"cells", cells()},          {"matching", match},
            {"plus_labels", plus_label_}, {"minus_labels", minus_label_}};
  return j.dump(2);
}

ColoredMatching ColoredMatching::from_json(const std::string& text, const std::string& kind) {
  using nlohmann::json;
  try {
    json j = json::parse(text);
    if (j.at("kind").get<std::string>() != kind) throw std::invalid_argument("expected JSON of kind " + kind);
    std::vector<std::vector<int>> match = j.at("matching").get<std::vector<std::vector<int>>>();
    for (auto& row : match)
      for (int& y : row) --y;
    int colors = j.at("colors").get<int>();
    ColoredMatching m(colors, std::move(match), j.at("plus_labels").get<std::vector<int>>(),
                      j.at("minus_labels").get<std::vector<int>>(), j.at("alpha").get<int>(), j.at("beta").get<int>());
    if (m.cells() != j.at("cells").get<int>()) throw std::invalid_argument("cell count mismatch");
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(kind) + " JSON: " + e.what());
  }
}

std::string ColoredMatching::to_dot(const std::string& name) const {
  static const char* palette[] = {"red", "gold", "blue", "green", "purple", "orange", "cyan", "magenta"};
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int x = 0; x < cells(); ++x) {
    out << "  p" << x + 1 << " [shape=triangle, label=\"+" << x + 1;
    if (plus_label_[x]) out << " in" << plus_label_[x];
    out << "\"];\n";
  }
  for (int y = 0; y < cells(); ++y) {
    out << "  m" << y + 1 << " [shape=invtriangle, label=\"-" << y + 1;
    if (minus_label_[y]) out << " out" << minus_label_[y];
    out << "\"];\n";
  }
  for (int x = 0; x < cells(); ++x) {
    for (int c = 0; c < colors_; ++c) {
      out << "  p" << x + 1 << " -- m" << match_[c][x] + 1 << " [color=" << palette[c % 8] << ", label=\"" << c
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

ColoredMatching glue(const ColoredMatching& p, const ColoredMatching& q, bool keep_trivial) {
  if (p.beta() != q.alpha()) throw std::invalid_argument("inner levels do not match");
  if (p.colors() != q.colors()) throw std::invalid_argument("color counts differ");
  const int k = p.colors(), beta = p.beta();
  const int qn = q.cells(), pn = p.cells();
  const int n = qn + pn - beta;
  // Result plus cells: q's plus cells, then p's unlabeled plus cells.
  // Result minus cells: p's minus cells, then q's unlabeled minus cells.
  std::vector<int> p_plus_new(pn, -1), q_minus_new(qn, -1);
  int next = qn;
  for (int x = 0; x < pn; ++x)
    if (!p.plus_label(x)) p_plus_new[x] = next++;
  next = pn;
  for (int y = 0; y < qn; ++y)
    if (!q.minus_label(y)) q_minus_new[y] = next++;
  std::vector<int> entry(beta + 1);
  for (int l = 1; l <= beta; ++l) entry[l] = p.plus_with_label(l);

  std::vector<std::vector<int>> match(k, std::vector<int>(n));
  for (int c = 0; c < k; ++c) {
    for (int x = 0; x < qn; ++x) {
      int y = q.partner(c, x);
      int l = q.minus_label(y);
      match[c][x] = l ? p.partner(c, entry[l]) : q_minus_new[y];
    }
    for (int x = 0; x < pn; ++x)
      if (p_plus_new[x] >= 0) match[c][p_plus_new[x]] = p.partner(c, x);
  }
  std::vector<int> pl(n, 0), ml(n, 0);
  for (int x = 0; x < qn; ++x) pl[x] = q.plus_label(x);
  for (int y = 0; y < pn; ++y) ml[y] = p.minus_label(y);
  ColoredMatching r(k, std::move(match), std::move(pl), std::move(ml), p.alpha(), q.beta());
  return keep_trivial ? r : r.drop_trivial();
}

}  // namespace traincat
