#include "traincat/chips.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace traincat {

namespace {

bool is_odd(int x) { return x % 2 != 0; }

}  // namespace

Chip::Chip(int alpha, int beta, std::vector<ChipArc> arcs, std::vector<int> cycles)
    : alpha_(alpha), beta_(beta), arcs_(std::move(arcs)), cycles_(std::move(cycles)) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("chip levels must be non-negative");
  std::vector<ChipEndpoint> used;
  for (auto& arc : arcs_) {
    if (arc.b < arc.a) std::swap(arc.a, arc.b);
    if (arc.roods < 0) throw std::invalid_argument("negative rood count");
    for (const auto& e : {arc.a, arc.b}) {
      int bound = e.row == Row::Top ? beta : alpha;
      if (e.index < 1 || e.index > bound) throw std::invalid_argument("chip endpoint out of range");
      used.push_back(e);
    }
    bool same_side = arc.a.side == arc.b.side;
    if (arc.a.row != arc.b.row) {
      if (!same_side || is_odd(arc.roods)) throw std::invalid_argument("top-bottom arc must stay on one side with even roods");
    } else if (same_side || !is_odd(arc.roods)) {
      throw std::invalid_argument("same-row arc must cross sides with odd roods");
    }
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) throw std::invalid_argument("chip endpoint used twice");
  if (used.size() != static_cast<std::size_t>(2 * alpha + 2 * beta)) throw std::invalid_argument("chip endpoint left free");
  for (int r : cycles_) {
    if (r < 4 || is_odd(r)) throw std::invalid_argument("chip cycles need an even rood count of at least 4");
  }
  std::sort(arcs_.begin(), arcs_.end());
  std::sort(cycles_.begin(), cycles_.end());
}

Chip chip_from_pair(const ColoredPerm& g1, const ColoredPerm& g2, int alpha, int beta) {
  if (g1.color_count() != 1 || g2.color_count() != 1) throw std::invalid_argument("chips need single-color permutations");
  if (alpha < 0 || beta < 0) throw std::invalid_argument("levels must be non-negative");
  const int n = std::max({g1.max_index(), g2.max_index(), alpha, beta, 1});
  auto id = [n](Row row, Side side, int k) { return ((static_cast<int>(row) * 2 + static_cast<int>(side)) * n) + k - 1; };
  auto decode = [n](int v) {
    return ChipEndpoint{static_cast<Row>(v / (2 * n)), static_cast<Side>((v / n) % 2), v % n + 1};
  };
  const int total = 4 * n;
  std::vector<int> vertical(total), horizontal(total, -1);
  for (int k = 1; k <= n; ++k) {
    int a = id(Row::Top, Side::Left, k), b = id(Row::Bottom, Side::Left, g1(k));
    vertical[a] = b;
    vertical[b] = a;
    a = id(Row::Top, Side::Right, k);
    b = id(Row::Bottom, Side::Right, g2(k));
    vertical[a] = b;
    vertical[b] = a;
    for (Row row : {Row::Top, Row::Bottom}) {
      int level = row == Row::Top ? beta : alpha;
      if (k > level) {
        a = id(row, Side::Left, k);
        b = id(row, Side::Right, k);
        horizontal[a] = b;
        horizontal[b] = a;
      }
    }
  }

  std::vector<bool> seen(total, false);
  std::vector<ChipArc> arcs;
  for (int v = 0; v < total; ++v) {
    if (horizontal[v] >= 0 || seen[v]) continue;
    int cur = v, roods = 0;
    seen[cur] = true;
    while (true) {
      cur = vertical[cur];
      seen[cur] = true;
      if (horizontal[cur] < 0) break;
      cur = horizontal[cur];
      seen[cur] = true;
      ++roods;
    }
    arcs.push_back({decode(v), decode(cur), roods});
  }
  std::vector<int> cycles;
  for (int v = 0; v < total; ++v) {
    if (seen[v]) continue;
    int cur = v, roods = 0;
    do {
      seen[cur] = true;
      cur = vertical[cur];
      seen[cur] = true;
      cur = horizontal[cur];
      ++roods;
    } while (cur != v);
    if (roods != 2) cycles.push_back(roods);
  }
  return Chip(alpha, beta, std::move(arcs), std::move(cycles));
}

Chip chip_mul(const Chip& c1, const Chip& c2) {
  if (c1.beta() != c2.alpha()) throw std::invalid_argument("chip levels do not match");
  // Node = (chip 0/1, endpoint).
  using Node = std::pair<int, ChipEndpoint>;
  std::map<Node, std::pair<Node, int>> arc_of;
  for (int c = 0; c < 2; ++c) {
    for (const auto& arc : (c == 0 ? c1 : c2).arcs()) {
      arc_of[{c, arc.a}] = {{c, arc.b}, arc.roods};
      arc_of[{c, arc.b}] = {{c, arc.a}, arc.roods};
    }
  }
  auto internal = [](const Node& x) { return (x.first == 0) == (x.second.row == Row::Top); };
  auto glued = [](const Node& x) {
    return Node{1 - x.first, ChipEndpoint{x.first == 0 ? Row::Bottom : Row::Top, x.second.side, x.second.index}};
  };

  std::set<Node> seen;
  std::vector<ChipArc> arcs;
  for (const auto& [start, unused] : arc_of) {
    (void)unused;
    if (internal(start) || seen.count(start)) continue;
    Node cur = start;
    int roods = 0;
    while (true) {
      seen.insert(cur);
      auto [next, r] = arc_of.at(cur);
      roods += r;
      seen.insert(next);
      if (!internal(next)) {
        cur = next;
        break;
      }
      cur = glued(next);
    }
    arcs.push_back({start.second, cur.second, roods});
  }
  std::vector<int> cycles = c1.cycles();
  cycles.insert(cycles.end(), c2.cycles().begin(), c2.cycles().end());
  for (const auto& [start, unused] : arc_of) {
    (void)unused;
    if (seen.count(start)) continue;
    Node cur = start;
    int roods = 0;
    do {
      seen.insert(cur);
      auto [next, r] = arc_of.at(cur);
      roods += r;
      seen.insert(next);
      cur = glued(next);
    } while (cur != start);
    if (roods != 2) cycles.push_back(roods);
  }
  return Chip(c1.alpha(), c2.beta(), std::move(arcs), std::move(cycles));
}

Chip chip_involution(const Chip& c) {
  auto flip = [](ChipEndpoint e) {
    e.row = e.row == Row::Top ? Row::Bottom : Row::Top;
    return e;
  };
  std::vector<ChipArc> arcs;
  for (const auto& a : c.arcs()) arcs.push_back({flip(a.a), flip(a.b), a.roods});
  return Chip(c.beta(), c.alpha(), std::move(arcs), c.cycles());
}

Chip identity_chip(int level) { return chip_from_pair(ColoredPerm(), ColoredPerm(), level, level); }

std::string chip_canon(const Chip& c) {
  std::ostringstream out;
  out << "chip " << c.alpha() << ' ' << c.beta() << " |";
  auto put = [&](const ChipEndpoint& e) {
    out << (e.row == Row::Top ? 'T' : 'B') << (e.side == Side::Left ? 'L' : 'R') << e.index;
  };
  for (const auto& a : c.arcs()) {
    out << ' ';
    put(a.a);
    out << '-';
    put(a.b);
    out << ':' << a.roods;
  }
  out << " |";
  for (int r : c.cycles()) out << ' ' << r;
  return out.str();
}

double chip_thoma_eval(const Chip& c, const ThomaParams& params) {
  if (c.alpha() != 0 || c.beta() != 0) throw std::invalid_argument("Thoma evaluation needs a (0,0) chip");
  double v = 1.0;
  for (int r : c.cycles()) v *= params.power_sum(r / 2);
  return v;
}

std::string chip_to_json(const Chip& c) {
  using nlohmann::json;
  json arcs = json::array();
  auto ep = [](const ChipEndpoint& e) {
    return json::array({e.row == Row::Top ? "top" : "bottom", e.side == Side::Left ? "left" : "right", e.index});
  };
  for (const auto& a : c.arcs()) arcs.push_back({{"a", ep(a.a)}, {"b", ep(a.b)}, {"roods", a.roods}});
  json j = {{"alpha", c.alpha()}, {"beta", c.beta()}, {"arcs", arcs}, {"cycles", c.cycles()}};
  return j.dump(2);
}

Chip chip_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    json j = json::parse(text);
    auto ep = [](const json& e) {
      std::string row = e.at(0), side = e.at(1);
      if ((row != "top" && row != "bottom") || (side != "left" && side != "right"))
        throw std::invalid_argument("bad chip endpoint");
      return ChipEndpoint{row == "top" ? Row::Top : Row::Bottom, side == "left" ? Side::Left : Side::Right,
                          e.at(2).get<int>()};
    };
    std::vector<ChipArc> arcs;
    for (const auto& a : j.at("arcs")) arcs.push_back({ep(a.at("a")), ep(a.at("b")), a.at("roods").get<int>()});
    return Chip(j.at("alpha").get<int>(), j.at("beta").get<int>(), std::move(arcs),
                j.at("cycles").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("chip JSON: ") + e.what());
  }
}

}  // namespace traincat
