#include <cctype>
#include <sstream>

#include "json.hpp"
#include "traincat/perm.hpp"

namespace traincat {

namespace {

class CycleParser {
 public:
  explicit CycleParser(const std::string& text) : s_(text) {}

  ColoredPerm parse(int color_count) {
    std::vector<ColoredPerm::Entry> entries;
    int color = 1;
    int max_color = 1;
    skip_ws();
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (ch == 'c') {
        ++pos_;
        color = read_int();
        expect(':');
        max_color = std::max(max_color, color);
      } else if (ch == '(') {
        ++pos_;
        std::vector<Point> cyc;
        skip_sep();
        while (peek() != ')') {
          Point x{color, read_int()};
          if (peek() == '@') {
            ++pos_;
            x.color = read_int();
          }
          max_color = std::max(max_color, x.color);
          if (std::find(cyc.begin(), cyc.end(), x) != cyc.end()) fail("repeated point in cycle");
          cyc.push_back(x);
          skip_sep();
        }
        ++pos_;
        for (std::size_t i = 0; i < cyc.size(); ++i) entries.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
      } else {
        fail("unexpected character");
      }
      skip_ws();
    }
    if (color_count == 0) color_count = max_color;
    if (max_color > color_count) fail("color exceeds color count");
    return ColoredPerm::from_entries(color_count, std::move(entries));
  }

 private:
  char peek() {
    if (pos_ >= s_.size()) fail("unterminated cycle");
    return s_[pos_];
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void skip_sep() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',')) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int read_int() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cycle notation: " + what + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_cycle_string(const ColoredPerm& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::ostringstream out;
  int seg = 0;
  for (const auto& c : cs) {
    int color = c.front().color;
    if (p.color_count() > 1 && color != seg) {
      if (seg != 0) out << ' ';
      out << 'c' << color << ':';
      seg = color;
    }
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i].index;
      if (c[i].color != color) out << '@' << c[i].color;
    }
    out << ')';
  }
  return out.str();
}

ColoredPerm parse_cycles(const std::string& text, int color_count) { return CycleParser(text).parse(color_count); }

std::string to_json_string(const ColoredPerm& p) {
  nlohmann::json map = nlohmann::json::array();
  for (const auto& [x, y] : p.entries()) {
    map.push_back({{x.color, x.index}, {y.color, y.index}});
  }
  nlohmann::json j = {{"m", p.color_count()}, {"map", map}};
  return j.dump();
}

ColoredPerm perm_from_json_string(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    std::vector<ColoredPerm::Entry> entries;
    for (const auto& e : j.at("map")) {
      entries.push_back({Point{e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()},
                         Point{e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()}});
    }
    return ColoredPerm::from_entries(m, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("permutation JSON: ") + e.what());
  }
}

}  // namespace traincat
