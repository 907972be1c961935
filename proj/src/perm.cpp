#include "traincat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace traincat {

namespace {

bool entry_less(const ColoredPerm::Entry& a, const ColoredPerm::Entry& b) { return a.first < b.first; }

}  // namespace

ColoredPerm::ColoredPerm(int color_count) : m_(color_count) {
  if (color_count < 1) throw std::invalid_argument("color count must be positive");
}

ColoredPerm ColoredPerm::from_entries(int color_count, std::vector<Entry> entries) {
  ColoredPerm p(color_count);
  std::erase_if(entries, [](const Entry& e) { return e.first == e.second; });
  std::sort(entries.begin(), entries.end(), entry_less);
  std::vector<Point> images;
  images.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const Point& x : {entries[i].first, entries[i].second}) {
      if (x.index < 1 || x.color < 1 || x.color > color_count)
        throw std::invalid_argument("point out of range");
    }
    if (i > 0 && entries[i - 1].first == entries[i].first)
      throw std::invalid_argument("point mapped twice");
    images.push_back(entries[i].second);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw std::invalid_argument("mapping is not injective");
  // Domain and range of the moved part must coincide, otherwise some fixed point collides.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(images[i] == entries[i].first)) throw std::invalid_argument("mapping is not a bijection of its support");
  }
  p.map_ = std::move(entries);
  return p;
}

ColoredPerm ColoredPerm::from_images(std::span<const int> images) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < images.size(); ++i) {
    int k = static_cast<int>(i) + 1;
    if (images[i] != k) entries.push_back({Point{1, k}, Point{1, images[i]}});
  }
  return from_entries(1, std::move(entries));
}

ColoredPerm ColoredPerm::from_images(std::initializer_list<int> images) {
  std::vector<int> v(images);
  return from_images(std::span<const int>(v));
}

ColoredPerm ColoredPerm::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::vector<Entry> entries;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      entries.push_back({Point{1, c[i]}, Point{1, c[(i + 1) % c.size()]}});
    }
  }
  return from_entries(1, std::move(entries));
}

ColoredPerm ColoredPerm::transposition(int a, int b) { return from_cycles({{a, b}}); }

Point ColoredPerm::operator()(Point x) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), Entry{x, x}, entry_less);
  if (it != map_.end() && it->first == x) return it->second;
  return x;
}

int ColoredPerm::operator()(int i) const {
  if (m_ != 1) throw std::invalid_argument("integer evaluation needs a single-color permutation");
  return (*this)(Point{1, i}).index;
}

std::vector<Point> ColoredPerm::support() const {
  std::vector<Point> s;
  s.reserve(map_.size());
  for (const auto& e : map_) s.push_back(e.first);
  return s;
}

int ColoredPerm::max_index() const {
  int s = 0;
  for (const auto& e : map_) s = std::max(s, e.first.index);
  return s;
}

std::vector<int> ColoredPerm::images(int n) const {
  if (m_ != 1) throw std::invalid_argument("images() needs a single-color permutation");
  if (n < max_index()) throw std::invalid_argument("support exceeds requested range");
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 1);
  for (const auto& e : map_) out[e.first.index - 1] = e.second.index;
  return out;
}

ColoredPerm compose(const ColoredPerm& p, const ColoredPerm& q) {
  if (p.color_count() != q.color_count()) throw std::invalid_argument("color count mismatch");
  std::set<Point> pts;
  for (const auto& e : p.entries()) pts.insert(e.first);
  for (const auto& e : q.entries()) pts.insert(e.first);
  std::vector<ColoredPerm::Entry> out;
  for (const Point& x : pts) {
    Point y = p(q(x));
    if (!(y == x)) out.push_back({x, y});
  }
  return ColoredPerm::from_entries(p.color_count(), std::move(out));
}

ColoredPerm inverse(const ColoredPerm& p) {
  std::vector<ColoredPerm::Entry> out;
  out.reserve(p.support_size());
  for (const auto& e : p.entries()) out.push_back({e.second, e.first});
  return ColoredPerm::from_entries(p.color_count(), std::move(out));
}

std::vector<std::vector<Point>> cycles(const ColoredPerm& p) {
  std::vector<std::vector<Point>> out;
  std::set<Point> seen;
  for (const auto& e : p.entries()) {
    if (seen.count(e.first)) continue;
    std::vector<Point> c;
    Point x = e.first;
    do {
      c.push_back(x);
      seen.insert(x);
      x = p(x);
    } while (!(x == e.first));
    out.push_back(std::move(c));
  }
  return out;
}

std::map<int, int> cycle_type(const ColoredPerm& p) {
  std::map<int, int> t;
  for (const auto& c : cycles(p)) ++t[static_cast<int>(c.size())];
  return t;
}

ColoredPerm theta_j(int beta, int j, int color_count) {
  if (beta < 0 || j < 0) throw std::invalid_argument("theta_j needs beta, j >= 0");
  std::vector<ColoredPerm::Entry> out;
  for (int c = 1; c <= color_count; ++c) {
    for (int i = 1; i <= j; ++i) {
      out.push_back({Point{c, beta + i}, Point{c, beta + j + i}});
      out.push_back({Point{c, beta + j + i}, Point{c, beta + i}});
    }
  }
  return ColoredPerm::from_entries(color_count, std::move(out));
}

Matrix01::Matrix01(int n) : row_of_col_(n, 0) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

Matrix01 Matrix01::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  Matrix01 m(n);
  std::vector<bool> row_used(n, false);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix must be square");
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v != 0 && v != 1) throw std::invalid_argument("entries must be 0 or 1");
      if (v == 0) continue;
      if (row_used[i] || m.row_of_col_[j] != 0) throw std::invalid_argument("more than one unit in a row or column");
      row_used[i] = true;
      m.row_of_col_[j] = i + 1;
    }
  }
  return m;
}

Matrix01 Matrix01::identity(int n) { return theta(n, n); }

Matrix01 Matrix01::theta(int beta, int n) {
  Matrix01 m(n);
  for (int j = 1; j <= std::min(beta, n); ++j) m.row_of_col_[j - 1] = j;
  return m;
}

int Matrix01::entry(int i, int j) const { return row_of_col_.at(j - 1) == i ? 1 : 0; }

Matrix01 corner(const ColoredPerm& p, int n) {
  if (p.color_count() != 1) throw std::invalid_argument("corner needs a single-color permutation");
  Matrix01 m(n);
  for (int j = 1; j <= n; ++j) {
    int i = p(j);
    if (i <= n) m.row_of_col_[j - 1] = i;
  }
  return m;
}

Matrix01 matrix01_mul(const Matrix01& a, const Matrix01& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  std::vector<std::vector<int>> rows(a.size(), std::vector<int>(a.size(), 0));
  for (int k = 1; k <= b.size(); ++k) {
    int j = b.row_of(k);
    if (j == 0) continue;
    int i = a.row_of(j);
    if (i != 0) rows[i - 1][k - 1] = 1;
  }
  return Matrix01::from_rows(rows);
}

CosetLevel::CosetLevel(std::vector<int> per_color) : per_color_(std::move(per_color)) {
  if (per_color_.empty()) per_color_.push_back(0);
  check();
}

void CosetLevel::check() const {
  for (int v : per_color_)
    if (v < 0) throw std::invalid_argument("levels must be non-negative");
}

int CosetLevel::at(int color) const {
  if (per_color_.size() == 1) return per_color_[0];
  return per_color_.at(color - 1);
}

int CosetLevel::min() const { return *std::min_element(per_color_.begin(), per_color_.end()); }
int CosetLevel::max() const { return *std::max_element(per_color_.begin(), per_color_.end()); }

std::string CosetLevel::str() const {
  std::string s;
  for (std::size_t i = 0; i < per_color_.size(); ++i) {
    if (i) s += '/';
    s += std::to_string(per_color_[i]);
  }
  return s;
}

}  // namespace traincat
