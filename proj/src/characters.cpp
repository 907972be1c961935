#include "traincat/characters.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace traincat {

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("not a number: " + item);
    out.push_back(v);
  }
  return out;
}

std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

ThomaParams::ThomaParams(std::vector<double> alphas, std::vector<double> betas)
    : alphas_(std::move(alphas)), betas_(std::move(betas)) {
  double total = 0;
  for (const auto* list : {&alphas_, &betas_}) {
    for (std::size_t i = 0; i < list->size(); ++i) {
      double v = (*list)[i];
      if (!std::isfinite(v) || v < 0) throw std::invalid_argument("Thoma parameters must be non-negative");
      if (i > 0 && v > (*list)[i - 1]) throw std::invalid_argument("Thoma parameters must be non-increasing");
      total += v;
    }
  }
  if (total > 1.0 + 1e-12) throw std::invalid_argument("Thoma parameters sum to more than 1");
}

ThomaParams ThomaParams::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string tok;
  std::vector<double> a, b;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected alpha=... or beta=...: " + tok);
    std::string key = tok.substr(0, eq);
    if (key == "alpha") {
      a = parse_list(tok.substr(eq + 1));
    } else if (key == "beta") {
      b = parse_list(tok.substr(eq + 1));
    } else {
      throw std::invalid_argument("unknown Thoma parameter: " + key);
    }
  }
  return ThomaParams(std::move(a), std::move(b));
}

double ThomaParams::gamma() const {
  double g = 1.0;
  for (double v : alphas_) g -= v;
  for (double v : betas_) g -= v;
  return std::max(0.0, g);
}

double ThomaParams::power_sum(int k) const {
  double a = 0, b = 0;
  for (double v : alphas_) a += std::pow(v, k);
  for (double v : betas_) b += std::pow(v, k);
  return a + ((k % 2 == 1) ? b : -b);
}

double thoma_char(const ThomaParams& params, const ColoredPerm& g) {
  double v = 1.0;
  for (const auto& [k, r] : cycle_type(g)) {
    double p = params.power_sum(k);
    for (int i = 0; i < r; ++i) v *= p;
  }
  return v;
}

PsdReport thoma_psd_check(const ThomaParams& params, const std::vector<ColoredPerm>& perms) {
  const int n = static_cast<int>(perms.size());
  PsdReport rep;
  rep.gram.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rep.gram(i, j) = thoma_char(params, compose(perms[i], inverse(perms[j])));
  if (n == 0) return rep;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rep.gram, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = solver.eigenvalues().minCoeff();
  return rep;
}

SMatrix::SMatrix(int m) : s_(Eigen::MatrixXi::Zero(m, m)) {
  if (m < 1) throw std::invalid_argument("SMatrix order must be positive");
}

SMatrix::SMatrix(Eigen::MatrixXi counts) : s_(std::move(counts)) {
  if (s_.rows() != s_.cols() || s_.rows() < 1) throw std::invalid_argument("SMatrix must be square");
  for (int i = 0; i < s_.rows(); ++i) {
    if (s_(i, i) != 0) throw std::invalid_argument("SMatrix diagonal must be zero");
    if (s_.row(i).minCoeff() < 0) throw std::invalid_argument("SMatrix entries must be non-negative");
    if (s_.row(i).sum() != s_.col(i).sum()) throw std::invalid_argument("SMatrix is not balanced");
  }
}

SMatrix SMatrix::cycle(int m, const std::vector<int>& colors) {
  Eigen::MatrixXi s = Eigen::MatrixXi::Zero(m, m);
  for (std::size_t i = 0; i < colors.size(); ++i) {
    int a = colors[i], b = colors[(i + 1) % colors.size()];
    if (a < 1 || a > m || a == b) throw std::invalid_argument("bad cycle colors");
    ++s(a - 1, b - 1);
  }
  return SMatrix(std::move(s));
}

SMatrix SMatrix::parse(const std::string& text) {
  // A '.' that is not part of a number marks the diagonal.
  std::string t = text;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != '.') continue;
    bool digit_before = i > 0 && std::isdigit(static_cast<unsigned char>(t[i - 1]));
    bool digit_after = i + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[i + 1]));
    if (!digit_before && !digit_after) t[i] = '0';
  }
  try {
    auto j = nlohmann::json::parse(t);
    const int m = static_cast<int>(j.size());
    Eigen::MatrixXi s(m, m);
    for (int r = 0; r < m; ++r) {
      if (static_cast<int>(j.at(r).size()) != m) throw std::invalid_argument("SMatrix must be square");
      for (int c = 0; c < m; ++c) s(r, c) = r == c ? 0 : j.at(r).at(c).get<int>();
    }
    return SMatrix(std::move(s));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("SMatrix JSON: ") + e.what());
  }
}

SMatrix operator+(const SMatrix& a, const SMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("SMatrix size mismatch");
  return SMatrix(Eigen::MatrixXi(a.s_ + b.s_));
}

SMatrix s_matrix(const ColoredPerm& g) {
  Eigen::MatrixXi s = Eigen::MatrixXi::Zero(g.color_count(), g.color_count());
  for (const auto& [x, y] : g.entries()) {
    if (x.color != y.color) ++s(x.color - 1, y.color - 1);
  }
  return SMatrix(std::move(s));
}

SMatrix coset_invariant_young(const ColoredPerm& g, const CosetLevel& levels) {
  if (!levels.is_zero()) throw std::invalid_argument("the s-matrix is a coset invariant only at level zero");
  return s_matrix(g);
}

std::vector<std::vector<int>> cycle_decompose(const SMatrix& s) {
  Eigen::MatrixXi rest = s.matrix();
  const int m = s.size();
  for (int i = 0; i < m; ++i)
    if (rest.row(i).sum() != rest.col(i).sum()) throw std::invalid_argument("SMatrix is not balanced");
  std::vector<std::vector<int>> out;
  auto next_of = [&](int v) {
    for (int w = 0; w < m; ++w)
      if (rest(v, w) > 0) return w;
    return -1;
  };
  while (!rest.isZero()) {
    int start = 0;
    while (next_of(start) < 0) ++start;
    std::vector<int> path{start};
    while (true) {
      int w = next_of(path.back());
      auto hit = std::find(path.begin(), path.end(), w);
      if (hit != path.end()) {
        std::vector<int> cyc(hit, path.end());
        for (std::size_t i = 0; i < cyc.size(); ++i) --rest(cyc[i], cyc[(i + 1) % cyc.size()]);
        for (int& c : cyc) ++c;
        out.push_back(std::move(cyc));
        break;
      }
      path.push_back(w);
    }
  }
  return out;
}

GramSpec::GramSpec(Eigen::MatrixXcd a, double tol) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() < 1) throw std::invalid_argument("Gram matrix must be square");
  if ((a_ - a_.adjoint()).cwiseAbs().maxCoeff() > tol) throw std::invalid_argument("Gram matrix must be Hermitian");
  for (int i = 0; i < a_.rows(); ++i) {
    if (std::abs(a_(i, i) - 1.0) > tol) throw std::invalid_argument("Gram matrix must have unit diagonal");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) throw std::invalid_argument("Gram matrix is not positive semidefinite");
}

GramSpec GramSpec::ones(int m) { return GramSpec(Eigen::MatrixXcd::Ones(m, m)); }

GramSpec GramSpec::of_vectors(const std::vector<Eigen::VectorXcd>& xis) {
  const int m = static_cast<int>(xis.size());
  Eigen::MatrixXcd a(m, m);
  for (int i = 0; i < m; ++i) {
    if (xis[i].size() != xis[0].size()) throw std::invalid_argument("vectors must share a dimension");
    if (std::abs(xis[i].norm() - 1.0) > 1e-9) throw std::invalid_argument("vectors must have unit norm");
    for (int j = 0; j < m; ++j) a(i, j) = xis[j].dot(xis[i]);  // dot conjugates its left operand
  }
  return GramSpec(std::move(a));
}

GramSpec GramSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind("ones(", 0) == 0 && t.back() == ')') {
    int m = 0;
    try {
      m = std::stoi(t.substr(5, t.size() - 6));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad ones(m)");
    }
    if (m < 1) throw std::invalid_argument("bad ones(m)");
    return ones(m);
  }
  try {
    auto j = nlohmann::json::parse(t);
    const int m = static_cast<int>(j.size());
    Eigen::MatrixXcd a(m, m);
    for (int r = 0; r < m; ++r) {
      if (static_cast<int>(j.at(r).size()) != m) throw std::invalid_argument("Gram matrix must be square");
      for (int c = 0; c < m; ++c) {
        const auto& e = j.at(r).at(c);
        a(r, c) = e.is_array() ? std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>())
                               : std::complex<double>(e.get<double>(), 0.0);
      }
    }
    return GramSpec(std::move(a));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("Gram JSON: ") + e.what());
  }
}

std::complex<double> nessonov_char(const GramSpec& a, const SMatrix& s) {
  if (a.size() != s.size()) throw std::invalid_argument("Gram and s-matrix orders differ");
  std::complex<double> v = 1.0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = 1; j <= s.size(); ++j)
      if (i != j && s(i, j) > 0) v *= ipow(a.matrix()(i - 1, j - 1), s(i, j));
  return v;
}

std::complex<double> young_spherical(const std::vector<Eigen::VectorXcd>& xis, const ColoredPerm& g) {
  if (static_cast<int>(xis.size()) != g.color_count()) throw std::invalid_argument("need one vector per color");
  return nessonov_char(GramSpec::of_vectors(xis), s_matrix(g));
}

}  // namespace traincat
