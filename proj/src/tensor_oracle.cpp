#include "traincat/tensor_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace traincat {

namespace {

using cplx = std::complex<double>;

std::size_t product(const std::vector<int>& dims) {
  std::size_t p = 1;
  for (int d : dims) p *= static_cast<std::size_t>(d);
  return p;
}

void check_power_size(std::size_t block, int n_blocks, std::uint64_t bound) {
  long double total = std::pow(static_cast<long double>(block), n_blocks);
  if (total > static_cast<long double>(bound)) throw BoundExceeded("dense tensor power exceeds bound");
}

// Positions (m, f) -> (g_f(m), f) for a tuple acting block-wise.
std::vector<int> block_sigma(const std::vector<ColoredPerm>& g, int n_blocks) {
  const int n = static_cast<int>(g.size());
  std::vector<int> sigma(n * n_blocks);
  for (int f = 0; f < n; ++f) {
    if (g[f].color_count() != 1) throw std::invalid_argument("tuple components must be single-color");
    if (g[f].max_index() > n_blocks) throw std::invalid_argument("support exceeds the number of blocks");
    for (int m = 1; m <= n_blocks; ++m) sigma[(m - 1) * n + f] = (g[f](m) - 1) * n + f;
  }
  return sigma;
}

std::vector<int> repeat_dims(const std::vector<int>& dims, int times) {
  std::vector<int> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), dims.begin(), dims.end());
  return out;
}

}  // namespace

void CoeffTensor::validate(double tol) const {
  if (dims.empty()) throw std::invalid_argument("coefficient tensor needs at least one factor");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("factor dimensions must be positive");
  if (coeffs.size() != product(dims)) throw std::invalid_argument("coefficient count does not match dims");
  double norm2 = 0;
  for (const auto& c : coeffs) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > tol) throw std::invalid_argument("coefficient tensor must have unit norm");
  if (parities.empty()) return;
  if (parities.size() != dims.size()) throw std::invalid_argument("one parity list per factor required");
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (static_cast<int>(parities[f].size()) != dims[f]) throw std::invalid_argument("parity list size mismatch");
    for (int p : parities[f])
      if (p != 0 && p != 1) throw std::invalid_argument("parities must be 0 or 1");
  }
  std::vector<int> idx(dims.size(), 0);
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    int total = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) total += parities[f][idx[f]];
    if (total % 2 && std::abs(coeffs[t]) > tol) throw std::invalid_argument("coefficient on an odd basis tensor");
    for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
      if (++idx[f] < dims[f]) break;
      idx[f] = 0;
    }
  }
}

CoeffTensor CoeffTensor::random(std::mt19937_64& rng, std::vector<int> dims) {
  CoeffTensor t;
  t.dims = std::move(dims);
  std::normal_distribution<double> normal;
  t.coeffs.resize(product(t.dims));
  double norm2 = 0;
  for (auto& c : t.coeffs) {
    c = cplx(normal(rng), normal(rng));
    norm2 += std::norm(c);
  }
  for (auto& c : t.coeffs) c /= std::sqrt(norm2);
  return t;
}

Eigen::VectorXcd tensor_power(const CoeffTensor& xi, int n_blocks, std::uint64_t bound) {
  xi.validate(1e-9);
  check_power_size(xi.size(), n_blocks, bound);
  Eigen::VectorXcd block(static_cast<Eigen::Index>(xi.size()));
  for (std::size_t i = 0; i < xi.size(); ++i) block[static_cast<Eigen::Index>(i)] = xi.coeffs[i];
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (int m = 0; m < n_blocks; ++m) {
    Eigen::VectorXcd next(v.size() * block.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * block.size(), block.size()) = v[i] * block;
    v = std::move(next);
  }
  return v;
}

Eigen::VectorXcd permute_positions(const Eigen::VectorXcd& v, const std::vector<int>& local_dims,
                                   const std::vector<int>& sigma, const std::vector<std::vector<int>>* parities) {
  const int m = static_cast<int>(local_dims.size());
  if (static_cast<int>(sigma.size()) != m) throw std::invalid_argument("sigma size mismatch");
  for (int i = 0; i < m; ++i)
    if (local_dims[sigma[i]] != local_dims[i]) throw std::invalid_argument("sigma must preserve local dimensions");
  std::vector<std::size_t> stride(m, 1);
  for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * static_cast<std::size_t>(local_dims[i + 1]);
  if (static_cast<std::size_t>(v.size()) != (m ? stride[0] * static_cast<std::size_t>(local_dims[0]) : 1))
    throw std::invalid_argument("vector size does not match local dims");
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(v.size());
  std::vector<int> digit(m, 0);
  std::vector<int> odd;
  std::size_t target = 0;
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    double sign = 1.0;
    if (parities) {
      odd.clear();
      for (int i = 0; i < m; ++i)
        if ((*parities)[i][digit[i]]) odd.push_back(sigma[i]);
      int inv = 0;
      for (std::size_t a = 0; a < odd.size(); ++a)
        for (std::size_t b = a + 1; b < odd.size(); ++b) inv += odd[a] > odd[b];
      if (inv % 2) sign = -1.0;
    }
    w[static_cast<Eigen::Index>(target)] += sign * v[idx];
    for (int i = m - 1; i >= 0; --i) {
      if (++digit[i] < local_dims[i]) {
        target += stride[sigma[i]];
        break;
      }
      target -= stride[sigma[i]] * static_cast<std::size_t>(local_dims[i] - 1);
      digit[i] = 0;
    }
  }
  return w;
}

std::complex<double> rep_matrix_element(const CoeffTensor& xi, int n_blocks, const std::vector<ColoredPerm>& g,
                                        std::uint64_t bound) {
  if (static_cast<int>(g.size()) != xi.factors()) throw std::invalid_argument("one permutation per factor required");
  Eigen::VectorXcd v = tensor_power(xi, n_blocks, bound);
  Eigen::VectorXcd w = permute_positions(v, repeat_dims(xi.dims, n_blocks), block_sigma(g, n_blocks));
  return v.dot(w);
}

std::complex<double> super_rep_matrix_element(const CoeffTensor& xi, int n_blocks, const std::vector<ColoredPerm>& g,
                                              std::uint64_t bound) {
  if (xi.parities.empty()) return rep_matrix_element(xi, n_blocks, g, bound);
  if (static_cast<int>(g.size()) != xi.factors()) throw std::invalid_argument("one permutation per factor required");
  Eigen::VectorXcd v = tensor_power(xi, n_blocks, bound);
  std::vector<std::vector<int>> par;
  for (int m = 0; m < n_blocks; ++m) par.insert(par.end(), xi.parities.begin(), xi.parities.end());
  Eigen::VectorXcd w = permute_positions(v, repeat_dims(xi.dims, n_blocks), block_sigma(g, n_blocks), &par);
  return v.dot(w);
}

int koszul_sign(const ColoredPerm& g, const std::vector<int>& parities) {
  if (g.color_count() != 1) throw std::invalid_argument("positions are single-color");
  const int m = static_cast<int>(parities.size());
  if (g.max_index() > m) throw std::invalid_argument("permutation moves positions beyond the parity list");
  std::vector<int> odd;
  for (int i = 1; i <= m; ++i)
    if (parities[i - 1]) odd.push_back(g(i));
  int inv = 0;
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = a + 1; b < odd.size(); ++b) inv += odd[a] > odd[b];
  return inv % 2 ? -1 : 1;
}

CoeffTensor thoma_tensor(const ThomaParams& params) {
  if (params.gamma() > 1e-12) throw std::invalid_argument("the tensor model needs gamma = 0");
  const int a = static_cast<int>(params.alphas().size()), b = static_cast<int>(params.betas().size());
  const int d = a + b;
  CoeffTensor t;
  t.dims = {d, d};
  t.coeffs.assign(static_cast<std::size_t>(d * d), 0.0);
  for (int j = 0; j < a; ++j) t.coeffs[j * d + j] = std::sqrt(params.alphas()[j]);
  for (int j = 0; j < b; ++j) t.coeffs[(a + j) * d + a + j] = std::sqrt(params.betas()[j]);
  std::vector<int> par(d, 0);
  for (int j = a; j < d; ++j) par[j] = 1;
  if (b > 0) t.parities = {par, par};
  return t;
}

std::complex<double> young_tensor_value(const std::vector<Eigen::VectorXcd>& xis, const ColoredPerm& g, int n_blocks,
                                        std::uint64_t bound) {
  const int m = g.color_count();
  if (static_cast<int>(xis.size()) != m) throw std::invalid_argument("need one vector per color");
  if (g.max_index() > n_blocks) throw std::invalid_argument("support exceeds the number of blocks");
  CoeffTensor block;
  for (const auto& x : xis) {
    if (x.size() != xis[0].size()) throw std::invalid_argument("vectors must share a dimension");
    block.dims.push_back(static_cast<int>(x.size()));
  }
  // The product of the m vectors is one block.
  block.coeffs.assign(1, 1.0);
  for (const auto& x : xis) {
    std::vector<cplx> next;
    for (const auto& c : block.coeffs)
      for (Eigen::Index i = 0; i < x.size(); ++i) next.push_back(c * x[i]);
    block.coeffs = std::move(next);
  }
  Eigen::VectorXcd v = tensor_power(block, n_blocks, bound);
  std::vector<int> sigma(m * n_blocks);
  for (int k = 1; k <= n_blocks; ++k) {
    for (int c = 1; c <= m; ++c) {
      Point y = g(Point{c, k});
      sigma[(k - 1) * m + c - 1] = (y.index - 1) * m + y.color - 1;
    }
  }
  return v.dot(permute_positions(v, repeat_dims(block.dims, n_blocks), sigma));
}

Eigen::VectorXcd projector_average(const CoeffTensor& xi, int n_blocks, int beta, const Eigen::VectorXcd& v,
                                   const ProjectorOptions& opts) {
  if (beta < 0 || beta > n_blocks) throw std::invalid_argument("level out of range");
  const int n = xi.factors(), free = n_blocks - beta;
  const auto dims = repeat_dims(xi.dims, n_blocks);
  const auto* par = xi.parities.empty() ? nullptr : &xi.parities;
  std::vector<std::vector<int>> par_all;
  if (par)
    for (int m = 0; m < n_blocks; ++m) par_all.insert(par_all.end(), par->begin(), par->end());
  auto act = [&](const std::vector<int>& h) {
    // h permutes the free blocks 0..free-1 (block beta+1+i goes to beta+1+h[i]).
    std::vector<int> sigma(n * n_blocks);
    for (int m = 0; m < n_blocks; ++m) {
      int to = m < beta ? m : beta + h[m - beta];
      for (int f = 0; f < n; ++f) sigma[m * n + f] = to * n + f;
    }
    return permute_positions(v, dims, sigma, par ? &par_all : nullptr);
  };

  std::uint64_t fact = 1;
  bool exact = true;
  for (int i = 2; i <= free; ++i) {
    fact *= static_cast<std::uint64_t>(i);
    if (fact > opts.bound) {
      exact = false;
      break;
    }
  }
  std::vector<int> h(free);
  std::iota(h.begin(), h.end(), 0);
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(v.size());
  if (exact) {
    std::uint64_t count = 0;
    do {
      sum += act(h);
      ++count;
    } while (std::next_permutation(h.begin(), h.end()));
    return sum / static_cast<double>(count);
  }
  if (!opts.monte_carlo) throw BoundExceeded("(N-beta)! exceeds the projector bound");
  std::mt19937_64 rng(opts.seed);
  for (int s = 0; s < opts.samples; ++s) {
    std::shuffle(h.begin(), h.end(), rng);
    sum += act(h);
  }
  return sum / static_cast<double>(opts.samples);
}

}  // namespace traincat
