#include <algorithm>
#include <cmath>
#include <map>

#include "traincat/coset_oracle.hpp"
#include "traincat/tensor_oracle.hpp"

namespace traincat {

namespace {

using cplx = std::complex<double>;

std::vector<std::vector<int>> occupations(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, total);
  return out;
}

double arrangements(const std::vector<int>& occ) {
  double r = 1;
  int n = 0;
  for (int k : occ) {
    for (int i = 1; i <= k; ++i) r = r * (n + i) / i;
    n += k;
  }
  return r;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TailSymmetricState TailSymmetricState::power(const CoeffTensor& xi, int n_blocks, int head) {
  xi.validate(1e-9);
  if (!xi.parities.empty()) throw std::invalid_argument("tail-symmetric states do not track parities");
  if (head < 0 || head > n_blocks) throw std::invalid_argument("head out of range");
  TailSymmetricState s;
  s.dims_ = xi.dims;
  s.block_dim_ = static_cast<int>(xi.size());
  s.n_ = n_blocks;
  s.head_ = head;
  s.build_tail(n_blocks - head);
  const std::size_t rows = ipow(static_cast<std::size_t>(s.block_dim_), head);
  if (rows * s.occs_.size() > kDenseBound) throw BoundExceeded("tail-symmetric state exceeds bound");
  s.coeff_.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(s.occs_.size()));
  std::vector<cplx> tail(s.occs_.size());
  for (std::size_t o = 0; o < s.occs_.size(); ++o) {
    cplx t = 1;
    for (int a = 0; a < s.block_dim_; ++a)
      for (int k = 0; k < s.occs_[o][a]; ++k) t *= xi.coeffs[a];
    tail[o] = t;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    cplx h = 1;
    std::size_t rest = i;
    for (int m = 0; m < head; ++m) {
      h *= xi.coeffs[rest % s.block_dim_];
      rest /= s.block_dim_;
    }
    for (std::size_t o = 0; o < s.occs_.size(); ++o)
      s.coeff_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(o)) = h * tail[o];
  }
  return s;
}

void TailSymmetricState::build_tail(int length) {
  occs_ = occupations(block_dim_, length);
  arrangements_.clear();
  for (const auto& o : occs_) arrangements_.push_back(arrangements(o));
}

int TailSymmetricState::index_of(const std::vector<int>& occ) const {
  auto it = std::lower_bound(occs_.begin(), occs_.end(), occ, std::greater<>());
  if (it == occs_.end() || *it != occ) throw std::logic_error("unknown occupation");
  return static_cast<int>(it - occs_.begin());
}

void TailSymmetricState::expand_to(int head) {
  if (head > n_) throw std::invalid_argument("head beyond the number of blocks");
  while (head_ < head) {
    const auto old_occs = occs_;
    const Eigen::MatrixXcd old = coeff_;
    build_tail(n_ - head_ - 1);
    const std::size_t rows = static_cast<std::size_t>(old.rows()) * block_dim_;
    if (rows * occs_.size() > kDenseBound) throw BoundExceeded("tail-symmetric state exceeds bound");
    coeff_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(occs_.size()));
    for (std::size_t o = 0; o < old_occs.size(); ++o) {
      auto occ = old_occs[o];
      for (int a = 0; a < block_dim_; ++a) {
        if (occ[a] == 0) continue;
        --occ[a];
        int col = index_of(occ);
        ++occ[a];
        for (Eigen::Index i = 0; i < old.rows(); ++i)
          coeff_(i * block_dim_ + a, col) += old(i, static_cast<Eigen::Index>(o));
      }
    }
    ++head_;
  }
}

void TailSymmetricState::apply(const std::vector<ColoredPerm>& g) {
  const int n = static_cast<int>(dims_.size());
  if (static_cast<int>(g.size()) != n) throw std::invalid_argument("one permutation per factor required");
  std::vector<int> local, sigma(n * head_);
  for (int m = 0; m < head_; ++m) local.insert(local.end(), dims_.begin(), dims_.end());
  for (int f = 0; f < n; ++f) {
    if (g[f].max_index() > head_) throw std::invalid_argument("support exceeds the head");
    for (int m = 1; m <= head_; ++m) sigma[(m - 1) * n + f] = (g[f](m) - 1) * n + f;
  }
  // Row i moves to row target[i].
  Eigen::VectorXcd idx(coeff_.rows());
  for (Eigen::Index i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
  Eigen::VectorXcd moved = permute_positions(idx, local, sigma);
  Eigen::MatrixXcd out(coeff_.rows(), coeff_.cols());
  for (Eigen::Index t = 0; t < moved.size(); ++t) out.row(t) = coeff_.row(static_cast<Eigen::Index>(std::lround(moved[t].real())));
  coeff_ = std::move(out);
}

void TailSymmetricState::project(int level) {
  if (level < 0 || level > head_) throw std::invalid_argument("projection level must lie within the head");
  const int cut = head_ - level;
  const std::size_t low = ipow(static_cast<std::size_t>(block_dim_), cut);
  const auto old_occs = occs_;
  const auto old_arr = arrangements_;
  const Eigen::MatrixXcd old = coeff_;
  build_tail(n_ - level);
  coeff_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(old.rows() / static_cast<Eigen::Index>(low)),
                                  static_cast<Eigen::Index>(occs_.size()));
  std::vector<int> content(block_dim_);
  for (Eigen::Index i = 0; i < old.rows(); ++i) {
    std::fill(content.begin(), content.end(), 0);
    std::size_t k = static_cast<std::size_t>(i) % low;
    for (int m = 0; m < cut; ++m) {
      ++content[k % block_dim_];
      k /= block_dim_;
    }
    const Eigen::Index j = i / static_cast<Eigen::Index>(low);
    for (std::size_t o = 0; o < old_occs.size(); ++o) {
      std::vector<int> occ = old_occs[o];
      for (int a = 0; a < block_dim_; ++a) occ[a] += content[a];
      int col = index_of(occ);
      coeff_(j, col) += old(i, static_cast<Eigen::Index>(o)) * (old_arr[o] / arrangements_[col]);
    }
  }
  head_ = level;
}

std::complex<double> TailSymmetricState::inner(const TailSymmetricState& other) const {
  if (other.head_ != head_ || other.n_ != n_ || other.dims_ != dims_) throw std::invalid_argument("state shapes differ");
  cplx s = 0;
  for (Eigen::Index o = 0; o < coeff_.cols(); ++o) s += arrangements_[o] * other.coeff_.col(o).dot(coeff_.col(o));
  return s;
}

TailSymmetricState TailSymmetricState::operator-(const TailSymmetricState& other) const {
  if (other.head_ != head_ || other.n_ != n_ || other.dims_ != dims_) throw std::invalid_argument("state shapes differ");
  TailSymmetricState r = *this;
  r.coeff_ -= other.coeff_;
  return r;
}

Eigen::VectorXcd TailSymmetricState::to_dense(std::uint64_t bound) const {
  const int tail = n_ - head_;
  const std::size_t tail_size = ipow(static_cast<std::size_t>(block_dim_), tail);
  const std::size_t total = static_cast<std::size_t>(coeff_.rows()) * tail_size;
  if (total > bound) throw BoundExceeded("dense vector exceeds bound");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
  for (std::size_t o = 0; o < occs_.size(); ++o) {
    std::vector<int> seq;
    for (int a = 0; a < block_dim_; ++a) seq.insert(seq.end(), occs_[o][a], a);
    do {
      std::size_t t = 0;
      for (int a : seq) t = t * block_dim_ + a;
      for (Eigen::Index i = 0; i < coeff_.rows(); ++i)
        v[i * static_cast<Eigen::Index>(tail_size) + static_cast<Eigen::Index>(t)] += coeff_(i, static_cast<Eigen::Index>(o));
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return v;
}

double multiplicativity_drift(const CoeffTensor& xi, const std::vector<ColoredPerm>& p,
                              const std::vector<ColoredPerm>& q, int alpha, int beta, int n_blocks) {
  const PairSpec spec = PairSpec::diagonal(std::max(2, xi.factors()));
  if (xi.factors() < 2) throw std::invalid_argument("drift needs at least two factors");
  const int j = default_j(spec, p, q, CosetLevel(alpha), CosetLevel(beta), CosetLevel(0));
  const GroupElement r = theta_product(spec, p, q, CosetLevel(beta), j);
  const int sp = max_support(p), sq = max_support(q), sr = max_support(r);
  if (std::max({sp, sq, sr, alpha, beta}) > n_blocks) throw std::invalid_argument("too few blocks for the product");

  TailSymmetricState a = TailSymmetricState::power(xi, n_blocks, std::max(sq, beta));
  a.apply(q);
  a.project(beta);
  a.expand_to(std::max({sp, alpha, beta}));
  a.apply(p);
  a.project(alpha);

  TailSymmetricState b = TailSymmetricState::power(xi, n_blocks, std::max(sr, alpha));
  b.apply(r);
  b.project(alpha);
  return (a - b).norm();
}

}  // namespace traincat
