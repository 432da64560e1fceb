#include "polyame/entropy.hpp"

#include <set>

namespace polyame {

Bipartition::Bipartition(int sites, std::vector<int> block) : sites_(sites), block_(std::move(block)) {
  std::sort(block_.begin(), block_.end());
  if (block_.empty() || static_cast<int>(block_.size()) >= sites)
    throw ShapeError("block size must be in 1.." + std::to_string(sites - 1));
  if (std::adjacent_find(block_.begin(), block_.end()) != block_.end()) throw ShapeError("duplicate site in block");
  if (block_.front() < 0 || block_.back() >= sites) throw ShapeError("block site out of range");
}

Bipartition Bipartition::from_one_based(int sites, const std::vector<int>& block) {
  std::vector<int> zero_based;
  for (int s : block) zero_based.push_back(s - 1);
  return Bipartition(sites, std::move(zero_based));
}

std::vector<int> Bipartition::complement() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int j = 0; j < sites_; ++j) {
    if (k < block_.size() && block_[k] == j) ++k;
    else out.push_back(j);
  }
  return out;
}

std::vector<int> Bipartition::one_based() const {
  std::vector<int> out;
  for (int s : block_) out.push_back(s + 1);
  return out;
}

namespace detail {

ReshapeMap make_reshape_map(int sites, int local_dim, const std::vector<int>& block) {
  ReshapeMap map;
  const Index d = local_dim;
  std::vector<bool> in_a(static_cast<std::size_t>(sites), false);
  for (int s : block) in_a[static_cast<std::size_t>(s)] = true;

  // Place value of each site within its row (A) or column (B) index.
  std::vector<Index> place(static_cast<std::size_t>(sites));
  Index row_w = 1;
  Index col_w = 1;
  for (int j = sites - 1; j >= 0; --j) {
    if (in_a[static_cast<std::size_t>(j)]) {
      place[static_cast<std::size_t>(j)] = row_w;
      row_w *= d;
    } else {
      place[static_cast<std::size_t>(j)] = col_w;
      col_w *= d;
    }
  }
  map.rows = row_w;
  map.cols = col_w;

  const int low_sites = sites / 2;
  const int high_sites = sites - low_sites;
  auto fill = [&](int first, int count, std::vector<Index>& rows, std::vector<Index>& cols) {
    const Index size = checked_power(d, count);
    rows.assign(static_cast<std::size_t>(size), 0);
    cols.assign(static_cast<std::size_t>(size), 0);
    for (Index i = 0; i < size; ++i) {
      Index rest = i;
      for (int j = first + count - 1; j >= first; --j) {
        const Index digit = rest % d;
        rest /= d;
        (in_a[static_cast<std::size_t>(j)] ? rows : cols)[static_cast<std::size_t>(i)] += digit * place[static_cast<std::size_t>(j)];
      }
    }
    return size;
  };
  fill(0, high_sites, map.row_hi, map.col_hi);
  map.low_size = fill(high_sites, low_sites, map.row_lo, map.col_lo);
  return map;
}

}  // namespace detail

double entropy_from_spectrum(const Eigen::VectorXd& eigenvalues, double eig_cutoff) {
  double s = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double l = eigenvalues[i];
    if (l < eig_cutoff) continue;
    s -= l * std::log2(l);
  }
  return s == 0.0 ? 0.0 : s;
}

}  // namespace polyame
