#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polyame/state_vector.hpp"

namespace polyame {

/// Split of n sites into a block A and its complement. Sites are 0-based internally.
class Bipartition {
 public:
  /// Sorts the block; throws ShapeError unless 1 <= |A| <= n-1 with distinct in-range sites.
  Bipartition(int sites, std::vector<int> block);
  static Bipartition from_one_based(int sites, const std::vector<int>& block);

  int sites() const { return sites_; }
  int size() const { return static_cast<int>(block_.size()); }
  const std::vector<int>& block() const { return block_; }
  std::vector<int> complement() const;
  std::vector<int> one_based() const;
  Bipartition flipped() const { return Bipartition(sites_, complement()); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

 private:
  int sites_;
  std::vector<int> block_;
};

struct EntropyOptions {
  /// Eigenvalues below this count as zero in -sum l log2 l.
  double eig_cutoff = 1e-12;
  /// Allowed | <psi|psi> - 1 | before NotNormalized.
  double norm_tolerance = 1e-9;
};

namespace detail {

/// Row/column position of every basis index when the state is reshaped as A x B, with
/// A-site digits forming the row (first A site most significant). Split into high and
/// low halves of the index so the tables stay small.
struct ReshapeMap {
  Index rows = 1;
  Index cols = 1;
  Index low_size = 1;
  std::vector<Index> row_hi, row_lo, col_hi, col_lo;
};

ReshapeMap make_reshape_map(int sites, int local_dim, const std::vector<int>& block);

}  // namespace detail

/// The state as a d^|A| x d^|B| matrix.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reshape(const BasicStateVector<Scalar>& sv, const Bipartition& bp) {
  if (bp.sites() != sv.sites()) throw ShapeError("bipartition site count != state site count");
  const auto map = detail::make_reshape_map(sv.sites(), sv.local_dim(), bp.block());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(map.rows, map.cols);
  const Index high_size = sv.size() / map.low_size;
  Index i = 0;
  for (Index hi = 0; hi < high_size; ++hi) {
    const Index r0 = map.row_hi[static_cast<std::size_t>(hi)];
    const Index c0 = map.col_hi[static_cast<std::size_t>(hi)];
    for (Index lo = 0; lo < map.low_size; ++lo, ++i)
      m(r0 + map.row_lo[static_cast<std::size_t>(lo)], c0 + map.col_lo[static_cast<std::size_t>(lo)]) = sv[i];
  }
  return m;
}

/// Eigenvalues of the reduced density matrix of the smaller side, ascending, unclipped.
/// Rows and columns of the reshaped state that vanish identically are dropped first; they
/// only contribute zero eigenvalues.
template <typename Scalar>
Eigen::VectorXd reduced_spectrum(const BasicStateVector<Scalar>& sv, const Bipartition& bp,
                                 const EntropyOptions& options = {}) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const double norm2 = static_cast<double>(sv.amplitudes().squaredNorm());
  if (std::abs(norm2 - 1.0) > options.norm_tolerance)
    throw NotNormalized("state norm^2 = " + std::to_string(norm2));

  Matrix m = reshape(sv, bp);
  std::vector<Index> live_rows;
  std::vector<Index> live_cols;
  for (Index r = 0; r < m.rows(); ++r)
    if (!m.row(r).isZero(0)) live_rows.push_back(r);
  for (Index c = 0; c < m.cols(); ++c)
    if (!m.col(c).isZero(0)) live_cols.push_back(c);
  if (static_cast<Index>(live_rows.size()) < m.rows() || static_cast<Index>(live_cols.size()) < m.cols()) {
    Matrix packed(static_cast<Index>(live_rows.size()), static_cast<Index>(live_cols.size()));
    for (std::size_t c = 0; c < live_cols.size(); ++c)
      for (std::size_t r = 0; r < live_rows.size(); ++r)
        packed(static_cast<Index>(r), static_cast<Index>(c)) = m(live_rows[r], live_cols[c]);
    m = std::move(packed);
  }

  const Index side = std::min(m.rows(), m.cols());
  Matrix gram = Matrix::Zero(side, side);
  if (m.rows() <= m.cols()) gram.template selfadjointView<Eigen::Lower>().rankUpdate(m);
  else gram.template selfadjointView<Eigen::Lower>().rankUpdate(m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().template cast<double>();
}

double entropy_from_spectrum(const Eigen::VectorXd& eigenvalues, double eig_cutoff = 1e-12);

/// Von Neumann entropy of block A in bits.
template <typename Scalar>
double entropy(const BasicStateVector<Scalar>& sv, const Bipartition& bp, const EntropyOptions& options = {}) {
  return entropy_from_spectrum(reduced_spectrum(sv, bp, options), options.eig_cutoff);
}

struct AmeVerdict {
  bool pass = false;
  double max_deviation = 0.0;
  std::vector<int> worst_block;  // 0-based
  double worst_entropy = 0.0;
  Index cuts = 0;
};

/// Checks every block of floor(n/2) sites for entropy floor(n/2) log2 d within `tolerance`.
template <typename Scalar>
AmeVerdict verify_ame(const BasicStateVector<Scalar>& sv, double tolerance = 1e-10, const EntropyOptions& options = {});

/// Lexicographic m-subsets of {0..n-1}; calls visit(block) for each.
template <typename Visit>
void for_each_subset(int n, int m, Visit&& visit) {
  if (m < 0 || m > n) return;
  std::vector<int> s(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) s[static_cast<std::size_t>(j)] = j;
  while (true) {
    visit(static_cast<const std::vector<int>&>(s));
    int j = m - 1;
    while (j >= 0 && s[static_cast<std::size_t>(j)] == n - m + j) --j;
    if (j < 0) return;
    ++s[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < m; ++t) s[static_cast<std::size_t>(t)] = s[static_cast<std::size_t>(t - 1)] + 1;
  }
}

template <typename Scalar>
AmeVerdict verify_ame(const BasicStateVector<Scalar>& sv, double tolerance, const EntropyOptions& options) {
  AmeVerdict verdict;
  const int m = sv.sites() / 2;
  const double target = m * std::log2(static_cast<double>(sv.local_dim()));
  verdict.worst_entropy = target;
  for_each_subset(sv.sites(), m, [&](const std::vector<int>& block) {
    const double s = entropy(sv, Bipartition(sv.sites(), block), options);
    const double dev = std::abs(s - target);
    ++verdict.cuts;
    if (verdict.worst_block.empty() || dev > verdict.max_deviation) {
      verdict.max_deviation = dev;
      verdict.worst_block = block;
      verdict.worst_entropy = s;
    }
  });
  verdict.pass = verdict.max_deviation < tolerance;
  return verdict;
}

}  // namespace polyame
