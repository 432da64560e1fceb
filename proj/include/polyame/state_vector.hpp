#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "polyame/errors.hpp"

namespace polyame {

using Index = Eigen::Index;

/// d^n, throwing TooLarge past `limit`.
Index checked_power(Index base, int exponent, Index limit = Index{1} << 40);

/// Dense pure state of n sites with local dimension d.
///
/// Basis index i encodes (s_1, ..., s_n) in base d with s_1 the most significant digit,
/// so for qubits index 5 of a five-site state is |00101>.
template <typename Scalar>
class BasicStateVector {
 public:
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;

  BasicStateVector(int sites, int local_dim)
      : sites_(sites), local_dim_(local_dim), amps_(Amplitudes::Zero(checked_power(local_dim, sites))) {
    if (sites < 1 || local_dim < 2) throw ShapeError("state needs n >= 1 sites of dimension d >= 2");
  }

  BasicStateVector(int sites, int local_dim, Amplitudes amps)
      : sites_(sites), local_dim_(local_dim), amps_(std::move(amps)) {
    if (sites < 1 || local_dim < 2) throw ShapeError("state needs n >= 1 sites of dimension d >= 2");
    if (amps_.size() != checked_power(local_dim, sites))
      throw ShapeError("amplitude count " + std::to_string(amps_.size()) + " != d^n");
  }

  int sites() const { return sites_; }
  int local_dim() const { return local_dim_; }
  Index size() const { return amps_.size(); }

  const Amplitudes& amplitudes() const { return amps_; }
  Amplitudes& amplitudes() { return amps_; }
  const Scalar& operator[](Index i) const { return amps_[i]; }
  Scalar& operator[](Index i) { return amps_[i]; }

  Index index_of(std::span<const int> digits) const {
    if (static_cast<int>(digits.size()) != sites_) throw ShapeError("digit count != sites");
    Index idx = 0;
    for (int s : digits) {
      if (s < 0 || s >= local_dim_) throw IndexError("digit out of range");
      idx = idx * local_dim_ + s;
    }
    return idx;
  }

  std::vector<int> digits_of(Index idx) const {
    std::vector<int> digits(static_cast<std::size_t>(sites_));
    for (int j = sites_ - 1; j >= 0; --j) {
      digits[static_cast<std::size_t>(j)] = static_cast<int>(idx % local_dim_);
      idx /= local_dim_;
    }
    return digits;
  }

  /// Amplitude of the basis state spelled as digits, e.g. "00101".
  Scalar amplitude(std::string_view digits) const {
    std::vector<int> ds;
    for (char c : digits) ds.push_back(c - '0');
    return amps_[index_of(ds)];
  }

  RealScalar norm() const { return amps_.norm(); }

  /// Throws ZeroState for the zero vector.
  void normalize() {
    const RealScalar n = norm();
    if (n == RealScalar(0)) throw ZeroState("cannot normalize the zero vector");
    amps_ /= n;
  }

  Index support_size() const {
    Index count = 0;
    for (Index i = 0; i < amps_.size(); ++i)
      if (amps_[i] != Scalar(0)) ++count;
    return count;
  }

  friend bool operator==(const BasicStateVector& a, const BasicStateVector& b) {
    return a.sites_ == b.sites_ && a.local_dim_ == b.local_dim_ && a.amps_ == b.amps_;
  }

 private:
  int sites_;
  int local_dim_;
  Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;
using ComplexStateVector = BasicStateVector<std::complex<double>>;

template <typename Scalar>
bool is_normalized(const BasicStateVector<Scalar>& sv, double tolerance = 1e-9) {
  return std::abs(static_cast<double>(sv.amplitudes().squaredNorm()) - 1.0) <= tolerance;
}

/// Relabels sites: site j of the input becomes site perm[j] of the output.
template <typename Scalar>
BasicStateVector<Scalar> permute_sites(const BasicStateVector<Scalar>& sv, std::span<const int> perm) {
  const int n = sv.sites();
  if (static_cast<int>(perm.size()) != n) throw ShapeError("permutation length != sites");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw ShapeError("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  const Index d = sv.local_dim();
  // weight[j] = place value of input site j inside the output index
  std::vector<Index> weight(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Index w = 1;
    for (int k = perm[static_cast<std::size_t>(j)] + 1; k < n; ++k) w *= d;
    weight[static_cast<std::size_t>(j)] = w;
  }
  BasicStateVector<Scalar> out(n, sv.local_dim());
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  Index target = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    out[target] = sv[i];
    // odometer increment of the input digits, tracking the output index alongside
    for (int j = n - 1; j >= 0; --j) {
      auto& dj = digits[static_cast<std::size_t>(j)];
      if (++dj < d) {
        target += weight[static_cast<std::size_t>(j)];
        break;
      }
      dj = 0;
      target -= (d - 1) * weight[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

/// |s_1 ... s_n> -> |s_{n-k+1} ... s_n s_1 ... s_{n-k}>: every site moves k places to the right.
template <typename Scalar>
BasicStateVector<Scalar> cyclic_shift(const BasicStateVector<Scalar>& sv, int k) {
  const int n = sv.sites();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = ((j + k) % n + n) % n;
  return permute_sites(sv, perm);
}

}  // namespace polyame
