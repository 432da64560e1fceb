#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "polyame/errors.hpp"

namespace polyame {

using Index = Eigen::Index;

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for a prime p < 2^16. Elements are plain integers in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  /// Throws NotPrime when p is not prime, ShapeError when p does not fit in 16 bits.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Elem reduce(std::int64_t x) const {
    const auto p = static_cast<std::int64_t>(p_);
    const auto r = x % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem pow(Elem base, std::uint64_t exponent) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense matrix over GF(p), row-major.
class GfMatrix {
 public:
  using Elem = PrimeField::Elem;
  using Storage = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  GfMatrix(PrimeField field, Index rows, Index cols);
  /// Entries are reduced mod p.
  GfMatrix(PrimeField field, const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& entries);
  GfMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static GfMatrix identity(PrimeField field, Index size);

  const PrimeField& field() const { return field_; }
  std::uint32_t prime() const { return field_.prime(); }
  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }
  Elem operator()(Index r, Index c) const { return entries_(r, c); }
  void set(Index r, Index c, std::int64_t value) { entries_(r, c) = field_.reduce(value); }
  const Storage& entries() const { return entries_; }
  std::vector<Elem> row(Index r) const;

  friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
    return a.field_ == b.field_ && a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  friend GfMatrix row_reduce(const GfMatrix&, std::vector<Index>*);
  friend GfMatrix submatrix_columns(const GfMatrix&, std::span<const Index>);
  friend GfMatrix submatrix_rows(const GfMatrix&, std::span<const Index>);

  PrimeField field_;
  Storage entries_;
};

/// Reduced row-echelon form with first-nonzero pivoting. Zero rows are kept at the bottom.
/// If pivots is non-null it receives the pivot column of each nonzero row.
GfMatrix row_reduce(const GfMatrix& m, std::vector<Index>* pivots = nullptr);

/// Dimension of the row space.
Index rank(const GfMatrix& m);

/// Basis of {x : m x^T = 0}, one vector per row; cols() - rank(m) rows.
GfMatrix nullspace(const GfMatrix& m);

/// Copy of the given columns, in the order given. Throws IndexError on out-of-range indices.
GfMatrix submatrix_columns(const GfMatrix& m, std::span<const Index> cols);
GfMatrix submatrix_rows(const GfMatrix& m, std::span<const Index> rows);

/// Nonzero rows of row_reduce(m): a basis of the row space.
GfMatrix row_basis(const GfMatrix& m);

/// Row vector times matrix: x G.
std::vector<GfMatrix::Elem> row_times(std::span<const GfMatrix::Elem> x, const GfMatrix& g);

GfMatrix multiply(const GfMatrix& a, const GfMatrix& b);
GfMatrix transpose(const GfMatrix& m);

}  // namespace polyame
