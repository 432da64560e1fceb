#include "polyame/gf.hpp"

#include <string>
#include <utility>

namespace polyame {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p >= (1u << 16)) throw ShapeError("modulus " + std::to_string(p) + " does not fit in 16 bits");
}

PrimeField::Elem PrimeField::pow(Elem base, std::uint64_t exponent) const {
  Elem result = 1 % p_;
  base %= p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

GfMatrix::GfMatrix(PrimeField field, Index rows, Index cols)
    : field_(field), entries_(Storage::Zero(rows, cols)) {}

GfMatrix::GfMatrix(PrimeField field, const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& entries)
    : field_(field), entries_(entries.rows(), entries.cols()) {
  for (Index r = 0; r < entries.rows(); ++r)
    for (Index c = 0; c < entries.cols(); ++c) entries_(r, c) = field_.reduce(entries(r, c));
}

GfMatrix::GfMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field) {
  const auto nrows = static_cast<Index>(rows.size());
  const auto ncols = nrows == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  entries_.resize(nrows, ncols);
  Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != ncols) throw ShapeError("ragged matrix literal");
    Index c = 0;
    for (auto v : row) entries_(r, c++) = field_.reduce(v);
    ++r;
  }
}

GfMatrix GfMatrix::identity(PrimeField field, Index size) {
  GfMatrix m(field, size, size);
  for (Index i = 0; i < size; ++i) m.entries_(i, i) = 1 % field.prime();
  return m;
}

std::vector<GfMatrix::Elem> GfMatrix::row(Index r) const {
  std::vector<Elem> out(static_cast<std::size_t>(cols()));
  for (Index c = 0; c < cols(); ++c) out[static_cast<std::size_t>(c)] = entries_(r, c);
  return out;
}

GfMatrix row_reduce(const GfMatrix& m, std::vector<Index>* pivots) {
  GfMatrix out = m;
  auto& a = out.entries_;
  const auto& f = out.field_;
  if (pivots) pivots->clear();
  Index lead = 0;
  for (Index c = 0; c < a.cols() && lead < a.rows(); ++c) {
    Index pivot = lead;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead) a.row(pivot).swap(a.row(lead));
    const auto scale = f.inv(a(lead, c));
    for (Index j = c; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), scale);
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const auto factor = a(r, c);
      for (Index j = c; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return out;
}

Index rank(const GfMatrix& m) {
  std::vector<Index> pivots;
  row_reduce(m, &pivots);
  return static_cast<Index>(pivots.size());
}

GfMatrix nullspace(const GfMatrix& m) {
  std::vector<Index> pivots;
  const GfMatrix r = row_reduce(m, &pivots);
  const auto& f = m.field();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  GfMatrix basis(f, m.cols() - static_cast<Index>(pivots.size()), m.cols());
  Index out = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis.set(out, free, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.set(out, pivots[i], f.neg(r(static_cast<Index>(i), free)));
    ++out;
  }
  return basis;
}

GfMatrix submatrix_columns(const GfMatrix& m, std::span<const Index> cols) {
  GfMatrix out(m.field(), m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || cols[j] >= m.cols())
      throw IndexError("column " + std::to_string(cols[j]) + " out of range for " +
                       std::to_string(m.cols()) + " columns");
    out.entries_.col(static_cast<Index>(j)) = m.entries_.col(cols[j]);
  }
  return out;
}

GfMatrix submatrix_rows(const GfMatrix& m, std::span<const Index> rows) {
  GfMatrix out(m.field(), static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= m.rows())
      throw IndexError("row " + std::to_string(rows[i]) + " out of range for " +
                       std::to_string(m.rows()) + " rows");
    out.entries_.row(static_cast<Index>(i)) = m.entries_.row(rows[i]);
  }
  return out;
}

GfMatrix row_basis(const GfMatrix& m) {
  std::vector<Index> pivots;
  const GfMatrix r = row_reduce(m, &pivots);
  std::vector<Index> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<Index>(i);
  return submatrix_rows(r, keep);
}

std::vector<GfMatrix::Elem> row_times(std::span<const GfMatrix::Elem> x, const GfMatrix& g) {
  if (static_cast<Index>(x.size()) != g.rows()) throw ShapeError("row_times: length mismatch");
  const auto& f = g.field();
  std::vector<GfMatrix::Elem> out(static_cast<std::size_t>(g.cols()), 0);
  for (Index r = 0; r < g.rows(); ++r) {
    const auto coeff = x[static_cast<std::size_t>(r)] % f.prime();
    if (coeff == 0) continue;
    for (Index c = 0; c < g.cols(); ++c)
      out[static_cast<std::size_t>(c)] = f.add(out[static_cast<std::size_t>(c)], f.mul(coeff, g(r, c)));
  }
  return out;
}

GfMatrix multiply(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) throw ShapeError("multiply: shape or field mismatch");
  const auto& f = a.field();
  GfMatrix out(f, a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      PrimeField::Elem acc = 0;
      for (Index k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

GfMatrix transpose(const GfMatrix& m) {
  GfMatrix out(m.field(), m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.set(j, i, m(i, j));
  return out;
}

}  // namespace polyame
