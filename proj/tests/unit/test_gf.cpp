#include <doctest.h>

#include <random>

#include "polyame/gf.hpp"
#include "polyame/rng.hpp"

using namespace polyame;

namespace {

GfMatrix random_matrix(const PrimeField& f, Index r, Index c, Rng& rng) {
  GfMatrix m(f, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(rng.below(f.prime())));
  return m;
}

bool is_zero(const GfMatrix& m) { return (m.entries().array() == 0).all(); }

}  // namespace

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(11));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_THROWS_AS(PrimeField(4), NotPrime);
  CHECK_THROWS_AS(PrimeField(1), NotPrime);

  const PrimeField f(11);
  CHECK(f.reduce(-1) == 10);
  CHECK(f.reduce(-23) == 10);
  CHECK(f.mul(7, 8) == 1);
  CHECK(f.inv(7) == 8);
  CHECK(f.inv(1) == 1);
  CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  CHECK(f.pow(2, 10) == 1);
  for (GfMatrix::Elem a = 1; a < 11; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("row reduction and rank") {
  const PrimeField f2(2);
  const GfMatrix a(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  std::vector<Index> pivots;
  const GfMatrix r = row_reduce(a, &pivots);
  CHECK(pivots == std::vector<Index>{0, 1});
  CHECK(r == GfMatrix(f2, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));

  const PrimeField f5(5);
  CHECK(rank(GfMatrix::identity(f5, 4)) == 4);
  CHECK(rank(GfMatrix(f5, 3, 4)) == 0);
  CHECK(rank(GfMatrix(f5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace is a complement of the row space") {
  Rng rng(20240611);
  for (std::uint32_t p : {2u, 3u, 5u, 11u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Index r = 1 + static_cast<Index>(rng.below(6));
      const Index c = 1 + static_cast<Index>(rng.below(8));
      const GfMatrix a = random_matrix(f, r, c, rng);
      const GfMatrix n = nullspace(a);
      CHECK(n.cols() == c);
      CHECK(rank(a) + n.rows() == c);
      if (n.rows() > 0) {
        CHECK(is_zero(multiply(a, transpose(n))));
        CHECK(rank(n) == n.rows());
      }
      CHECK(rank(a) == rank(transpose(a)));
      CHECK(rank(row_reduce(a)) == rank(a));
      CHECK(rank(row_basis(a)) == row_basis(a).rows());
    }
  }
}

TEST_CASE("column and row selection") {
  const PrimeField f(3);
  const GfMatrix a(f, {{1, 2, 0}, {0, 1, 2}});
  const std::vector<Index> cols{2, 0};
  CHECK(submatrix_columns(a, cols) == GfMatrix(f, {{0, 1}, {2, 0}}));
  const std::vector<Index> bad{3};
  CHECK_THROWS_AS(submatrix_columns(a, bad), IndexError);
  CHECK_THROWS_AS(submatrix_rows(a, bad), IndexError);
  const std::vector<GfMatrix::Elem> x{1, 1};
  CHECK(row_times(x, a) == std::vector<GfMatrix::Elem>{1, 0, 2});
}
