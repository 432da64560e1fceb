#include <doctest.h>

#include <cmath>
#include <set>

#include "polyame/catalog.hpp"
#include "polyame/entropy.hpp"
#include "polyame/partitions.hpp"
#include "polyame/polytope.hpp"
#include "polyame/rng.hpp"

#include <random>

using namespace polyame;

namespace {

StateVector random_state(int n, int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  StateVector sv(n, d);
  for (Index i = 0; i < sv.size(); ++i) sv[i] = normal(gen);
  sv.normalize();
  return sv;
}

}  // namespace

TEST_CASE("bipartitions") {
  const Bipartition bp(6, {4, 1});
  CHECK(bp.block() == std::vector<int>{1, 4});
  CHECK(bp.complement() == std::vector<int>{0, 2, 3, 5});
  CHECK(bp.one_based() == std::vector<int>{2, 5});
  CHECK(Bipartition::from_one_based(6, {2, 5}) == bp);
  CHECK(bp.flipped().flipped() == bp);
  CHECK_THROWS_AS(Bipartition(6, {1, 1}), ShapeError);
  CHECK_THROWS_AS(Bipartition(6, {6}), ShapeError);
}

TEST_CASE("entropy is symmetric and bounded") {
  for (int d : {2, 3}) {
    const int n = d == 2 ? 7 : 5;
    const StateVector sv = random_state(n, d, 17 + static_cast<std::uint64_t>(d));
    Rng rng(4);
    for (int t = 0; t < 30; ++t) {
      const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      const auto parts = sampled_partitions(n, m, 1, rng.next());
      const Bipartition& bp = parts.front();
      const double s = entropy(sv, bp);
      CHECK(s == doctest::Approx(entropy(sv, bp.flipped())).epsilon(1e-10));
      CHECK(s >= -1e-12);
      CHECK(s <= std::min(m, n - m) * std::log2(static_cast<double>(d)) + 1e-10);
    }
  }
}

TEST_CASE("entropy of simple states") {
  CHECK(entropy(product_zero(6), Bipartition(6, {0, 1, 2})) == doctest::Approx(0.0));
  CHECK(entropy(ghz(6), Bipartition(6, {0, 3})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy(ghz(3, 3), Bipartition(3, {1})) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  const auto spectrum = reduced_spectrum(ghz(4), Bipartition(4, {0, 1}));
  CHECK(spectrum.sum() == doctest::Approx(1.0));
}

TEST_CASE("entropy rejects unnormalized input") {
  StateVector sv(3, 2);
  sv[0] = 2.0;
  CHECK_THROWS_AS(entropy(sv, Bipartition(3, {0})), NotNormalized);
  StateVector zero(3, 2);
  CHECK_THROWS_AS(zero.normalize(), ZeroState);
}

TEST_CASE("reshape matches a direct transpose") {
  const StateVector sv = random_state(5, 2, 3);
  const Bipartition bp(5, {1, 3});
  const auto m = reshape(sv, bp);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 8);
  for (Index i = 0; i < sv.size(); ++i) {
    const auto s = sv.digits_of(i);
    const Index r = s[1] * 2 + s[3];
    const Index c = s[0] * 4 + s[2] * 2 + s[4];
    CHECK(m(r, c) == sv[i]);
  }
}

TEST_CASE("site permutations") {
  const StateVector sv = ame52_table1();
  const std::vector<int> perm{1, 2, 3, 4, 0};
  CHECK(permute_sites(sv, perm) == cyclic_shift(sv, 1));
  const StateVector shifted = cyclic_shift(sv, 1);
  CHECK(shifted.amplitude("10000") == sv.amplitude("00001"));
  const std::vector<int> bad{0, 0, 1, 2, 3};
  CHECK_THROWS_AS(permute_sites(sv, bad), ShapeError);
}

TEST_CASE("partition enumeration") {
  CHECK(binomial(20, 10) == 184756);
  CHECK(exhaustive_partitions(20, 3).size() == 1140);
  CHECK_THROWS_AS(exhaustive_partitions(20, 10, 1000), TooLarge);
  const auto a = sampled_partitions(20, 8, 500, 42);
  const auto b = sampled_partitions(20, 8, 500, 42);
  CHECK(a == b);
  CHECK(std::set<Bipartition>(a.begin(), a.end()).size() == 500);
  CHECK(sampled_partitions(6, 3, 1000, 1).size() == 20);
  const Polytope pt = platonic(Solid::dodecahedron);
  CHECK(opposite_face_pairs(pt).size() == 6);
  for (int m = 1; m <= 10; ++m)
    for (const auto& bp : structured_partitions(pt, m)) CHECK(bp.size() == m);
}

TEST_CASE("seeded generator is portable") {
  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  std::mt19937_64 ref(7);
  Rng c(7);
  CHECK(c.next() == ref());
  for (int i = 0; i < 1000; ++i) CHECK(c.below(13) < 13);
}
