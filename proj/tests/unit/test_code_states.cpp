#include <doctest.h>

#include <cmath>
#include <map>

#include "polyame/catalog.hpp"
#include "polyame/code_state.hpp"
#include "polyame/entropy.hpp"
#include "polyame/polytope.hpp"
#include "polyame/reference_data.hpp"
#include "polyame/rng.hpp"

using namespace polyame;

namespace {

LinearCodeState d2_code() { return LinearCodeState::from_parity_checks(face_parity_matrix(platonic(Solid::dodecahedron))); }

std::vector<int> random_block(int n, int m, Rng& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < m; ++i) std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i))))]);
  all.resize(static_cast<std::size_t>(m));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("Reed-Solomon generator over GF(11)") {
  const GfMatrix g = rs_generator(11);
  CHECK(g.rows() == 6);
  CHECK(g.cols() == 12);
  const auto expected = reference::rs11_generator();
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 12; ++j) CHECK(static_cast<int>(g(i, j)) == expected[static_cast<std::size_t>(i * 12 + j)]);
  CHECK(rank(g) == 6);
  const auto cs = reed_solomon_state(11);
  CHECK(cs.generator() == g);
  CHECK(codeword_count(cs) == 1771561);
  CHECK(min_hamming_distance(cs) == 7);
  const auto v = is_ame_code(cs);
  CHECK(v.ame);
  CHECK(v.cuts_checked == 924);
}

TEST_CASE("Reed-Solomon family is MDS and AME") {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    CAPTURE(p);
    const auto cs = reed_solomon_state(p);
    CHECK(cs.dimension() == static_cast<int>(p + 1) / 2);
    CHECK(min_hamming_distance(cs) == cs.sites() / 2 + 1);
    CHECK(is_ame_code(cs).ame);
  }
  CHECK_THROWS_AS(rs_generator(2), UnsupportedPrime);
  CHECK_THROWS_AS(rs_generator(9), UnsupportedPrime);
}

TEST_CASE("rank formula agrees with dense entropies") {
  const auto cs = reed_solomon_state(3);
  const StateVector sv = dense_statevector(cs);
  CHECK(sv.support_size() == 9);
  CHECK(is_normalized(sv));
  for (int m = 1; m < 4; ++m)
    for_each_subset(4, m, [&](const std::vector<int>& block) {
      const double dense = entropy(sv, Bipartition(4, block));
      CHECK(dense == doctest::Approx(code_entropy(cs, block) * std::log2(3.0)).epsilon(1e-12));
    });
  CHECK(verify_ame(sv).pass);

  // same support as the three-qutrit-pair state up to a site permutation
  const std::vector<int> perm{0, 2, 3, 1};
  const StateVector moved = permute_sites(sv, perm);
  const StateVector ref = ame43();
  for (Index i = 0; i < ref.size(); ++i) CHECK((moved[i] != 0) == (ref[i] != 0));
}

TEST_CASE("dodecahedron parity code") {
  const auto cs = d2_code();
  CHECK(cs.dimension() == 8);
  CHECK(codeword_count(cs) == 256);
  CHECK(min_hamming_distance(cs) == 6);
  CHECK(weight_distribution(cs) ==
        std::vector<Index>{1, 0, 0, 0, 0, 0, 20, 0, 55, 0, 100, 0, 70, 0, 0, 0, 10, 0, 0, 0, 0});
  const std::vector<int> pentagon{0, 1, 2, 3, 4};
  CHECK(code_entropy(cs, pentagon) == 4);
  const std::vector<int> pair{0, 1, 2, 3, 4, 15, 16, 17, 18, 19};
  CHECK(code_entropy(cs, pair) == 8);
  CHECK_FALSE(is_ame_code(cs).ame);
  CHECK(is_ame_code(cs).reason.find("k != n/2") == 0);
}

TEST_CASE("exhaustive parity-code entropy counts") {
  const auto cs = d2_code();
  const std::vector<std::map<int, Index>> expected = {
      {{1, 20}},
      {{2, 190}},
      {{3, 1140}},
      {{3, 30}, {4, 4815}},
      {{4, 524}, {5, 14980}},
      {{4, 20}, {5, 4350}, {6, 34390}},
      {{5, 600}, {6, 22120}, {7, 54800}},
      {{5, 50}, {6, 7965}, {7, 70345}, {8, 47610}},
      {{6, 2880}, {7, 53960}, {8, 111120}},
      {{6, 2080}, {7, 43100}, {8, 139576}},
  };
  for (int m = 1; m <= 10; ++m) {
    CAPTURE(m);
    std::map<int, Index> counts;
    for_each_subset(20, m, [&](const std::vector<int>& block) { ++counts[code_entropy(cs, block)]; });
    CHECK(counts == expected[static_cast<std::size_t>(m - 1)]);
  }
}

TEST_CASE("code entropy is symmetric under complement") {
  const auto cs = d2_code();
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng.below(19));
    const auto block = random_block(20, m, rng);
    const Bipartition bp(20, block);
    CHECK(code_entropy(cs, block) == code_entropy(cs, bp.complement()));
    CHECK(code_entropy(cs, block) <= std::min(m, 20 - m));
  }
}

TEST_CASE("generators without full rank are reduced") {
  const PrimeField f(2);
  const auto cs = LinearCodeState::from_generator(GfMatrix(f, {{1, 1, 0}, {1, 1, 0}, {0, 1, 1}}));
  CHECK(cs.dimension() == 2);
  CHECK(codeword_count(cs) == 4);
}
