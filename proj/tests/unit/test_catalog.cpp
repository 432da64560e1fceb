#include <doctest.h>

#include <cmath>

#include "polyame/catalog.hpp"
#include "polyame/entropy.hpp"
#include "polyame/reference_data.hpp"

using namespace polyame;

TEST_CASE("five-qubit sign table") {
  const StateVector sv = ame52_table1();
  CHECK(sv.sites() == 5);
  CHECK(sv.support_size() == 32);
  CHECK(is_normalized(sv));
  const auto rows = reference::ame52_sign_table();
  REQUIRE(rows.size() == 32);
  for (const auto& r : rows) {
    CHECK(sv.index_of(sv.digits_of(r.index)) == r.index);
    CHECK(std::signbit(sv.amplitude(r.bits)) == (r.sign == '-'));
  }
  CHECK(ame52_flat() == sv);
}

TEST_CASE("basis ordering is big-endian") {
  const StateVector sv = ame52_table1();
  CHECK(sv.index_of(std::vector<int>{0, 0, 0, 0, 1}) == 1);
  CHECK(sv.index_of(std::vector<int>{1, 0, 0, 0, 0}) == 16);
  CHECK(sv.digits_of(6) == std::vector<int>{0, 0, 1, 1, 0});
}

TEST_CASE("rotation-invariant five-qubit state") {
  const StateVector sv = ame52_rotinv();
  CHECK(sv.support_size() == 16);
  for (int k = 1; k < 5; ++k) CHECK(cyclic_shift(sv, k) == sv);
  CHECK_FALSE(cyclic_shift(ame52_table1(), 1) == ame52_table1());
}

TEST_CASE("catalogue states are AME") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto v = verify_ame(catalog_state(name));
    CHECK(v.pass);
    CHECK(v.max_deviation < 1e-10);
  }
  CHECK(verify_ame(ame52_table1()).cuts == 10);
  CHECK(verify_ame(ame62()).cuts == 20);
  CHECK(verify_ame(ame43()).cuts == 6);
  CHECK(ame43().local_dim() == 3);
  CHECK(is_normalized(ame43()));
  CHECK_THROWS_AS(catalog_state("nope"), ConfigError);
}

TEST_CASE("negative controls") {
  const auto g = verify_ame(ghz(4));
  CHECK_FALSE(g.pass);
  CHECK(g.worst_entropy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(verify_ame(product_zero(4)).pass);
}

TEST_CASE("sign table text") {
  const std::string t = sign_table(ame52_table1());
  CHECK(t.find("0 0 0 0 0") != std::string::npos);
  CHECK(std::count(t.begin(), t.end(), '\n') == 32);
}
