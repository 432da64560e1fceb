#include <doctest.h>

#include <cmath>

#include "polyame/catalog.hpp"
#include "polyame/code_state.hpp"
#include "polyame/contraction.hpp"
#include "polyame/entropy.hpp"

using namespace polyame;

namespace {

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i < b; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("first dodecahedron state") {
  const auto d1 = build_d1();
  CHECK(d1.id == "D1");
  CHECK(d1.state.sites() == 20);
  CHECK(d1.state.support_size() == (Index{1} << 20));
  CHECK(is_normalized(d1.state));
  CHECK(std::abs(d1.state[0]) == doctest::Approx(std::pow(2.0, -10)));

  const Bipartition pentagon(20, range(0, 5));
  CHECK(entropy(d1.state, pentagon) == doctest::Approx(5.0).epsilon(1e-12));
  std::vector<int> pair = range(0, 5);
  for (int v = 15; v < 20; ++v) pair.push_back(v);
  CHECK(entropy(d1.state, Bipartition(20, pair)) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(entropy(d1.state, Bipartition(20, range(0, 10))) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(entropy(d1.state, Bipartition(20, range(0, 7))) == doctest::Approx(7.0).epsilon(1e-12));
  std::vector<int> evens;
  for (int v = 0; v < 20; v += 2) evens.push_back(v);
  CHECK(entropy(d1.state, Bipartition(20, evens)) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("orientations change the state but not its single-face entropy") {
  const auto rotated = build_d1(random_orientations(platonic(Solid::dodecahedron), 5));
  CHECK(rotated.orientations.size() == 12);
  CHECK_FALSE(rotated.state == build_d1().state);
  CHECK(entropy(rotated.state, Bipartition(20, range(0, 5))) == doctest::Approx(5.0).epsilon(1e-12));
  const std::vector<int> bad(11, 0);
  CHECK_THROWS_AS(build_d1(bad), ConfigError);
}

TEST_CASE("second dodecahedron state is the parity code state") {
  const auto d2 = build_d2();
  CHECK(d2.state.support_size() == 256);
  const auto cs = LinearCodeState::from_parity_checks(face_parity_matrix(platonic(Solid::dodecahedron)));
  CHECK(d2.state == dense_statevector(cs));
  CHECK(build_d1({}, Ame52Variant::rotinv).state == d2.state);
}

TEST_CASE("sign lemma") {
  const auto r = sign_lemma_check();
  CHECK(r.holds);
  CHECK(r.configurations == 256);
}

TEST_CASE("hovering state") {
  const auto h = build_hovering();
  CHECK(h.state.sites() == 12);
  CHECK(h.hover_position == 6);
  CHECK(is_normalized(h.state));
  CHECK(h.state[0] == doctest::Approx(-0.015625).epsilon(1e-12));
  const auto order = range(0, 12);
  const auto by_elimination = build_hovering(6, {}, HoveringMethod::elimination, order);
  CHECK((by_elimination.state.amplitudes() - h.state.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(build_hovering(7), ConfigError);
}

TEST_CASE("contraction validation") {
  AgreementContraction ac{platonic(Solid::tetrahedron), {}, ContractionMode::vertex, 0};
  CHECK_THROWS_AS(validate(ac), ShapeError);
  for (int f = 0; f < 4; ++f) ac.assignments.push_back({f, ghz(3), 0});
  validate(ac);
  const StateVector s = contract(ac);
  // product of GHZ faces forces all four vertices equal
  CHECK(s.support_size() == 2);
  ac.assignments[0].tensor = ghz(4);
  CHECK_THROWS_AS(validate(ac), ShapeError);
}
