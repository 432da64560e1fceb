#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "polyame/polytope.hpp"

using namespace polyame;

TEST_CASE("platonic solids satisfy their invariants") {
  const std::map<Solid, std::array<int, 5>> expected = {
      // V E F face-size degree
      {Solid::tetrahedron, {4, 6, 4, 3, 3}},   {Solid::hexahedron, {8, 12, 6, 4, 3}},
      {Solid::octahedron, {6, 12, 8, 3, 4}},   {Solid::dodecahedron, {20, 30, 12, 5, 3}},
      {Solid::icosahedron, {12, 30, 20, 3, 5}},
  };
  for (Solid s : kAllSolids) {
    CAPTURE(to_string(s));
    const Polytope pt = platonic(s);
    const auto& e = expected.at(s);
    CHECK(pt.vertex_count() == e[0]);
    CHECK(pt.edge_count() == e[1]);
    CHECK(pt.face_count() == e[2]);
    CHECK(pt.face(0).size() == static_cast<std::size_t>(e[3]));
    CHECK(pt.neighbors(0).size() == static_cast<std::size_t>(e[4]));
    CHECK(check_invariants(pt).empty());
    CHECK(pt.vertex_count() - pt.edge_count() + pt.face_count() == 2);
  }
}

TEST_CASE("solid names") {
  CHECK(parse_solid("cube") == Solid::hexahedron);
  CHECK(parse_solid("dodecahedron") == Solid::dodecahedron);
  CHECK_THROWS_AS(parse_solid("torus"), UnknownSolid);
  CHECK_THROWS_AS(platonic("klein bottle"), UnknownSolid);
}

TEST_CASE("dodecahedron layout") {
  const Polytope pt = platonic(Solid::dodecahedron);
  CHECK(pt.face(0) == Polytope::Face{0, 1, 2, 3, 4});
  CHECK(opposite_face(pt, 0) == 11);
  std::set<int> a(pt.face(0).begin(), pt.face(0).end());
  a.insert(pt.face(11).begin(), pt.face(11).end());
  CHECK(a == std::set<int>{0, 1, 2, 3, 4, 15, 16, 17, 18, 19});
  for (int f = 0; f < 12; ++f) {
    const int g = opposite_face(pt, f);
    CHECK(opposite_face(pt, g) == f);
    CHECK(pt.shared_vertex_count(f, g) == 0);
    CHECK(pt.adjacent_faces(f).size() == 5);
  }
  for (int v = 0; v < 20; ++v) CHECK(pt.faces_of_vertex(v).size() == 3);
}

TEST_CASE("opposite faces") {
  CHECK_THROWS_AS(opposite_face(platonic(Solid::tetrahedron), 0), NoOppositeFace);
  for (Solid s : {Solid::hexahedron, Solid::octahedron, Solid::icosahedron}) {
    const Polytope pt = platonic(s);
    for (int f = 0; f < pt.face_count(); ++f) CHECK(opposite_face(pt, opposite_face(pt, f)) == f);
  }
}

TEST_CASE("face parity matrix") {
  const Polytope pt = platonic(Solid::dodecahedron);
  const GfMatrix h = face_parity_matrix(pt);
  CHECK(h.rows() == 12);
  CHECK(h.cols() == 20);
  CHECK(rank(h) == 12);
  for (Index j = 0; j < 20; ++j) {
    int ones = 0;
    for (Index i = 0; i < 12; ++i) ones += static_cast<int>(h(i, j));
    CHECK(ones == 3);
  }
}

TEST_CASE("solid code table") {
  const auto table = solid_code_table();
  CHECK(table.size() == 15);
  for (const auto& e : table) {
    CHECK(e.n == e.p + 1);
    CHECK(is_prime(static_cast<std::uint64_t>(e.p)));
  }
}
