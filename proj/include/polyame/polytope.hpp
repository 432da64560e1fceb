#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyame/gf.hpp"

namespace polyame {

enum class Solid { tetrahedron, hexahedron, octahedron, dodecahedron, icosahedron };

std::string_view to_string(Solid s);
/// Accepts the five names (and "cube" / "exahedron" for the hexahedron). Throws UnknownSolid.
Solid parse_solid(std::string_view name);
inline constexpr std::array<Solid, 5> kAllSolids = {Solid::tetrahedron, Solid::hexahedron, Solid::octahedron,
                                                     Solid::dodecahedron, Solid::icosahedron};

/// Combinatorial polyhedron: vertices 0..V-1, faces as vertex cycles.
///
/// All face cycles of the shipped solids are consistently oriented (every directed
/// edge appears in exactly one face), so a rotation offset on a face has the same
/// meaning everywhere on the surface.
class Polytope {
 public:
  using Face = std::vector<int>;
  using Edge = std::pair<int, int>;

  Polytope(std::string name, int vertex_count, std::vector<Face> faces);

  const std::string& name() const { return name_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  /// Undirected edges (a < b), sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Faces containing vertex v, ascending.
  const std::vector<int>& faces_of_vertex(int v) const { return vertex_faces_.at(static_cast<std::size_t>(v)); }
  /// Vertices adjacent to v along an edge, ascending.
  std::vector<int> neighbors(int v) const;
  /// Faces sharing an edge with f, ascending.
  std::vector<int> adjacent_faces(int f) const;
  /// Breadth-first distances in the face-adjacency graph.
  std::vector<int> face_distances(int f) const;
  int shared_vertex_count(int f, int g) const;

 private:
  std::string name_;
  int vertex_count_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> vertex_faces_;
};

/// Canonical instance of a Platonic solid.
Polytope platonic(Solid solid);
Polytope platonic(std::string_view name);

/// F x V incidence matrix over GF(2): entry (a, i) = 1 iff vertex i lies on face a.
GfMatrix face_parity_matrix(const Polytope& pt);

/// The unique face at maximal face-adjacency distance from `face`. Throws NoOppositeFace
/// when that face is not unique or touches `face` (the tetrahedron).
int opposite_face(const Polytope& pt, int face);

enum class Feature { faces, edges, vertices };
std::string_view to_string(Feature f);

struct SolidCodeEntry {
  Solid solid;
  Feature feature;
  int n;
  int p;

  std::string ame_label() const { return "AME(" + std::to_string(n) + "," + std::to_string(p) + ")"; }
};

/// Every (solid, feature) count written as a prime plus one.
std::vector<SolidCodeEntry> solid_code_table();

/// Checks Euler's formula, uniform face size, the two-faces-per-edge rule, uniform vertex
/// degree and consistent orientation. Returns an empty string when all hold.
std::string check_invariants(const Polytope& pt);

}  // namespace polyame
