#include "polyame/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace polyame {

std::string_view to_string(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return "tetrahedron";
    case Solid::hexahedron: return "hexahedron";
    case Solid::octahedron: return "octahedron";
    case Solid::dodecahedron: return "dodecahedron";
    case Solid::icosahedron: return "icosahedron";
  }
  return "?";
}

Solid parse_solid(std::string_view name) {
  for (auto s : kAllSolids)
    if (to_string(s) == name) return s;
  if (name == "cube" || name == "exahedron") return Solid::hexahedron;
  throw UnknownSolid("unknown solid '" + std::string(name) + "'");
}

std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::faces: return "faces";
    case Feature::edges: return "edges";
    case Feature::vertices: return "vertices";
  }
  return "?";
}

Polytope::Polytope(std::string name, int vertex_count, std::vector<Face> faces)
    : name_(std::move(name)), vertex_count_(vertex_count), faces_(std::move(faces)),
      vertex_faces_(static_cast<std::size_t>(vertex_count)) {
  std::set<Edge> edges;
  for (int f = 0; f < face_count(); ++f) {
    const auto& cycle = faces_[static_cast<std::size_t>(f)];
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int a = cycle[j];
      const int b = cycle[(j + 1) % cycle.size()];
      if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
        throw IndexError("face vertex out of range in " + name_);
      edges.insert({std::min(a, b), std::max(a, b)});
      vertex_faces_[static_cast<std::size_t>(a)].push_back(f);
    }
  }
  edges_.assign(edges.begin(), edges.end());
}

std::vector<int> Polytope::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Polytope::adjacent_faces(int f) const {
  std::vector<int> out;
  for (int g = 0; g < face_count(); ++g)
    if (g != f && shared_vertex_count(f, g) >= 2) out.push_back(g);
  return out;
}

int Polytope::shared_vertex_count(int f, int g) const {
  int count = 0;
  for (int v : face(f))
    if (std::find(face(g).begin(), face(g).end(), v) != face(g).end()) ++count;
  return count;
}

std::vector<int> Polytope::face_distances(int f) const {
  std::vector<int> dist(static_cast<std::size_t>(face_count()), -1);
  std::deque<int> queue{f};
  dist[static_cast<std::size_t>(f)] = 0;
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (int h : adjacent_faces(g)) {
      if (dist[static_cast<std::size_t>(h)] >= 0) continue;
      dist[static_cast<std::size_t>(h)] = dist[static_cast<std::size_t>(g)] + 1;
      queue.push_back(h);
    }
  }
  return dist;
}

namespace {

Polytope make_tetrahedron() {
  return Polytope("tetrahedron", 4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
}

Polytope make_hexahedron() {
  // 0-3 bottom square, 4-7 top square with 4+i above i.
  return Polytope("hexahedron", 8,
                  {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

Polytope make_octahedron() {
  // 0 north pole, 1-4 equator, 5 south pole.
  std::vector<Polytope::Face> faces;
  for (int i = 0; i < 4; ++i) faces.push_back({0, 1 + i, 1 + (i + 1) % 4});
  for (int i = 0; i < 4; ++i) faces.push_back({5, 1 + (i + 1) % 4, 1 + i});
  return Polytope("octahedron", 6, std::move(faces));
}

Polytope make_dodecahedron() {
  // Four rings of five: top pentagon 0-4, upper ring 5-9 (5+i below i), lower ring
  // 10-14 (10+i joined to 5+i and 5+i+1), bottom pentagon 15-19 (15+i below 10+i).
  // Face 0 is the top pentagon and face 11 the bottom one, its opposite.
  auto top = [](int k) { return k % 5; };
  auto upper = [](int k) { return 5 + k % 5; };
  auto lower = [](int k) { return 10 + k % 5; };
  auto bottom = [](int k) { return 15 + k % 5; };
  std::vector<Polytope::Face> faces{{0, 1, 2, 3, 4}};
  for (int i = 0; i < 5; ++i) faces.push_back({top(i), upper(i), lower(i), upper(i + 1), top(i + 1)});
  for (int i = 0; i < 5; ++i)
    faces.push_back({upper(i + 1), lower(i), bottom(i), bottom(i + 1), lower(i + 1)});
  faces.push_back({15, 19, 18, 17, 16});
  return Polytope("dodecahedron", 20, std::move(faces));
}

Polytope make_icosahedron() {
  // 0 north pole, upper ring 1-5, lower ring 6-10 (6+k joined to 1+k and 1+k+1), 11 south pole.
  auto upper = [](int k) { return 1 + k % 5; };
  auto lower = [](int k) { return 6 + k % 5; };
  std::vector<Polytope::Face> faces;
  for (int k = 0; k < 5; ++k) faces.push_back({0, upper(k), upper(k + 1)});
  for (int k = 0; k < 5; ++k) {
    faces.push_back({upper(k), lower(k), upper(k + 1)});
    faces.push_back({upper(k + 1), lower(k), lower(k + 1)});
  }
  for (int k = 0; k < 5; ++k) faces.push_back({11, lower(k + 1), lower(k)});
  return Polytope("icosahedron", 12, std::move(faces));
}

}  // namespace

Polytope platonic(Solid solid) {
  switch (solid) {
    case Solid::tetrahedron: return make_tetrahedron();
    case Solid::hexahedron: return make_hexahedron();
    case Solid::octahedron: return make_octahedron();
    case Solid::dodecahedron: return make_dodecahedron();
    case Solid::icosahedron: return make_icosahedron();
  }
  throw UnknownSolid("unknown solid");
}

Polytope platonic(std::string_view name) { return platonic(parse_solid(name)); }

GfMatrix face_parity_matrix(const Polytope& pt) {
  GfMatrix h(PrimeField(2), pt.face_count(), pt.vertex_count());
  for (int a = 0; a < pt.face_count(); ++a)
    for (int v : pt.face(a)) h.set(a, v, 1);
  return h;
}

int opposite_face(const Polytope& pt, int face) {
  if (face < 0 || face >= pt.face_count()) throw IndexError("face index out of range");
  const auto dist = pt.face_distances(face);
  const int far = *std::max_element(dist.begin(), dist.end());
  int found = -1;
  int count = 0;
  for (int g = 0; g < pt.face_count(); ++g) {
    if (dist[static_cast<std::size_t>(g)] == far) {
      found = g;
      ++count;
    }
  }
  if (count != 1 || pt.shared_vertex_count(face, found) != 0)
    throw NoOppositeFace(pt.name() + " has no face opposite to face " + std::to_string(face));
  return found;
}

std::vector<SolidCodeEntry> solid_code_table() {
  std::vector<SolidCodeEntry> out;
  for (auto s : kAllSolids) {
    const Polytope pt = platonic(s);
    for (auto [feature, n] : {std::pair{Feature::faces, pt.face_count()}, std::pair{Feature::edges, pt.edge_count()},
                              std::pair{Feature::vertices, pt.vertex_count()}}) {
      if (!is_prime(static_cast<std::uint64_t>(n - 1)))
        throw Error("internal: " + pt.name() + " " + std::string(to_string(feature)) + " count is not prime+1");
      out.push_back({s, feature, n, n - 1});
    }
  }
  return out;
}

std::string check_invariants(const Polytope& pt) {
  std::ostringstream err;
  const int v = pt.vertex_count();
  const int e = pt.edge_count();
  const int f = pt.face_count();
  if (v - e + f != 2) err << "Euler characteristic " << v - e + f << "; ";

  const auto face_size = pt.faces().empty() ? 0 : pt.faces().front().size();
  for (const auto& face : pt.faces()) {
    if (face.size() != face_size) err << "non-uniform face size; ";
    if (std::set<int>(face.begin(), face.end()).size() != face.size()) err << "repeated vertex in face; ";
  }

  std::map<Polytope::Edge, int> undirected;
  std::map<Polytope::Edge, int> directed;
  for (const auto& face : pt.faces())
    for (std::size_t j = 0; j < face.size(); ++j) {
      const int a = face[j];
      const int b = face[(j + 1) % face.size()];
      ++undirected[{std::min(a, b), std::max(a, b)}];
      ++directed[{a, b}];
    }
  for (const auto& [edge, count] : undirected)
    if (count != 2) err << "edge " << edge.first << "-" << edge.second << " in " << count << " faces; ";
  for (const auto& [edge, count] : directed)
    if (count != 1) err << "directed edge " << edge.first << "->" << edge.second << " repeated; ";

  const auto degree = pt.faces_of_vertex(0).size();
  for (int i = 0; i < v; ++i) {
    if (pt.faces_of_vertex(i).size() != degree) err << "vertex " << i << " has non-uniform degree; ";
    if (pt.neighbors(i).size() != degree) err << "vertex " << i << " edge degree differs from face degree; ";
  }
  return err.str();
}

}  // namespace polyame
