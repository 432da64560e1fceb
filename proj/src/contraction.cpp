#include "polyame/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

#include "polyame/catalog.hpp"
#include "polyame/code_state.hpp"
#include "polyame/rng.hpp"

namespace polyame {

namespace {

int tensor_sites(const AgreementContraction& ac, int face) {
  const int size = static_cast<int>(ac.polytope.face(face).size());
  return ac.mode == ContractionMode::hovering ? size + 1 : size;
}

/// Place value of each tensor site in the tensor's amplitude index.
std::vector<Index> site_weights(int sites, int d) {
  std::vector<Index> w(static_cast<std::size_t>(sites), 1);
  for (int j = sites - 2; j >= 0; --j) w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j + 1)] * d;
  return w;
}

bool uniform_magnitude(const StateVector& t) {
  double magnitude = 0.0;
  for (Index i = 0; i < t.size(); ++i) {
    const double a = std::abs(t[i]);
    if (a == 0.0) continue;
    if (magnitude == 0.0) magnitude = a;
    if (a != magnitude) return false;
  }
  return true;
}

/// For one face: the vertex -> amplitude-index contributions, plus the hovering-site weight.
struct FaceIndexer {
  std::vector<std::pair<int, Index>> vertex_weights;
  Index hover_weight = 0;
};

FaceIndexer make_indexer(const AgreementContraction& ac, const FaceAssignment& fa) {
  FaceIndexer ix;
  const auto verts = site_vertices(ac, fa);
  const auto w = site_weights(static_cast<int>(verts.size()), fa.tensor.local_dim());
  for (std::size_t j = 0; j < verts.size(); ++j) {
    if (verts[j] < 0) ix.hover_weight = w[j];
    else ix.vertex_weights.emplace_back(verts[j], w[j]);
  }
  return ix;
}

/// Per vertex: the (face, weight) pairs its digit feeds into. Used for odometer updates of face keys.
std::vector<std::vector<std::pair<int, Index>>> vertex_feeds(const std::vector<FaceIndexer>& indexers, int vertices) {
  std::vector<std::vector<std::pair<int, Index>>> feeds(static_cast<std::size_t>(vertices));
  for (std::size_t a = 0; a < indexers.size(); ++a)
    for (const auto& [v, w] : indexers[a].vertex_weights) feeds[static_cast<std::size_t>(v)].emplace_back(static_cast<int>(a), w);
  return feeds;
}

/// Enumerates d^V vertex configurations, calling visit(keys) with each face's amplitude index
/// (hovering digit 0).
template <typename Visit>
void for_each_configuration(int vertices, int d, const std::vector<std::vector<std::pair<int, Index>>>& feeds,
                            std::size_t faces, Visit&& visit) {
  const Index total = checked_power(d, vertices);
  std::vector<Index> keys(faces, 0);
  std::vector<int> digits(static_cast<std::size_t>(vertices), 0);
  for (Index c = 0; c < total; ++c) {
    visit(c, keys);
    for (int v = vertices - 1; v >= 0; --v) {
      auto& dv = digits[static_cast<std::size_t>(v)];
      const auto& feed = feeds[static_cast<std::size_t>(v)];
      if (++dv < d) {
        for (const auto& [a, w] : feed) keys[static_cast<std::size_t>(a)] += w;
        break;
      }
      dv = 0;
      for (const auto& [a, w] : feed) keys[static_cast<std::size_t>(a)] -= (d - 1) * w;
    }
  }
}

/// The assignment covering face `face`.
const FaceAssignment& assignment_for(const AgreementContraction& ac, int face) {
  for (const auto& fa : ac.assignments)
    if (fa.face == face) return fa;
  throw ShapeError("no assignment for face " + std::to_string(face));
}

StateVector contract_vertex(const AgreementContraction& ac, const ContractionLimits& limits) {
  const int d = ac.assignments.front().tensor.local_dim();
  const int nv = ac.polytope.vertex_count();
  const Index total = checked_power(d, nv);
  if (total > limits.max_amplitudes) throw TooLarge(std::to_string(total) + " amplitudes exceed the contraction budget");

  const int nf = ac.polytope.face_count();
  std::vector<FaceIndexer> indexers;
  std::vector<const StateVector*> tensors;
  for (int a = 0; a < nf; ++a) {
    const auto& fa = assignment_for(ac, a);
    indexers.push_back(make_indexer(ac, fa));
    tensors.push_back(&fa.tensor);
  }
  const auto feeds = vertex_feeds(indexers, nv);

  StateVector out(nv, d);
  const bool exact_signs = std::all_of(tensors.begin(), tensors.end(), [](auto* t) { return uniform_magnitude(*t); });
  if (exact_signs) {
    // Flat tensors: multiply signs as integers and fix the common magnitude at the end.
    std::vector<std::vector<std::int8_t>> signs;
    for (auto* t : tensors) {
      std::vector<std::int8_t> s(static_cast<std::size_t>(t->size()));
      for (Index i = 0; i < t->size(); ++i) s[static_cast<std::size_t>(i)] = (*t)[i] > 0 ? 1 : (*t)[i] < 0 ? -1 : 0;
      signs.push_back(std::move(s));
    }
    std::vector<std::int8_t> product(static_cast<std::size_t>(total), 0);
    Index nonzero = 0;
    for_each_configuration(nv, d, feeds, static_cast<std::size_t>(nf), [&](Index c, const std::vector<Index>& keys) {
      int s = 1;
      for (int a = 0; a < nf && s != 0; ++a) s *= signs[static_cast<std::size_t>(a)][static_cast<std::size_t>(keys[static_cast<std::size_t>(a)])];
      product[static_cast<std::size_t>(c)] = static_cast<std::int8_t>(s);
      if (s != 0) ++nonzero;
    });
    if (nonzero == 0) throw ZeroState("contraction annihilated the state");
    const double magnitude = 1.0 / std::sqrt(static_cast<double>(nonzero));
    for (Index c = 0; c < total; ++c) out[c] = product[static_cast<std::size_t>(c)] * magnitude;
    return out;
  }

  for_each_configuration(nv, d, feeds, static_cast<std::size_t>(nf), [&](Index c, const std::vector<Index>& keys) {
    double amp = 1.0;
    for (int a = 0; a < nf && amp != 0.0; ++a) amp *= (*tensors[static_cast<std::size_t>(a)])[keys[static_cast<std::size_t>(a)]];
    out[c] = amp;
  });
  out.normalize();
  return out;
}

StateVector contract_hovering(const AgreementContraction& ac, const ContractionLimits& limits) {
  const int d = ac.assignments.front().tensor.local_dim();
  const int nv = ac.polytope.vertex_count();
  const int nf = ac.polytope.face_count();
  const Index configs = checked_power(d, nv);
  if (configs > limits.max_configurations) throw TooLarge(std::to_string(configs) + " vertex configurations exceed the budget");
  const Index out_size = checked_power(d, nf);
  if (out_size > limits.max_amplitudes) throw TooLarge(std::to_string(out_size) + " amplitudes exceed the contraction budget");

  std::vector<FaceIndexer> indexers;
  std::vector<const StateVector*> tensors;
  for (int a = 0; a < nf; ++a) {
    const auto& fa = assignment_for(ac, a);
    indexers.push_back(make_indexer(ac, fa));
    tensors.push_back(&fa.tensor);
  }
  const auto feeds = vertex_feeds(indexers, nv);

  // Each configuration contributes a product tensor over the hovering sites. Split the faces
  // into a leading and a trailing half so the contribution is an outer product u v^T, and
  // accumulate blocks of those with one matrix product.
  const int lead = nf / 2;
  const Index rows = checked_power(d, lead);
  const Index cols = checked_power(d, nf - lead);
  constexpr Index kBlock = 2048;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::MatrixXd u(rows, kBlock);
  Eigen::MatrixXd v(cols, kBlock);
  Index filled = 0;

  auto expand = [&](auto column, int first, int last, const std::vector<Index>& keys) {
    Index len = 1;
    column(0) = 1.0;
    for (int a = first; a < last; ++a) {
      const auto& t = *tensors[static_cast<std::size_t>(a)];
      const Index key = keys[static_cast<std::size_t>(a)];
      const Index hw = indexers[static_cast<std::size_t>(a)].hover_weight;
      for (Index i = len - 1; i >= 0; --i) {
        const double base = column(i);
        for (int h = d - 1; h >= 0; --h) column(i * d + h) = base * t[key + h * hw];
      }
      len *= d;
    }
  };

  for_each_configuration(nv, d, feeds, static_cast<std::size_t>(nf), [&](Index, const std::vector<Index>& keys) {
    expand(u.col(filled), 0, lead, keys);
    expand(v.col(filled), lead, nf, keys);
    if (++filled == kBlock) {
      acc.noalias() += u * v.transpose();
      filled = 0;
    }
  });
  if (filled > 0) acc.noalias() += u.leftCols(filled) * v.leftCols(filled).transpose();

  StateVector out(nf, d);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) out[r * cols + c] = acc(r, c);
  if (out.norm() == 0.0) throw ZeroState("hovering contraction annihilated the state");
  out.normalize();
  return out;
}

struct LabeledTensor {
  std::vector<int> labels;
  Eigen::VectorXd data;
};

LabeledTensor merge(const LabeledTensor& a, const LabeledTensor& b, int d, Index limit) {
  LabeledTensor out;
  out.labels = a.labels;
  for (int l : b.labels)
    if (std::find(a.labels.begin(), a.labels.end(), l) == a.labels.end()) out.labels.push_back(l);
  const int n = static_cast<int>(out.labels.size());
  const Index size = checked_power(d, n);
  if (size > limit) throw TooLarge("intermediate tensor of " + std::to_string(size) + " entries exceeds the budget");

  auto strides_in = [&](const LabeledTensor& t) {
    const auto w = site_weights(static_cast<int>(t.labels.size()), d);
    std::vector<Index> s(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      auto it = std::find(t.labels.begin(), t.labels.end(), out.labels[static_cast<std::size_t>(k)]);
      if (it != t.labels.end()) s[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(it - t.labels.begin())];
    }
    return s;
  };
  const auto sa = strides_in(a);
  const auto sb = strides_in(b);

  out.data.resize(size);
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  Index ia = 0;
  Index ib = 0;
  for (Index i = 0; i < size; ++i) {
    out.data[i] = a.data[ia] * b.data[ib];
    for (int k = n - 1; k >= 0; --k) {
      auto& dk = digits[static_cast<std::size_t>(k)];
      if (++dk < d) {
        ia += sa[static_cast<std::size_t>(k)];
        ib += sb[static_cast<std::size_t>(k)];
        break;
      }
      dk = 0;
      ia -= (d - 1) * sa[static_cast<std::size_t>(k)];
      ib -= (d - 1) * sb[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

LabeledTensor sum_out(const LabeledTensor& t, int label, int d) {
  const auto pos = static_cast<std::size_t>(std::find(t.labels.begin(), t.labels.end(), label) - t.labels.begin());
  const int n = static_cast<int>(t.labels.size());
  Index inner = 1;
  for (int k = static_cast<int>(pos) + 1; k < n; ++k) inner *= d;
  const Index outer = t.data.size() / (inner * d);
  LabeledTensor out;
  out.labels = t.labels;
  out.labels.erase(out.labels.begin() + static_cast<std::ptrdiff_t>(pos));
  out.data = Eigen::VectorXd::Zero(outer * inner);
  for (Index hi = 0; hi < outer; ++hi)
    for (int digit = 0; digit < d; ++digit)
      out.data.segment(hi * inner, inner) += t.data.segment((hi * d + digit) * inner, inner);
  return out;
}

}  // namespace

std::vector<int> site_vertices(const AgreementContraction& ac, const FaceAssignment& fa) {
  const auto& cycle = ac.polytope.face(fa.face);
  const int size = static_cast<int>(cycle.size());
  const int sites = tensor_sites(ac, fa.face);
  std::vector<int> out;
  int q = 0;
  for (int j = 0; j < sites; ++j) {
    if (ac.mode == ContractionMode::hovering && j == ac.hover_site) {
      out.push_back(-1);
      continue;
    }
    out.push_back(cycle[static_cast<std::size_t>(((q + fa.orientation) % size + size) % size)]);
    ++q;
  }
  return out;
}

void validate(const AgreementContraction& ac) {
  const int nf = ac.polytope.face_count();
  if (static_cast<int>(ac.assignments.size()) != nf) throw ShapeError("need exactly one assignment per face");
  std::vector<int> seen(static_cast<std::size_t>(nf), 0);
  const int d = ac.assignments.front().tensor.local_dim();
  for (const auto& fa : ac.assignments) {
    if (fa.face < 0 || fa.face >= nf) throw ShapeError("assignment face index out of range");
    if (seen[static_cast<std::size_t>(fa.face)]++) throw ShapeError("face " + std::to_string(fa.face) + " assigned twice");
    if (fa.tensor.sites() != tensor_sites(ac, fa.face))
      throw ShapeError("tensor on face " + std::to_string(fa.face) + " has " + std::to_string(fa.tensor.sites()) +
                       " sites, expected " + std::to_string(tensor_sites(ac, fa.face)));
    if (fa.tensor.local_dim() != d) throw ShapeError("face tensors disagree on the local dimension");
  }
  if (ac.mode == ContractionMode::hovering) {
    const int sites = tensor_sites(ac, 0);
    if (ac.hover_site < 0 || ac.hover_site >= sites) throw ShapeError("hover site out of range");
  }
}

StateVector contract(const AgreementContraction& ac, const ContractionLimits& limits) {
  validate(ac);
  return ac.mode == ContractionMode::vertex ? contract_vertex(ac, limits) : contract_hovering(ac, limits);
}

StateVector contract_by_elimination(const AgreementContraction& ac, std::span<const int> face_order,
                                    const ContractionLimits& limits) {
  validate(ac);
  const int nv = ac.polytope.vertex_count();
  const int nf = ac.polytope.face_count();
  const int d = ac.assignments.front().tensor.local_dim();
  std::vector<int> order(face_order.begin(), face_order.end());
  if (order.empty())
    for (int a = 0; a < nf; ++a) order.push_back(a);
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < nf; ++a)
      if (static_cast<int>(sorted.size()) != nf || sorted[static_cast<std::size_t>(a)] != a)
        throw ShapeError("face order must be a permutation of the faces");
  }
  const Index intermediate_limit = std::max(limits.max_configurations, limits.max_amplitudes) * 16;

  LabeledTensor acc{{}, Eigen::VectorXd::Ones(1)};
  std::vector<int> remaining(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) remaining[static_cast<std::size_t>(v)] = static_cast<int>(ac.polytope.faces_of_vertex(v).size());

  for (int a : order) {
    const auto& fa = assignment_for(ac, a);
    LabeledTensor t;
    for (int v : site_vertices(ac, fa)) t.labels.push_back(v < 0 ? nv + a : v);
    t.data = fa.tensor.amplitudes();
    acc = merge(acc, t, d, intermediate_limit);
    if (ac.mode != ContractionMode::hovering) continue;
    for (int v : ac.polytope.face(a))
      if (--remaining[static_cast<std::size_t>(v)] == 0) acc = sum_out(acc, v, d);
  }

  // Reorder the open labels to output order: vertices 0..V-1, or faces 0..F-1.
  const int n = static_cast<int>(acc.labels.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int l = acc.labels[static_cast<std::size_t>(j)];
    perm[static_cast<std::size_t>(j)] = ac.mode == ContractionMode::hovering ? l - nv : l;
  }
  StateVector out = permute_sites(StateVector(n, d, std::move(acc.data)), perm);
  if (out.norm() == 0.0) throw ZeroState("contraction annihilated the state");
  out.normalize();
  return out;
}

std::string_view to_string(Ame52Variant v) { return v == Ame52Variant::table1 ? "ame52_table1" : "ame52_rotinv"; }

Ame52Variant parse_ame52_variant(std::string_view name) {
  if (name == "table1" || name == "ame52_table1") return Ame52Variant::table1;
  if (name == "rotinv" || name == "ame52_rotinv") return Ame52Variant::rotinv;
  throw ConfigError("unknown five-qubit tensor '" + std::string(name) + "'");
}

namespace {

std::vector<int> resolve_orientations(const Polytope& pt, std::span<const int> orientations) {
  if (orientations.empty()) return std::vector<int>(static_cast<std::size_t>(pt.face_count()), 0);
  if (static_cast<int>(orientations.size()) != pt.face_count())
    throw ConfigError("expected " + std::to_string(pt.face_count()) + " orientations, got " + std::to_string(orientations.size()));
  for (int o : orientations)
    if (o < 0 || o >= static_cast<int>(pt.face(0).size())) throw ConfigError("orientation offset out of range");
  return {orientations.begin(), orientations.end()};
}

}  // namespace

PlatonicState build_d1(std::span<const int> orientations, Ame52Variant variant) {
  AgreementContraction ac{platonic(Solid::dodecahedron), {}, ContractionMode::vertex, 0};
  const auto offsets = resolve_orientations(ac.polytope, orientations);
  const StateVector tensor = variant == Ame52Variant::table1 ? ame52_table1() : ame52_rotinv();
  for (int a = 0; a < ac.polytope.face_count(); ++a) ac.assignments.push_back({a, tensor, offsets[static_cast<std::size_t>(a)]});
  return {variant == Ame52Variant::table1 ? "D1" : "D1[ame52_rotinv]", contract(ac), std::string(to_string(variant)), offsets, 0};
}

PlatonicState build_d2() {
  auto built = build_d1({}, Ame52Variant::rotinv);
  built.id = "D2";
  return built;
}

PlatonicState build_hovering(int hover_position, std::span<const int> orientations, HoveringMethod method,
                             std::span<const int> face_order) {
  if (hover_position < 1 || hover_position > 6) throw ConfigError("hover position must be in 1..6");
  AgreementContraction ac{platonic(Solid::dodecahedron), {}, ContractionMode::hovering, hover_position - 1};
  const auto offsets = resolve_orientations(ac.polytope, orientations);
  const StateVector tensor = ame62();
  for (int a = 0; a < ac.polytope.face_count(); ++a) ac.assignments.push_back({a, tensor, offsets[static_cast<std::size_t>(a)]});
  StateVector state = method == HoveringMethod::enumeration ? contract(ac) : contract_by_elimination(ac, face_order);
  return {"hovering", std::move(state), "ame62", offsets, hover_position};
}

std::vector<int> random_orientations(const Polytope& pt, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> out;
  for (const auto& f : pt.faces()) out.push_back(static_cast<int>(rng.below(f.size())));
  return out;
}

int face_sign_exponent(const Polytope& pt, std::span<const int> spins) {
  int eta = 0;
  for (const auto& f : pt.faces())
    for (std::size_t j = 0; j < f.size(); ++j)
      eta += spins[static_cast<std::size_t>(f[j])] * spins[static_cast<std::size_t>(f[(j + 1) % f.size()])];
  return eta % 2;
}

SignLemmaResult sign_lemma_check() {
  const Polytope pt = platonic(Solid::dodecahedron);
  const auto code = LinearCodeState::from_parity_checks(face_parity_matrix(pt));
  SignLemmaResult result;
  std::vector<int> spins(static_cast<std::size_t>(pt.vertex_count()));
  for_each_codeword(code, [&](std::span<const GfMatrix::Elem> w) {
    ++result.configurations;
    std::copy(w.begin(), w.end(), spins.begin());
    if (result.holds && face_sign_exponent(pt, spins) != 0) {
      result.holds = false;
      result.counterexample = spins;
    }
  });
  return result;
}

}  // namespace polyame
