#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyame/polytope.hpp"
#include "polyame/state_vector.hpp"

namespace polyame {

enum class ContractionMode {
  vertex,   ///< physical sites on the vertices, one agreement tensor per vertex
  hovering  ///< vertices are contracted away, one physical site per face
};

/// Tensor placed on a face. Tensor site j (skipping the hovering site) sits on vertex
/// face[(j + orientation) % face_size].
struct FaceAssignment {
  int face = 0;
  StateVector tensor;
  int orientation = 0;
};

struct AgreementContraction {
  Polytope polytope;
  std::vector<FaceAssignment> assignments;
  ContractionMode mode = ContractionMode::vertex;
  /// Position (0-based) of the hovering site inside each face tensor; hovering mode only.
  int hover_site = 0;
};

struct ContractionLimits {
  Index max_amplitudes = Index{1} << 20;
  Index max_configurations = Index{1} << 20;
};

/// Vertex the tensor site sits on, or -1 for the hovering site.
std::vector<int> site_vertices(const AgreementContraction& ac, const FaceAssignment& fa);

/// Throws ShapeError when assignments do not cover every face once or tensor shapes disagree.
void validate(const AgreementContraction& ac);

/// Vertex mode: amplitude(s) = prod_a tensor_a(s restricted to face a). Hovering mode:
/// amplitude(h) = sum_s prod_a tensor_a(s on face a, h_a). Output normalized; hovering output
/// sites follow face order. Throws TooLarge or ZeroState.
StateVector contract(const AgreementContraction& ac, const ContractionLimits& limits = {});

/// Same state through pairwise tensor merging in the given face order, summing each vertex
/// index as soon as its last face has been absorbed (hovering mode).
StateVector contract_by_elimination(const AgreementContraction& ac, std::span<const int> face_order,
                                    const ContractionLimits& limits = {});

enum class Ame52Variant { table1, rotinv };
std::string_view to_string(Ame52Variant v);
Ame52Variant parse_ame52_variant(std::string_view name);

/// A built state plus the choices that produced it.
struct PlatonicState {
  std::string id;
  StateVector state;
  std::string tensor;
  std::vector<int> orientations;
  int hover_position = 0;  // 1-based, hovering states only
};

/// Five-qubit AME tensor on every dodecahedron face. Empty orientations means offset 0 everywhere.
PlatonicState build_d1(std::span<const int> orientations = {}, Ame52Variant variant = Ame52Variant::table1);
/// Rotation-invariant variant; equals the parity code state.
PlatonicState build_d2();

enum class HoveringMethod { enumeration, elimination };

/// Six-qubit AME tensor on every face with the hovering qubit at `hover_position` (1..6) of each
/// cell; returns the normalized 12-qubit state.
PlatonicState build_hovering(int hover_position = 6, std::span<const int> orientations = {},
                             HoveringMethod method = HoveringMethod::enumeration, std::span<const int> face_order = {});

/// Per-face offsets drawn uniformly from 0..face_size-1.
std::vector<int> random_orientations(const Polytope& pt, std::uint64_t seed);

/// sum over faces of sum_{j} s_{v_j} s_{v_{j+1}} along each face cycle, mod 2.
int face_sign_exponent(const Polytope& pt, std::span<const int> spins);

struct SignLemmaResult {
  bool holds = true;
  Index configurations = 0;
  std::vector<int> counterexample;
};

/// Checks that the face sign exponent vanishes on every configuration with even parity on
/// every dodecahedron face.
SignLemmaResult sign_lemma_check();

}  // namespace polyame
