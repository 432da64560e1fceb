#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "polyame/polytope.hpp"

/// Published values the reproduction checks compare against, transcribed verbatim.
namespace polyame::reference {

struct SignRow {
  int index;
  std::string_view bits;  // s_1 ... s_5
  char sign;              // '+' or '-'
};

/// Five-qubit AME sign table, one row per basis state.
std::span<const SignRow> ame52_sign_table();
/// The same five-qubit state as a flat coefficient list.
std::span<const int> ame52_flat_coefficients();
/// Six-qubit AME coefficient list.
std::span<const int> ame62_coefficients();

/// Entropy value sets per block size |A| = 1..10 (index 0 is |A| = 1).
struct EntropyTableRow {
  std::string_view state;
  std::array<std::vector<int>, 10> values;
};
const EntropyTableRow& d1_entropy_row();
const EntropyTableRow& d2_entropy_row();

struct SolidCodeRow {
  Solid solid;
  Feature feature;
  int count;
  std::string_view label;
};
std::span<const SolidCodeRow> solid_code_rows();

/// 6 x 12 extended Reed-Solomon generator over GF(11), row-major.
std::span<const int> rs11_generator();

/// Stated minimum distance of the GF(11) code and the stated 6-qubit entropy range of the
/// hovering-qubit state.
inline constexpr int kRs11MinDistance = 7;
inline constexpr int kHoveringEntropyMin = 4;
inline constexpr int kHoveringEntropyMax = 6;
/// Stated code dimension and largest attainable entropy of the parity-code state.
inline constexpr int kD2CodeDimension = 8;
inline constexpr int kD2PentagonEntropy = 4;
inline constexpr int kD2OppositePairEntropy = 8;

}  // namespace polyame::reference
