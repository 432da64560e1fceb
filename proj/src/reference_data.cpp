#include "polyame/reference_data.hpp"

namespace polyame::reference {

namespace {

constexpr std::array<SignRow, 32> kAme52Table{{
    {0, "00000", '+'},  {1, "00001", '+'},  {2, "00010", '+'},  {3, "00011", '+'},
    {4, "00100", '+'},  {5, "00101", '-'},  {6, "00110", '-'},  {7, "00111", '+'},
    {8, "01000", '+'},  {9, "01001", '-'},  {10, "01010", '-'}, {11, "01011", '+'},
    {12, "01100", '+'}, {13, "01101", '+'}, {14, "01110", '+'}, {15, "01111", '+'},
    {16, "10000", '+'}, {17, "10001", '+'}, {18, "10010", '-'}, {19, "10011", '-'},
    {20, "10100", '+'}, {21, "10101", '-'}, {22, "10110", '+'}, {23, "10111", '-'},
    {24, "11000", '-'}, {25, "11001", '+'}, {26, "11010", '-'}, {27, "11011", '+'},
    {28, "11100", '-'}, {29, "11101", '-'}, {30, "11110", '+'}, {31, "11111", '+'},
}};

constexpr std::array<int, 32> kAme52Flat{
    1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1,
    1, 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1,
    -1, -1, 1, -1, 1, -1, -1, 1, 1,
};

constexpr std::array<int, 64> kAme62{
    -1, -1, -1, +1, -1, 1,  1,  1,
    -1, -1, -1, 1,  1,  -1, -1, -1,
    -1, -1, 1,  -1, -1, 1,  -1, -1,
    1,  1,  -1, 1,  -1, 1,  -1, -1,
    -1, 1,  -1, -1, -1, -1, 1,  -1,
    1,  -1, 1,  1,  -1, -1, 1,  -1,
    1,  -1, -1, -1, 1,  1,  1,  -1,
    1,  -1, -1, -1, -1, -1, -1, 1,
};

constexpr std::array<SolidCodeRow, 15> kSolidCodes{{
    {Solid::tetrahedron, Feature::faces, 4, "AME(4,3)"},
    {Solid::tetrahedron, Feature::edges, 6, "AME(6,5)"},
    {Solid::tetrahedron, Feature::vertices, 4, "AME(4,3)"},
    {Solid::hexahedron, Feature::faces, 6, "AME(6,5)"},
    {Solid::hexahedron, Feature::edges, 12, "AME(12,11)"},
    {Solid::hexahedron, Feature::vertices, 8, "AME(8,7)"},
    {Solid::octahedron, Feature::faces, 8, "AME(8,7)"},
    {Solid::octahedron, Feature::edges, 12, "AME(12,11)"},
    {Solid::octahedron, Feature::vertices, 6, "AME(6,5)"},
    {Solid::dodecahedron, Feature::faces, 12, "AME(12,11)"},
    {Solid::dodecahedron, Feature::edges, 30, "AME(30,29)"},
    {Solid::dodecahedron, Feature::vertices, 20, "AME(20,19)"},
    {Solid::icosahedron, Feature::faces, 20, "AME(20,19)"},
    {Solid::icosahedron, Feature::edges, 30, "AME(30,29)"},
    {Solid::icosahedron, Feature::vertices, 12, "AME(12,11)"},
}};

constexpr std::array<int, 72> kRs11{
    1, 1, 1,  1, 1, 1, 1,  1,  1,  1, 1,  0,
    0, 1, 2,  3, 4, 5, 6,  7,  8,  9, 10, 0,
    0, 1, 4,  9, 5, 3, 3,  5,  9,  4, 1,  0,
    0, 1, 8,  5, 9, 4, 7,  2,  6,  3, 10, 0,
    0, 1, 5,  4, 3, 9, 9,  3,  4,  5, 1,  0,
    0, 1, 10, 1, 1, 1, 10, 10, 10, 1, 10, 1,
};

}  // namespace

std::span<const SignRow> ame52_sign_table() { return kAme52Table; }
std::span<const int> ame52_flat_coefficients() { return kAme52Flat; }
std::span<const int> ame62_coefficients() { return kAme62; }
std::span<const SolidCodeRow> solid_code_rows() { return kSolidCodes; }
std::span<const int> rs11_generator() { return kRs11; }

const EntropyTableRow& d1_entropy_row() {
  static const EntropyTableRow row{
      "D1", {{{1}, {2}, {3}, {4}, {5}, {6}, {6, 7}, {7, 8}, {7, 8, 9}, {7, 8, 9, 10}}}};
  return row;
}

const EntropyTableRow& d2_entropy_row() {
  static const EntropyTableRow row{
      "D2", {{{1}, {2}, {3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 7, 8}, {7, 8}, {7, 8}}}};
  return row;
}

}  // namespace polyame::reference
