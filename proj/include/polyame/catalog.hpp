#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyame/state_vector.hpp"

namespace polyame {

/// Builds (1/sqrt(sum c_i^2)) sum c_i |i> from integer coefficients.
StateVector from_integer_coefficients(int sites, int local_dim, std::span<const int> coefficients);

/// Five-qubit AME state from the tabulated signs (not rotation invariant).
StateVector ame52_table1();
/// Same state built from the flat coefficient list; must agree with ame52_table1().
StateVector ame52_flat();
/// Rotation-invariant five-qubit AME state: (1/4) sum over even-parity s of (-1)^{sum_j s_j s_{j+1}} |s>.
StateVector ame52_rotinv();
/// Six-qubit AME state with +-1/8 amplitudes.
StateVector ame62();
/// Four-qutrit AME state (1/3) sum_{i,j} |i, j, i+j, i+2j> (mod 3).
StateVector ame43();

/// (|0...0> + ... + |d-1...d-1>) / sqrt(d).
StateVector ghz(int sites, int local_dim = 2);
StateVector product_zero(int sites, int local_dim = 2);

/// Catalog lookup for the CLI: ame52_table1, ame52_flat, ame52_rotinv, ame62, ame43.
StateVector catalog_state(std::string_view name);
std::vector<std::string> catalog_names();

/// Table layout dump: "index  s_1 ... s_n  sign" per line, zero amplitudes shown as '0'.
std::string sign_table(const StateVector& sv);

}  // namespace polyame
