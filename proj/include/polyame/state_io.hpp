#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "polyame/state_vector.hpp"

namespace polyame {

/// Binary state file, all fields little-endian:
///
///   offset  size  field
///        0     8  magic "PLYAMEST"
///        8     4  uint32 number of sites n
///       12     4  uint32 local dimension d
///       16     1  uint8 encoding: 0 = float64 amplitudes, 1 = int8 signs
///       17     7  zero
///       24     8  float64 scale: the common magnitude for int8, 1.0 for float64
///       32     -  d^n amplitudes, basis order; int8 values in {-1, 0, 1} times scale
enum class StateEncoding : std::uint8_t { float64 = 0, int8 = 1 };

inline constexpr char kStateMagic[8] = {'P', 'L', 'Y', 'A', 'M', 'E', 'S', 'T'};
inline constexpr std::size_t kStateHeaderBytes = 32;

/// int8 when every nonzero amplitude has the same magnitude, float64 otherwise.
StateEncoding preferred_encoding(const StateVector& sv);

/// Throws FormatError when int8 is requested for a state that is not uniform up to signs.
void write_state(std::ostream& out, const StateVector& sv, StateEncoding encoding);
void write_state(std::ostream& out, const StateVector& sv);
void write_state(const std::filesystem::path& path, const StateVector& sv);

/// Throws FormatError on a bad magic, truncated data or inconsistent header.
StateVector read_state(std::istream& in);
StateVector read_state(const std::filesystem::path& path);

}  // namespace polyame
