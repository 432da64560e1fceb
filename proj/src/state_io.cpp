#include "polyame/state_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace polyame {

static_assert(std::endian::native == std::endian::little, "state files are written in host order");

namespace {

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) throw FormatError("truncated state header");
  return value;
}

double common_magnitude(const StateVector& sv) {
  double magnitude = 0.0;
  for (Index i = 0; i < sv.size(); ++i) {
    const double a = std::abs(sv[i]);
    if (a == 0.0) continue;
    if (magnitude == 0.0) magnitude = a;
    else if (a != magnitude) return -1.0;
  }
  return magnitude;
}

}  // namespace

StateEncoding preferred_encoding(const StateVector& sv) {
  return common_magnitude(sv) > 0.0 ? StateEncoding::int8 : StateEncoding::float64;
}

void write_state(std::ostream& out, const StateVector& sv, StateEncoding encoding) {
  double scale = 1.0;
  if (encoding == StateEncoding::int8) {
    scale = common_magnitude(sv);
    if (scale <= 0.0) throw FormatError("int8 encoding needs amplitudes of one common magnitude");
  }
  out.write(kStateMagic, sizeof(kStateMagic));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(sv.sites()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(sv.local_dim()));
  put<std::uint8_t>(out, static_cast<std::uint8_t>(encoding));
  const char pad[7] = {};
  out.write(pad, sizeof(pad));
  put<double>(out, scale);
  if (encoding == StateEncoding::int8) {
    std::vector<std::int8_t> signs(static_cast<std::size_t>(sv.size()));
    for (Index i = 0; i < sv.size(); ++i) signs[static_cast<std::size_t>(i)] = sv[i] > 0 ? 1 : sv[i] < 0 ? -1 : 0;
    out.write(reinterpret_cast<const char*>(signs.data()), static_cast<std::streamsize>(signs.size()));
  } else {
    out.write(reinterpret_cast<const char*>(sv.amplitudes().data()), static_cast<std::streamsize>(sv.size() * sizeof(double)));
  }
  if (!out) throw FormatError("failed to write state");
}

void write_state(std::ostream& out, const StateVector& sv) { write_state(out, sv, preferred_encoding(sv)); }

void write_state(const std::filesystem::path& path, const StateVector& sv) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_state(out, sv);
}

StateVector read_state(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kStateMagic, sizeof(magic)) != 0)
    throw FormatError("not a state file (bad magic)");
  const auto n = get<std::uint32_t>(in);
  const auto d = get<std::uint32_t>(in);
  const auto encoding = get<std::uint8_t>(in);
  char pad[7];
  if (!in.read(pad, sizeof(pad))) throw FormatError("truncated state header");
  const auto scale = get<double>(in);
  if (n < 1 || d < 2 || n > 64) throw FormatError("implausible header: n = " + std::to_string(n) + ", d = " + std::to_string(d));
  StateVector sv(static_cast<int>(n), static_cast<int>(d));
  const auto size = static_cast<std::size_t>(sv.size());
  if (encoding == static_cast<std::uint8_t>(StateEncoding::int8)) {
    std::vector<std::int8_t> signs(size);
    if (!in.read(reinterpret_cast<char*>(signs.data()), static_cast<std::streamsize>(size))) throw FormatError("truncated amplitudes");
    for (std::size_t i = 0; i < size; ++i) {
      if (signs[i] < -1 || signs[i] > 1) throw FormatError("int8 amplitude outside {-1, 0, 1}");
      sv[static_cast<Index>(i)] = signs[i] == 0 ? 0.0 : signs[i] * scale;
    }
  } else if (encoding == static_cast<std::uint8_t>(StateEncoding::float64)) {
    if (!in.read(reinterpret_cast<char*>(sv.amplitudes().data()), static_cast<std::streamsize>(size * sizeof(double))))
      throw FormatError("truncated amplitudes");
  } else {
    throw FormatError("unknown amplitude encoding " + std::to_string(encoding));
  }
  return sv;
}

StateVector read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_state(in);
}

}  // namespace polyame
