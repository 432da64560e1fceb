#include "polyame/catalog.hpp"

#include <cmath>
#include <sstream>

#include "polyame/reference_data.hpp"

namespace polyame {

StateVector from_integer_coefficients(int sites, int local_dim, std::span<const int> coefficients) {
  StateVector sv(sites, local_dim);
  if (static_cast<Index>(coefficients.size()) != sv.size()) throw ShapeError("coefficient count != d^n");
  long long weight = 0;
  for (int c : coefficients) weight += static_cast<long long>(c) * c;
  if (weight == 0) throw ZeroState("all coefficients are zero");
  const double scale = 1.0 / std::sqrt(static_cast<double>(weight));
  for (Index i = 0; i < sv.size(); ++i) sv[i] = coefficients[static_cast<std::size_t>(i)] * scale;
  return sv;
}

StateVector ame52_table1() {
  std::vector<int> coeff(32, 0);
  for (const auto& row : reference::ame52_sign_table()) coeff[static_cast<std::size_t>(row.index)] = row.sign == '+' ? 1 : -1;
  return from_integer_coefficients(5, 2, coeff);
}

StateVector ame52_flat() { return from_integer_coefficients(5, 2, reference::ame52_flat_coefficients()); }

StateVector ame52_rotinv() {
  std::vector<int> coeff(32, 0);
  for (int i = 0; i < 32; ++i) {
    int s[5];
    for (int j = 0; j < 5; ++j) s[j] = (i >> (4 - j)) & 1;
    if ((s[0] + s[1] + s[2] + s[3] + s[4]) % 2 != 0) continue;
    int eta = 0;
    for (int j = 0; j < 5; ++j) eta += s[j] * s[(j + 1) % 5];
    coeff[static_cast<std::size_t>(i)] = eta % 2 == 0 ? 1 : -1;
  }
  return from_integer_coefficients(5, 2, coeff);
}

StateVector ame62() { return from_integer_coefficients(6, 2, reference::ame62_coefficients()); }

StateVector ame43() {
  std::vector<int> coeff(81, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) coeff[static_cast<std::size_t>(((i * 3 + j) * 3 + (i + j) % 3) * 3 + (i + 2 * j) % 3)] = 1;
  return from_integer_coefficients(4, 3, coeff);
}

StateVector ghz(int sites, int local_dim) {
  StateVector sv(sites, local_dim);
  std::vector<int> digits(static_cast<std::size_t>(sites));
  for (int s = 0; s < local_dim; ++s) {
    std::fill(digits.begin(), digits.end(), s);
    sv[sv.index_of(digits)] = 1.0;
  }
  sv.normalize();
  return sv;
}

StateVector product_zero(int sites, int local_dim) {
  StateVector sv(sites, local_dim);
  sv[0] = 1.0;
  return sv;
}

std::vector<std::string> catalog_names() { return {"ame52_table1", "ame52_flat", "ame52_rotinv", "ame62", "ame43"}; }

StateVector catalog_state(std::string_view name) {
  if (name == "ame52_table1") return ame52_table1();
  if (name == "ame52_flat") return ame52_flat();
  if (name == "ame52_rotinv") return ame52_rotinv();
  if (name == "ame62") return ame62();
  if (name == "ame43") return ame43();
  throw ConfigError("unknown catalog state '" + std::string(name) + "'");
}

std::string sign_table(const StateVector& sv) {
  std::ostringstream out;
  for (Index i = 0; i < sv.size(); ++i) {
    out << i;
    for (int s : sv.digits_of(i)) out << ' ' << s;
    out << ' ' << (sv[i] > 0 ? '+' : sv[i] < 0 ? '-' : '0') << '\n';
  }
  return out.str();
}

}  // namespace polyame
