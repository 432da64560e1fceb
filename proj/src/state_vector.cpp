#include "polyame/state_vector.hpp"

namespace polyame {

Index checked_power(Index base, int exponent, Index limit) {
  if (exponent < 0) throw ShapeError("negative exponent");
  Index out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > limit / base) throw TooLarge(std::to_string(base) + "^" + std::to_string(exponent) + " exceeds the size limit");
    out *= base;
  }
  return out;
}

}  // namespace polyame
