#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "polyame/gf.hpp"
#include "polyame/state_vector.hpp"

namespace polyame {

/// Largest codeword count / dense amplitude count the enumerating routines accept.
inline constexpr Index kEnumerationLimit = Index{1} << 26;

/// Uniform superposition over the codewords of a linear code:
/// (1/sqrt(p^k)) sum_{x in GF(p)^k} |x G>, with G a k x n generator of full row rank.
class LinearCodeState {
 public:
  /// A full-row-rank generator is kept as given; any other spanning set is replaced by its row basis.
  static LinearCodeState from_generator(const GfMatrix& generator);
  /// Code = nullspace of the parity checks. A full-rank check matrix gives the k = 0 code.
  static LinearCodeState from_parity_checks(const GfMatrix& checks);

  std::uint32_t prime() const { return generator_.prime(); }
  int sites() const { return static_cast<int>(generator_.cols()); }
  int dimension() const { return static_cast<int>(generator_.rows()); }
  const GfMatrix& generator() const { return generator_; }

 private:
  explicit LinearCodeState(GfMatrix generator) : generator_(std::move(generator)) {}
  GfMatrix generator_;
};

/// Extended Reed-Solomon generator: evaluation points 0, 1, ..., p-1 then infinity,
/// rows j^0 ... j^{k-1} with k = (p+1)/2. Throws UnsupportedPrime for p = 2 or composite p.
GfMatrix rs_generator(std::uint32_t p);
/// Code state of rs_generator(p), generator kept as constructed.
LinearCodeState reed_solomon_state(std::uint32_t p);

using CodewordVisitor = std::function<void(std::span<const GfMatrix::Elem>)>;

/// Visits all p^k codewords, x running lexicographically over GF(p)^k (last digit fastest).
/// Throws TooLarge past kEnumerationLimit.
void for_each_codeword(const LinearCodeState& cs, const CodewordVisitor& visit);
std::vector<std::vector<GfMatrix::Elem>> codewords(const LinearCodeState& cs);
Index codeword_count(const LinearCodeState& cs);

/// Minimum weight over nonzero codewords; 0 for the k = 0 code. Throws TooLarge.
int min_hamming_distance(const LinearCodeState& cs);
/// Count of codewords per Hamming weight 0..n.
std::vector<Index> weight_distribution(const LinearCodeState& cs);

/// Entanglement entropy in dits of the block `sites` (0-based): rank(G_A) + rank(G_B) - k.
int code_entropy(const LinearCodeState& cs, std::span<const int> sites);

struct AmeCodeVerdict {
  bool ame = false;
  std::string reason;
  std::vector<int> witness;  // violating block, 0-based
  Index cuts_checked = 0;
};

/// True iff n is even, k = n/2 and every n/2-column restriction of G has full rank.
AmeCodeVerdict is_ame_code(const LinearCodeState& cs);

/// Dense amplitudes 1/sqrt(p^k) on the codewords. Throws TooLarge when p^n > kEnumerationLimit.
StateVector dense_statevector(const LinearCodeState& cs);

}  // namespace polyame
