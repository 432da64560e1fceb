#include "polyame/code_state.hpp"

#include <algorithm>
#include <cmath>

namespace polyame {

LinearCodeState LinearCodeState::from_generator(const GfMatrix& generator) {
  if (rank(generator) == generator.rows()) return LinearCodeState(generator);
  return LinearCodeState(row_basis(generator));
}

LinearCodeState LinearCodeState::from_parity_checks(const GfMatrix& checks) {
  return LinearCodeState(nullspace(checks));
}

GfMatrix rs_generator(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) throw UnsupportedPrime("Reed-Solomon AME construction needs an odd prime, got " + std::to_string(p));
  const PrimeField field(p);
  const Index n = p + 1;
  const Index k = (p + 1) / 2;
  GfMatrix g(field, k, n);
  for (Index x = 0; x < static_cast<Index>(p); ++x)
    for (Index r = 0; r < k; ++r) g.set(r, x, field.pow(static_cast<std::uint32_t>(x), static_cast<std::uint64_t>(r)));
  g.set(k - 1, n - 1, 1);
  return g;
}

LinearCodeState reed_solomon_state(std::uint32_t p) {
  return LinearCodeState::from_generator(rs_generator(p));
}

Index codeword_count(const LinearCodeState& cs) {
  return checked_power(cs.prime(), cs.dimension());
}

void for_each_codeword(const LinearCodeState& cs, const CodewordVisitor& visit) {
  const Index total = codeword_count(cs);
  if (total > kEnumerationLimit) throw TooLarge(std::to_string(total) + " codewords exceed the enumeration limit");
  const auto& g = cs.generator();
  const auto& f = g.field();
  const int k = cs.dimension();
  const int n = cs.sites();
  std::vector<GfMatrix::Elem> x(static_cast<std::size_t>(k), 0);
  std::vector<GfMatrix::Elem> word(static_cast<std::size_t>(n), 0);
  for (Index count = 0; count < total; ++count) {
    visit(word);
    // Odometer on x. A digit stepping up adds row j; a digit wrapping from p-1 to 0 subtracts
    // (p-1) row j, which is also +row j mod p.
    for (int j = k - 1; j >= 0; --j) {
      auto& xj = x[static_cast<std::size_t>(j)];
      if (xj + 1 < f.prime()) {
        ++xj;
        for (int c = 0; c < n; ++c) word[static_cast<std::size_t>(c)] = f.add(word[static_cast<std::size_t>(c)], g(j, c));
        break;
      }
      xj = 0;
      for (int c = 0; c < n; ++c) word[static_cast<std::size_t>(c)] = f.add(word[static_cast<std::size_t>(c)], g(j, c));
    }
  }
}

std::vector<std::vector<GfMatrix::Elem>> codewords(const LinearCodeState& cs) {
  std::vector<std::vector<GfMatrix::Elem>> out;
  for_each_codeword(cs, [&](std::span<const GfMatrix::Elem> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::vector<Index> weight_distribution(const LinearCodeState& cs) {
  std::vector<Index> counts(static_cast<std::size_t>(cs.sites()) + 1, 0);
  for_each_codeword(cs, [&](std::span<const GfMatrix::Elem> w) {
    ++counts[static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](auto v) { return v != 0; }))];
  });
  return counts;
}

int min_hamming_distance(const LinearCodeState& cs) {
  const auto counts = weight_distribution(cs);
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] > 0) return static_cast<int>(w);
  return 0;
}

int code_entropy(const LinearCodeState& cs, std::span<const int> sites) {
  const int n = cs.sites();
  std::vector<bool> in_a(static_cast<std::size_t>(n), false);
  for (int s : sites) {
    if (s < 0 || s >= n) throw IndexError("site " + std::to_string(s) + " out of range");
    in_a[static_cast<std::size_t>(s)] = true;
  }
  std::vector<Index> a_cols;
  std::vector<Index> b_cols;
  for (int j = 0; j < n; ++j) (in_a[static_cast<std::size_t>(j)] ? a_cols : b_cols).push_back(j);
  const auto& g = cs.generator();
  return static_cast<int>(rank(submatrix_columns(g, a_cols)) + rank(submatrix_columns(g, b_cols)) - g.rows());
}

AmeCodeVerdict is_ame_code(const LinearCodeState& cs) {
  AmeCodeVerdict verdict;
  const int n = cs.sites();
  const int k = cs.dimension();
  if (n % 2 != 0) {
    verdict.reason = "n = " + std::to_string(n) + " is odd";
    return verdict;
  }
  if (k != n / 2) {
    verdict.reason = "k != n/2 (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")";
    return verdict;
  }
  const int half = n / 2;
  std::vector<Index> cols(static_cast<std::size_t>(half));
  for (int j = 0; j < half; ++j) cols[static_cast<std::size_t>(j)] = j;
  while (true) {
    ++verdict.cuts_checked;
    if (rank(submatrix_columns(cs.generator(), cols)) != half) {
      verdict.reason = "a balanced block has rank below n/2";
      verdict.witness.assign(cols.begin(), cols.end());
      return verdict;
    }
    // next combination in lexicographic order
    int j = half - 1;
    while (j >= 0 && cols[static_cast<std::size_t>(j)] == n - half + j) --j;
    if (j < 0) break;
    ++cols[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < half; ++t) cols[static_cast<std::size_t>(t)] = cols[static_cast<std::size_t>(t - 1)] + 1;
  }
  verdict.ame = true;
  return verdict;
}

StateVector dense_statevector(const LinearCodeState& cs) {
  const Index size = checked_power(cs.prime(), cs.sites());
  if (size > kEnumerationLimit) throw TooLarge(std::to_string(size) + " amplitudes exceed the dense limit");
  StateVector sv(cs.sites(), static_cast<int>(cs.prime()));
  const double amp = 1.0 / std::sqrt(static_cast<double>(codeword_count(cs)));
  std::vector<int> digits(static_cast<std::size_t>(cs.sites()));
  for_each_codeword(cs, [&](std::span<const GfMatrix::Elem> w) {
    Index idx = 0;
    for (auto v : w) idx = idx * cs.prime() + v;
    sv[idx] = amp;
  });
  return sv;
}

}  // namespace polyame
