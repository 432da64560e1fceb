#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyame/entropy.hpp"
#include "polyame/polytope.hpp"

namespace polyame {

enum class PartitionMode { exhaustive, sampled, structured };
std::string_view to_string(PartitionMode m);
PartitionMode parse_partition_mode(std::string_view name);

/// Binomial coefficient, saturating at INT64_MAX.
std::int64_t binomial(int n, int k);

inline constexpr std::int64_t kExhaustiveBudget = 200'000;

/// All blocks of size m in lexicographic order. Throws TooLarge when C(n, m) > budget.
std::vector<Bipartition> exhaustive_partitions(int n, int m, std::int64_t budget = kExhaustiveBudget);

/// `count` distinct blocks of size m drawn uniformly without replacement from a seeded
/// generator. Returns all C(n, m) blocks (lexicographic) when count >= C(n, m).
std::vector<Bipartition> sampled_partitions(int n, int m, std::int64_t count, std::uint64_t seed);

/// Geometrically meaningful blocks of size m: faces, unions of two or three faces (which
/// include the opposite-face pairs), edge and vertex neighbourhoods, and breadth-first
/// patches grown from each vertex. Blocks of size n - m contribute their complements.
std::vector<Bipartition> structured_partitions(const Polytope& pt, int m);

/// Union of the two faces, for every face paired with its opposite. Empty for the tetrahedron.
std::vector<Bipartition> opposite_face_pairs(const Polytope& pt);

}  // namespace polyame
