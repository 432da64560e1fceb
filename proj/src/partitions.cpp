#include "polyame/partitions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "polyame/rng.hpp"

namespace polyame {

std::string_view to_string(PartitionMode m) {
  switch (m) {
    case PartitionMode::exhaustive: return "exhaustive";
    case PartitionMode::sampled: return "sampled";
    case PartitionMode::structured: return "structured";
  }
  return "?";
}

PartitionMode parse_partition_mode(std::string_view name) {
  if (name == "exhaustive") return PartitionMode::exhaustive;
  if (name == "sampled" || name == "sample") return PartitionMode::sampled;
  if (name == "structured") return PartitionMode::structured;
  throw ConfigError("unknown partition mode '" + std::string(name) + "'");
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t num = n - k + i;
    if (out > std::numeric_limits<std::int64_t>::max() / num) return std::numeric_limits<std::int64_t>::max();
    out = out * num / i;
  }
  return out;
}

std::vector<Bipartition> exhaustive_partitions(int n, int m, std::int64_t budget) {
  const auto total = binomial(n, m);
  if (total > budget)
    throw TooLarge("C(" + std::to_string(n) + "," + std::to_string(m) + ") = " + std::to_string(total) +
                   " partitions exceed the budget of " + std::to_string(budget) + "; use sampling");
  std::vector<Bipartition> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_subset(n, m, [&](const std::vector<int>& s) { out.emplace_back(n, s); });
  return out;
}

std::vector<Bipartition> sampled_partitions(int n, int m, std::int64_t count, std::uint64_t seed) {
  if (m < 1 || m > n - 1) throw ShapeError("block size out of range");
  if (count >= binomial(n, m)) return exhaustive_partitions(n, m, std::numeric_limits<std::int64_t>::max());
  Rng rng(seed);
  std::set<std::vector<int>> seen;
  std::vector<Bipartition> out;
  std::vector<int> pool(static_cast<std::size_t>(n));
  while (static_cast<std::int64_t>(out.size()) < count) {
    for (int j = 0; j < n; ++j) pool[static_cast<std::size_t>(j)] = j;
    // partial Fisher-Yates: the first m entries become a uniform m-subset
    for (int j = 0; j < m; ++j) {
      const auto pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j)));
      std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
    }
    std::vector<int> block(pool.begin(), pool.begin() + m);
    std::sort(block.begin(), block.end());
    if (seen.insert(block).second) out.emplace_back(n, std::move(block));
  }
  return out;
}

namespace {

std::vector<int> face_union(const Polytope& pt, std::initializer_list<int> faces) {
  std::set<int> s;
  for (int f : faces) s.insert(pt.face(f).begin(), pt.face(f).end());
  return {s.begin(), s.end()};
}

std::vector<int> bfs_patch(const Polytope& pt, int start, int size) {
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(pt.vertex_count()), false);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!queue.empty() && static_cast<int>(order.size()) < size) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : pt.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      queue.push_back(w);
    }
  }
  return order;
}

}  // namespace

std::vector<Bipartition> opposite_face_pairs(const Polytope& pt) {
  std::vector<Bipartition> out;
  for (int f = 0; f < pt.face_count(); ++f) {
    int g;
    try {
      g = opposite_face(pt, f);
    } catch (const NoOppositeFace&) {
      return {};
    }
    if (f < g) out.emplace_back(pt.vertex_count(), face_union(pt, {f, g}));
  }
  return out;
}

std::vector<Bipartition> structured_partitions(const Polytope& pt, int m) {
  const int n = pt.vertex_count();
  if (m < 1 || m > n - 1) throw ShapeError("block size out of range");
  std::vector<std::vector<int>> candidates;
  const int nf = pt.face_count();
  for (int a = 0; a < nf; ++a) candidates.push_back(face_union(pt, {a}));
  for (const auto& bp : opposite_face_pairs(pt)) candidates.push_back(bp.block());
  for (int a = 0; a < nf; ++a)
    for (int b = a + 1; b < nf; ++b) candidates.push_back(face_union(pt, {a, b}));
  for (int a = 0; a < nf; ++a)
    for (int b = a + 1; b < nf; ++b)
      for (int c = b + 1; c < nf; ++c) candidates.push_back(face_union(pt, {a, b, c}));
  for (const auto& [u, v] : pt.edges()) {
    std::set<int> s{u, v};
    for (int w : pt.neighbors(u)) s.insert(w);
    for (int w : pt.neighbors(v)) s.insert(w);
    candidates.emplace_back(s.begin(), s.end());
  }
  for (int v = 0; v < n; ++v) {
    std::set<int> s{v};
    for (int w : pt.neighbors(v)) s.insert(w);
    candidates.emplace_back(s.begin(), s.end());
  }
  for (int v = 0; v < n; ++v) candidates.push_back(bfs_patch(pt, v, m));

  std::set<std::vector<int>> seen;
  std::vector<Bipartition> out;
  for (auto& c : candidates) {
    std::sort(c.begin(), c.end());
    std::vector<int> block;
    if (static_cast<int>(c.size()) == m) block = c;
    else if (static_cast<int>(c.size()) == n - m) block = Bipartition(n, c).complement();
    else continue;
    if (seen.insert(block).second) out.emplace_back(n, std::move(block));
  }
  return out;
}

}  // namespace polyame
