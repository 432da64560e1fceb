#include "polyame/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <algorithm>
#include <map>
#include <thread>

#include "polyame/polytope.hpp"

namespace polyame {

bool EntropyRow::all_integral() const {
  return std::all_of(values.begin(), values.end(), [](const ObservedValue& v) { return v.integral; });
}

std::vector<int> EntropyRow::integer_values() const {
  std::vector<int> out;
  for (const auto& v : values)
    if (v.integral) out.push_back(static_cast<int>(std::lround(v.value)));
  return out;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("POLYAME_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> entropies(const StateVector& sv, const std::vector<Bipartition>& partitions, const SweepOptions& options) {
  std::vector<double> out(partitions.size(), 0.0);
  const int workers = std::min<int>(resolve_workers(options.workers), std::max<int>(1, static_cast<int>(partitions.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < partitions.size(); ++i) out[i] = entropy(sv, partitions[i], options.entropy);
    return out;
  }
  // Strided split; each slot is written by exactly one worker.
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < partitions.size(); i += static_cast<std::size_t>(workers))
          out[i] = entropy(sv, partitions[i], options.entropy);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<Bipartition> plan_partitions(const PlanRow& row, int sites, std::int64_t exhaustive_budget) {
  switch (row.mode) {
    case PartitionMode::exhaustive: return exhaustive_partitions(sites, row.m, exhaustive_budget);
    case PartitionMode::sampled: return sampled_partitions(sites, row.m, row.count, row.seed);
    case PartitionMode::structured: {
      const Polytope pt = platonic(row.solid.empty() ? std::string_view("dodecahedron") : std::string_view(row.solid));
      if (pt.vertex_count() != sites) throw ConfigError("structured plan solid has " + std::to_string(pt.vertex_count()) + " vertices, state has " + std::to_string(sites) + " sites");
      return structured_partitions(pt, row.m);
    }
  }
  return {};
}

EntropyRow summarize(const PlanRow& plan, const std::vector<Bipartition>& partitions, const std::vector<double>& values,
                     double integer_tolerance) {
  EntropyRow row{plan, static_cast<std::int64_t>(partitions.size()), {}, 0.0};
  std::map<double, std::size_t> slot;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const double raw = values[i];
    const double nearest = std::round(raw);
    const double dev = std::abs(raw - nearest);
    row.max_integer_deviation = std::max(row.max_integer_deviation, dev);
    const bool integral = dev <= integer_tolerance;
    // non-integral values are grouped on a 1e-9 grid
    const double key = integral ? nearest : std::round(raw * 1e9) / 1e9;
    auto [it, fresh] = slot.try_emplace(key, row.values.size());
    if (fresh) row.values.push_back({key, integral, partitions[i], 0});
    ++row.values[it->second].occurrences;
  }
  std::sort(row.values.begin(), row.values.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return row;
}

EntropyReport entropy_sweep(const StateVector& sv, const std::vector<PlanRow>& plan, const SweepOptions& options) {
  EntropyReport report{options.state_id, {}, options.integer_tolerance, options.entropy.eig_cutoff, options.exhaustive_budget};
  for (const auto& p : plan) {
    const auto parts = plan_partitions(p, sv.sites(), options.exhaustive_budget);
    report.rows.push_back(summarize(p, parts, entropies(sv, parts, options), options.integer_tolerance));
  }
  return report;
}

WitnessSearch search_witness(const StateVector& sv, int m, double target, std::int64_t budget, std::uint64_t seed,
                             const SweepOptions& options) {
  WitnessSearch result;
  constexpr std::int64_t kBatch = 256;
  std::uint64_t batch_seed = seed;
  std::set<std::vector<int>> seen;
  while (result.tried < budget) {
    const auto draw = sampled_partitions(sv.sites(), m, std::min(kBatch, budget - result.tried), batch_seed++);
    std::vector<Bipartition> fresh;
    for (const auto& bp : draw)
      if (seen.insert(bp.block()).second) fresh.push_back(bp);
    if (fresh.empty()) break;  // every block has been seen
    const auto values = entropies(sv, fresh, options);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      ++result.tried;
      if (std::abs(values[i] - target) <= options.integer_tolerance) {
        result.witness = fresh[i];
        return result;
      }
    }
  }
  return result;
}

}  // namespace polyame
