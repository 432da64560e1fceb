#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyame/entropy.hpp"
#include "polyame/partitions.hpp"

namespace polyame {

struct PlanRow {
  int m = 1;
  PartitionMode mode = PartitionMode::exhaustive;
  std::int64_t count = 0;   // sampled mode
  std::uint64_t seed = 0;   // sampled mode
  std::string solid;        // structured mode
};

struct ObservedValue {
  double value = 0.0;       // snapped to the integer when within the integer tolerance
  bool integral = true;
  Bipartition witness;      // first partition, in enumeration order, that produced the value
  std::int64_t occurrences = 0;
};

struct EntropyRow {
  PlanRow plan;
  std::int64_t examined = 0;
  std::vector<ObservedValue> values;  // ascending
  double max_integer_deviation = 0.0;

  bool all_integral() const;
  std::vector<int> integer_values() const;
};

struct EntropyReport {
  std::string state_id;
  std::vector<EntropyRow> rows;
  double integer_tolerance = 1e-9;
  double eig_cutoff = 1e-12;
  std::int64_t exhaustive_budget = kExhaustiveBudget;
};

struct SweepOptions {
  std::string state_id;
  double integer_tolerance = 1e-9;
  EntropyOptions entropy;
  std::int64_t exhaustive_budget = kExhaustiveBudget;
  /// 0 = POLYAME_WORKERS from the environment, else hardware concurrency.
  int workers = 0;
};

int resolve_workers(int requested);

/// Entropies of every partition, computed in parallel; result i belongs to partitions[i].
std::vector<double> entropies(const StateVector& sv, const std::vector<Bipartition>& partitions,
                              const SweepOptions& options = {});

std::vector<Bipartition> plan_partitions(const PlanRow& row, int sites, std::int64_t exhaustive_budget = kExhaustiveBudget);

/// Folds entropies into a row: distinct values, first witnesses, integrality.
EntropyRow summarize(const PlanRow& plan, const std::vector<Bipartition>& partitions, const std::vector<double>& values,
                     double integer_tolerance);

EntropyReport entropy_sweep(const StateVector& sv, const std::vector<PlanRow>& plan, const SweepOptions& options = {});

/// Keeps drawing fresh sampled partitions (seeded from `seed`) until one has entropy within
/// the tolerance of `target` or `budget` partitions have been tried.
struct WitnessSearch {
  std::optional<Bipartition> witness;
  std::int64_t tried = 0;
};
WitnessSearch search_witness(const StateVector& sv, int m, double target, std::int64_t budget, std::uint64_t seed,
                             const SweepOptions& options = {});

}  // namespace polyame
