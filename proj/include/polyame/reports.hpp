#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyame/reference_data.hpp"
#include "polyame/sweep.hpp"

namespace polyame {

using json = nlohmann::ordered_json;

/// Report JSON: {state_id, rows: [...], tolerances, budget, metadata}. Everything except
/// `metadata` is a deterministic function of the inputs.
json to_json(const EntropyReport& report, bool with_metadata = true);
json to_json(const EntropyRow& row);
/// Table layout: a header row of block sizes (descending) and one row of value sets.
std::string to_csv(const EntropyReport& report);

/// Plan file: {"rows": [{"m": 6, "mode": "sampled", "count": 2000, "seed": 1}, ...]}.
std::vector<PlanRow> parse_plan(const json& plan);

// ---------------------------------------------------------------------------------------
// Entropy table reproduction

struct EntropyTablePlan {
  int exhaustive_up_to = 3;    // exhaustive for m <= this, sampled above
  int structured_from = 7;     // structured partitions added for m >= this
  std::int64_t samples = 2000;
  std::uint64_t seed = 1;
  std::int64_t witness_budget = 10'000;
};

struct EntropyRowCheck {
  int m = 0;
  std::vector<int> expected;
  EntropyRow observed;
  std::vector<int> outside;      // observed but not expected
  std::vector<int> unwitnessed;  // expected but never observed, even after the witness search
  std::map<int, std::vector<int>> searched_witnesses;  // value -> 1-based block found by the search
  std::int64_t search_tried = 0;
};

struct EntropyTableCheck {
  std::string state_id;
  std::vector<EntropyRowCheck> rows;
  bool all_integral() const;
  bool within_expected() const;
  bool all_witnessed() const;
};

EntropyTableCheck check_entropy_table(const StateVector& sv, const reference::EntropyTableRow& expected,
                                      const EntropyTablePlan& plan, const SweepOptions& options = {});
json to_json(const EntropyTableCheck& check);

// ---------------------------------------------------------------------------------------
// Reference-table reproduction

enum class CheckStatus { pass, fail, finding };
std::string_view to_string(CheckStatus s);

struct TableResult {
  std::string table_id;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> diffs;
  json details = json::object();
};
json to_json(const TableResult& r);

struct ReproduceOptions {
  std::int64_t samples = 2000;
  std::uint64_t seed = 1;
  std::int64_t witness_budget = 10'000;
  int hover_position = 6;
  int workers = 0;
};

/// table1, ame52_flat, ame62_signs, table2, table3, rs12_11, hovering.
std::vector<std::string> table_ids();
/// Throws ConfigError for an unknown id.
TableResult reproduce(std::string_view table_id, const ReproduceOptions& options = {});

}  // namespace polyame
