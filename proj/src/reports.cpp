#include "polyame/reports.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <set>
#include <sstream>

#include "polyame/catalog.hpp"
#include "polyame/code_state.hpp"
#include "polyame/contraction.hpp"

namespace polyame {

namespace {

json value_json(const ObservedValue& v) {
  if (v.integral) return static_cast<int>(std::lround(v.value));
  return v.value;
}

std::string value_key(const ObservedValue& v) {
  if (v.integral) return std::to_string(std::lround(v.value));
  std::ostringstream s;
  s << std::setprecision(12) << v.value;
  return s.str();
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

json to_json(const EntropyRow& row) {
  json j;
  j["m"] = row.plan.m;
  j["mode"] = std::string(to_string(row.plan.mode));
  if (row.plan.mode == PartitionMode::sampled) {
    j["count"] = row.plan.count;
    j["seed"] = row.plan.seed;
  }
  if (row.plan.mode == PartitionMode::structured) j["solid"] = row.plan.solid.empty() ? "dodecahedron" : row.plan.solid;
  j["examined"] = row.examined;
  j["values"] = json::array();
  j["witnesses"] = json::object();
  j["occurrences"] = json::object();
  for (const auto& v : row.values) {
    j["values"].push_back(value_json(v));
    j["witnesses"][value_key(v)] = v.witness.one_based();
    j["occurrences"][value_key(v)] = v.occurrences;
  }
  j["all_integral"] = row.all_integral();
  j["max_integer_deviation"] = row.max_integer_deviation;
  return j;
}

json to_json(const EntropyReport& report, bool with_metadata) {
  json j;
  j["state_id"] = report.state_id;
  j["rows"] = json::array();
  for (const auto& row : report.rows) j["rows"].push_back(to_json(row));
  j["tolerances"] = {{"integer", report.integer_tolerance}, {"eig_cutoff", report.eig_cutoff}};
  j["budget"] = report.exhaustive_budget;
  if (with_metadata) j["metadata"] = {{"generated_at", utc_now()}};
  return j;
}

std::string to_csv(const EntropyReport& report) {
  std::map<int, std::set<std::string>, std::greater<>> by_m;
  for (const auto& row : report.rows)
    for (const auto& v : row.values) by_m[row.plan.m].insert(value_key(v));
  std::ostringstream out;
  out << "|A|";
  for (const auto& [m, _] : by_m) out << ',' << m;
  out << "\nS_A(" << report.state_id << ')';
  for (const auto& [m, values] : by_m) {
    std::vector<std::string> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return std::stod(a) < std::stod(b); });
    out << ",\"";
    for (std::size_t i = 0; i < sorted.size(); ++i) out << (i ? "," : "") << sorted[i];
    out << '"';
  }
  out << '\n';
  return out.str();
}

std::vector<PlanRow> parse_plan(const json& plan) {
  if (!plan.is_object() || !plan.contains("rows") || !plan["rows"].is_array()) throw ConfigError("plan needs a 'rows' array");
  std::vector<PlanRow> rows;
  for (const auto& r : plan["rows"]) {
    PlanRow row;
    try {
      row.m = r.at("m").get<int>();
      row.mode = parse_partition_mode(r.value("mode", std::string("exhaustive")));
      row.count = r.value("count", std::int64_t{0});
      row.seed = r.value("seed", std::uint64_t{0});
      row.solid = r.value("solid", std::string("dodecahedron"));
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad plan row: ") + e.what());
    }
    if (row.mode == PartitionMode::sampled && row.count <= 0) throw ConfigError("sampled plan rows need a positive count");
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------------------

bool EntropyTableCheck::all_integral() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.observed.all_integral(); });
}
bool EntropyTableCheck::within_expected() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.outside.empty(); });
}
bool EntropyTableCheck::all_witnessed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.unwitnessed.empty(); });
}

EntropyTableCheck check_entropy_table(const StateVector& sv, const reference::EntropyTableRow& expected,
                                      const EntropyTablePlan& plan, const SweepOptions& options) {
  EntropyTableCheck check{std::string(expected.state), {}};
  const Polytope pt = platonic(Solid::dodecahedron);
  for (int m = 1; m <= 10; ++m) {
    PlanRow prow{m, PartitionMode::exhaustive, 0, 0, ""};
    std::vector<Bipartition> parts;
    if (m <= plan.exhaustive_up_to) {
      parts = exhaustive_partitions(sv.sites(), m, std::numeric_limits<std::int64_t>::max());
    } else {
      prow.mode = PartitionMode::sampled;
      prow.count = plan.samples;
      prow.seed = plan.seed * 1000 + static_cast<std::uint64_t>(m);
      parts = sampled_partitions(sv.sites(), m, prow.count, prow.seed);
    }
    if (m >= plan.structured_from) {
      prow.solid = "dodecahedron";
      std::set<std::vector<int>> seen;
      for (const auto& bp : parts) seen.insert(bp.block());
      for (auto& bp : structured_partitions(pt, m))
        if (seen.insert(bp.block()).second) parts.push_back(std::move(bp));
    }
    EntropyRowCheck rc;
    rc.m = m;
    rc.expected = expected.values[static_cast<std::size_t>(m - 1)];
    rc.observed = summarize(prow, parts, entropies(sv, parts, options), options.integer_tolerance);
    const auto seen_values = rc.observed.integer_values();
    for (int v : seen_values)
      if (std::find(rc.expected.begin(), rc.expected.end(), v) == rc.expected.end()) rc.outside.push_back(v);
    for (int v : rc.expected) {
      if (std::find(seen_values.begin(), seen_values.end(), v) != seen_values.end()) continue;
      const auto found = search_witness(sv, m, v, plan.witness_budget,
                                        plan.seed * 1'000'000 + static_cast<std::uint64_t>(m) * 100 + static_cast<std::uint64_t>(v), options);
      rc.search_tried += found.tried;
      if (found.witness) rc.searched_witnesses[v] = found.witness->one_based();
      else rc.unwitnessed.push_back(v);
    }
    check.rows.push_back(std::move(rc));
  }
  return check;
}

json to_json(const EntropyTableCheck& check) {
  json j;
  j["state_id"] = check.state_id;
  j["rows"] = json::array();
  for (const auto& r : check.rows) {
    json row = to_json(r.observed);
    row["structured_included"] = !r.observed.plan.solid.empty();
    row["expected"] = r.expected;
    row["outside_expected"] = r.outside;
    row["unwitnessed"] = r.unwitnessed;
    row["witness_search_tried"] = r.search_tried;
    json found = json::object();
    for (const auto& [v, block] : r.searched_witnesses) found[std::to_string(v)] = block;
    row["searched_witnesses"] = found;
    j["rows"].push_back(row);
  }
  return j;
}

// ---------------------------------------------------------------------------------------

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
  }
  return "?";
}

json to_json(const TableResult& r) {
  return {{"table_id", r.table_id}, {"status", std::string(to_string(r.status))}, {"diffs", r.diffs}, {"details", r.details}};
}

std::vector<std::string> table_ids() {
  return {"table1", "ame52_flat", "ame62_signs", "table2", "table3", "rs12_11", "hovering"};
}

namespace {

void fail(TableResult& r, std::string diff) {
  r.status = CheckStatus::fail;
  r.diffs.push_back(std::move(diff));
}

void finding(TableResult& r, std::string diff) {
  if (r.status == CheckStatus::pass) r.status = CheckStatus::finding;
  r.diffs.push_back(std::move(diff));
}

json ame_json(const AmeVerdict& v) {
  std::vector<int> worst;
  for (int s : v.worst_block) worst.push_back(s + 1);
  return {{"pass", v.pass}, {"cuts", v.cuts}, {"max_deviation", v.max_deviation}, {"worst_block", worst}, {"worst_entropy", v.worst_entropy}};
}

TableResult reproduce_table1() {
  TableResult r{"table1", CheckStatus::pass, {}, json::object()};
  const StateVector sv = ame52_table1();
  const double magnitude = 1.0 / std::sqrt(32.0);
  for (const auto& row : reference::ame52_sign_table()) {
    int index = 0;
    for (char c : row.bits) index = index * 2 + (c - '0');
    if (index != row.index) fail(r, "row " + std::to_string(row.index) + ": bits " + std::string(row.bits) + " encode " + std::to_string(index));
    const double expected = (row.sign == '+' ? 1.0 : -1.0) * magnitude;
    if (sv[row.index] != expected)
      fail(r, "row " + std::to_string(row.index) + ": amplitude " + std::to_string(sv[row.index]) + " != " + row.sign + "1/sqrt(32)");
  }
  const auto verdict = verify_ame(sv);
  if (!verdict.pass) fail(r, "five-qubit table state is not AME; worst deviation " + std::to_string(verdict.max_deviation));
  r.details = {{"rows", 32}, {"ame", ame_json(verdict)}};
  return r;
}

TableResult reproduce_ame52_flat() {
  TableResult r{"ame52_flat", CheckStatus::pass, {}, json::object()};
  const auto flat = reference::ame52_flat_coefficients();
  const auto table = reference::ame52_sign_table();
  int minus_flat = 0;
  int minus_table = 0;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const int t = table[i].sign == '+' ? 1 : -1;
    minus_flat += flat[i] < 0;
    minus_table += t < 0;
    if (flat[i] != t) fail(r, "coefficient " + std::to_string(i) + ": list " + std::to_string(flat[i]) + " vs table " + std::to_string(t));
  }
  if (!(ame52_flat() == ame52_table1())) fail(r, "flat-list state differs from the table state");
  const auto verdict = verify_ame(ame52_flat());
  if (!verdict.pass) fail(r, "flat-list state is not AME");
  r.details = {{"minus_signs_list", minus_flat}, {"minus_signs_table", minus_table}, {"ame", ame_json(verdict)}};
  return r;
}

TableResult reproduce_ame62() {
  TableResult r{"ame62_signs", CheckStatus::pass, {}, json::object()};
  const auto verdict = verify_ame(ame62());
  if (!verdict.pass) {
    std::vector<int> worst;
    for (int s : verdict.worst_block) worst.push_back(s + 1);
    finding(r, "reference six-qubit sign list is not AME: block {" + join(worst) + "} has entropy " + std::to_string(verdict.worst_entropy));
  }
  r.details = {{"ame", ame_json(verdict)}};
  return r;
}

TableResult reproduce_table2(const ReproduceOptions& o) {
  TableResult r{"table2", CheckStatus::pass, {}, json::object()};
  SweepOptions so;
  so.workers = o.workers;
  EntropyTablePlan d1_plan{3, 7, o.samples, o.seed, o.witness_budget};
  EntropyTablePlan d2_plan{5, 7, o.samples, o.seed, o.witness_budget};
  json details = json::object();
  for (auto [built, plan, ref] : {std::tuple{build_d1(), d1_plan, &reference::d1_entropy_row()},
                                  std::tuple{build_d2(), d2_plan, &reference::d2_entropy_row()}}) {
    so.state_id = built.id;
    const auto check = check_entropy_table(built.state, *ref, plan, so);
    for (const auto& row : check.rows) {
      if (!row.observed.all_integral())
        fail(r, built.id + " |A|=" + std::to_string(row.m) + ": non-integer entropy, max deviation " + std::to_string(row.observed.max_integer_deviation));
      if (!row.outside.empty())
        fail(r, built.id + " |A|=" + std::to_string(row.m) + ": observed {" + join(row.outside) + "} outside expected {" + join(row.expected) + "}");
      if (!row.unwitnessed.empty())
        finding(r, built.id + " |A|=" + std::to_string(row.m) + ": expected {" + join(row.unwitnessed) + "} never observed");
    }
    details[built.id] = to_json(check);
    details[built.id]["orientations"] = built.orientations;
    details[built.id]["tensor"] = built.tensor;
  }
  r.details = details;
  return r;
}

TableResult reproduce_table3() {
  TableResult r{"table3", CheckStatus::pass, {}, json::object()};
  const auto computed = solid_code_table();
  const auto rows = reference::solid_code_rows();
  if (computed.size() != rows.size()) fail(r, "entry count " + std::to_string(computed.size()) + " != " + std::to_string(rows.size()));
  json entries = json::array();
  for (std::size_t i = 0; i < std::min(computed.size(), rows.size()); ++i) {
    const auto& c = computed[i];
    const auto& e = rows[i];
    const std::string where = std::string(to_string(e.solid)) + " " + std::string(to_string(e.feature));
    if (c.solid != e.solid || c.feature != e.feature) fail(r, "entry " + std::to_string(i) + " order mismatch at " + where);
    if (c.n != e.count) fail(r, where + ": count " + std::to_string(c.n) + " != " + std::to_string(e.count));
    if (!is_prime(static_cast<std::uint64_t>(c.p)) || c.n != c.p + 1) fail(r, where + ": " + std::to_string(c.n) + " is not a prime plus one");
    if (c.ame_label() != e.label) fail(r, where + ": label " + c.ame_label() + " != " + std::string(e.label));
    entries.push_back({{"solid", to_string(c.solid)}, {"feature", to_string(c.feature)}, {"n", c.n}, {"p", c.p}, {"label", c.ame_label()}});
  }
  r.details = {{"entries", entries}};
  return r;
}

TableResult reproduce_rs12_11() {
  TableResult r{"rs12_11", CheckStatus::pass, {}, json::object()};
  const GfMatrix g = rs_generator(11);
  const auto expected = reference::rs11_generator();
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (static_cast<int>(g(i, j)) != expected[static_cast<std::size_t>(i * 12 + j)])
        fail(r, "generator entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + std::to_string(g(i, j)) +
                    ", expected " + std::to_string(expected[static_cast<std::size_t>(i * 12 + j)]));
  const auto cs = reed_solomon_state(11);
  const auto count = codeword_count(cs);
  const int distance = min_hamming_distance(cs);
  const auto ame = is_ame_code(cs);
  if (count != 1771561) fail(r, "codeword count " + std::to_string(count) + " != 11^6");
  if (distance != reference::kRs11MinDistance) fail(r, "minimum distance " + std::to_string(distance) + " != 7");
  if (!ame.ame) fail(r, "not AME: " + ame.reason);
  if (distance != cs.sites() - cs.dimension() + 1) fail(r, "Singleton bound not met with equality");
  r.details = {{"p", 11}, {"n", cs.sites()}, {"k", cs.dimension()}, {"codewords", count}, {"d_H", distance},
               {"is_ame", ame.ame}, {"balanced_cuts", ame.cuts_checked}};
  return r;
}

TableResult reproduce_hovering(const ReproduceOptions& o) {
  TableResult r{"hovering", CheckStatus::pass, {}, json::object()};
  const auto built = build_hovering(o.hover_position);
  std::vector<int> forward(12);
  std::iota(forward.begin(), forward.end(), 0);
  std::vector<int> backward(forward.rbegin(), forward.rend());
  const auto by_forward = build_hovering(o.hover_position, {}, HoveringMethod::elimination, forward).state;
  const auto by_backward = build_hovering(o.hover_position, {}, HoveringMethod::elimination, backward).state;
  const double order_gap = std::max((by_forward.amplitudes() - built.state.amplitudes()).cwiseAbs().maxCoeff(),
                                    (by_backward.amplitudes() - built.state.amplitudes()).cwiseAbs().maxCoeff());
  if (order_gap > 1e-12) fail(r, "contraction orders disagree by " + std::to_string(order_gap));

  SweepOptions so;
  so.workers = o.workers;
  so.state_id = built.id;
  const auto parts = exhaustive_partitions(12, 6);
  const auto row = summarize({6, PartitionMode::exhaustive, 0, 0, ""}, parts, entropies(built.state, parts, so), so.integer_tolerance);
  if (!row.all_integral()) fail(r, "non-integer 6|6 entropy, max deviation " + std::to_string(row.max_integer_deviation));
  const auto values = row.integer_values();
  const double lo = row.values.front().value;
  const double hi = row.values.back().value;
  if (lo < reference::kHoveringEntropyMin - 1e-9 || hi > reference::kHoveringEntropyMax + 1e-9)
    fail(r, "6|6 entropies span [" + std::to_string(lo) + ", " + std::to_string(hi) + "], outside [4, 6]");
  for (int endpoint : {reference::kHoveringEntropyMin, reference::kHoveringEntropyMax})
    if (std::find(values.begin(), values.end(), endpoint) == values.end())
      finding(r, "endpoint " + std::to_string(endpoint) + " not attained");
  r.details = {{"hover_position", o.hover_position}, {"orientations", built.orientations}, {"order_gap", order_gap},
               {"entropies", to_json(row)}};
  return r;
}

}  // namespace

TableResult reproduce(std::string_view table_id, const ReproduceOptions& options) {
  if (table_id == "table1") return reproduce_table1();
  if (table_id == "ame52_flat") return reproduce_ame52_flat();
  if (table_id == "ame62_signs") return reproduce_ame62();
  if (table_id == "table2") return reproduce_table2(options);
  if (table_id == "table3") return reproduce_table3();
  if (table_id == "rs12_11") return reproduce_rs12_11();
  if (table_id == "hovering") return reproduce_hovering(options);
  throw ConfigError("unknown table id '" + std::string(table_id) + "'");
}

}  // namespace polyame
