#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "polyame/catalog.hpp"
#include "polyame/contraction.hpp"
#include "polyame/reports.hpp"
#include "polyame/state_io.hpp"

using namespace polyame;

TEST_CASE("state files round-trip bit-exactly") {
  for (const StateVector& sv : {ame52_table1(), ame62(), ame43(), build_d2().state}) {
    std::stringstream buf;
    write_state(buf, sv);
    CHECK(buf.str().size() == kStateHeaderBytes + static_cast<std::size_t>(sv.size()));
    const StateVector back = read_state(buf);
    CHECK(back.sites() == sv.sites());
    CHECK(back.local_dim() == sv.local_dim());
    CHECK(back == sv);
  }
  StateVector odd(3, 2);
  odd[0] = 0.6;
  odd[5] = -0.8;
  CHECK(preferred_encoding(odd) == StateEncoding::float64);
  std::stringstream buf;
  CHECK_THROWS_AS(write_state(buf, odd, StateEncoding::int8), FormatError);
  write_state(buf, odd);
  CHECK(buf.str().size() == kStateHeaderBytes + 8 * 8);
  CHECK(read_state(buf) == odd);
}

TEST_CASE("corrupt state files are rejected") {
  std::stringstream buf;
  write_state(buf, ame52_table1());
  std::string bytes = buf.str();
  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  std::stringstream a(bad_magic);
  CHECK_THROWS_AS(read_state(a), FormatError);
  std::stringstream b(bytes.substr(0, bytes.size() - 1));
  CHECK_THROWS_AS(read_state(b), FormatError);
  std::stringstream c("");
  CHECK_THROWS_AS(read_state(c), FormatError);
}

TEST_CASE("reports are deterministic and independent of worker count") {
  const StateVector sv = build_d2().state;
  const std::vector<PlanRow> plan = {
      {3, PartitionMode::exhaustive, 0, 0, ""},
      {7, PartitionMode::sampled, 300, 11, ""},
      {8, PartitionMode::structured, 0, 0, "dodecahedron"},
  };
  SweepOptions serial;
  serial.state_id = "D2";
  serial.workers = 1;
  SweepOptions parallel = serial;
  parallel.workers = 4;
  const auto a = to_json(entropy_sweep(sv, plan, serial), false).dump();
  const auto b = to_json(entropy_sweep(sv, plan, parallel), false).dump();
  const auto c = to_json(entropy_sweep(sv, plan, serial), false).dump();
  CHECK(a == b);
  CHECK(a == c);
  const json full = to_json(entropy_sweep(sv, plan, serial));
  CHECK(full.contains("metadata"));
  CHECK(full["rows"][1]["seed"] == 11);
  CHECK(full["rows"][1]["count"] == 300);
  CHECK(full["rows"][0]["values"] == json::array({3}));
}

TEST_CASE("plans and csv") {
  const auto plan = parse_plan(json::parse(R"({"rows": [{"m": 4}, {"m": 6, "mode": "sampled", "count": 10, "seed": 3}]})"));
  REQUIRE(plan.size() == 2);
  CHECK(plan[1].mode == PartitionMode::sampled);
  CHECK(plan[1].seed == 3);
  CHECK_THROWS_AS(parse_plan(json::parse(R"({"rows": [{"m": 6, "mode": "sampled"}]})")), ConfigError);
  CHECK_THROWS_AS(parse_plan(json::parse(R"({"rows": [{"mode": "bogus", "m": 1}]})")), ConfigError);
  CHECK_THROWS_AS(parse_plan(json::parse("[]")), ConfigError);

  SweepOptions opts;
  opts.state_id = "ghz";
  const auto report = entropy_sweep(ghz(4), {{1, PartitionMode::exhaustive, 0, 0, ""}, {2, PartitionMode::exhaustive, 0, 0, ""}}, opts);
  CHECK(to_csv(report) == "|A|,2,1\nS_A(ghz),\"1\",\"1\"\n");
}

TEST_CASE("fast reference tables reproduce") {
  for (const char* id : {"table1", "ame52_flat", "ame62_signs", "table3", "rs12_11"}) {
    CAPTURE(id);
    const auto r = reproduce(id);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.diffs.empty());
  }
  CHECK_THROWS_AS(reproduce("table9"), ConfigError);
}
