#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "polyame/catalog.hpp"
#include "polyame/code_state.hpp"
#include "polyame/contraction.hpp"
#include "polyame/entropy.hpp"
#include "polyame/partitions.hpp"
#include "polyame/reports.hpp"
#include "polyame/state_io.hpp"

using namespace polyame;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

std::vector<int> load_orientations(const std::string& path, std::optional<std::uint64_t> seed) {
  const Polytope pt = platonic(Solid::dodecahedron);
  if (!path.empty() && seed) throw ConfigError("--orientations and --orientation-seed are exclusive");
  if (seed) return random_orientations(pt, *seed);
  if (path.empty()) return {};
  const json j = read_json(path);
  if (!j.is_array()) throw ConfigError("orientation file must hold a JSON array of per-face offsets");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ConfigError("orientation offsets must be integers");
    out.push_back(x.get<int>());
  }
  if (static_cast<int>(out.size()) != pt.face_count()) throw ConfigError("need one orientation per face (12)");
  for (int o : out)
    if (o < 0 || o >= 5) throw ConfigError("orientation offsets must lie in 0..4");
  return out;
}

StateVector load_state(const std::string& ref) {
  if (fs::exists(ref)) return read_state(fs::path(ref));
  return catalog_state(ref);
}

json polytope_json(const Polytope& pt) {
  json faces = json::array();
  for (const auto& f : pt.faces()) {
    json face = json::array();
    for (int v : f) face.push_back(v + 1);
    faces.push_back(face);
  }
  json opposite = json::array();
  for (int f = 0; f < pt.face_count(); ++f) {
    try {
      const int g = opposite_face(pt, f);
      if (f < g) opposite.push_back({f + 1, g + 1});
    } catch (const NoOppositeFace&) {
    }
  }
  const std::string problems = check_invariants(pt);
  return {{"name", pt.name()}, {"V", pt.vertex_count()}, {"E", pt.edge_count()}, {"F", pt.face_count()},
          {"faces", faces}, {"opposite_faces", opposite}, {"invariants", problems.empty() ? "ok" : problems}};
}

json state_summary(const PlatonicState& ps, const std::string& out) {
  json j = {{"id", ps.id}, {"sites", ps.state.sites()}, {"local_dim", ps.state.local_dim()},
            {"tensor", ps.tensor}, {"orientations", ps.orientations}, {"norm", ps.state.norm()},
            {"support", ps.state.support_size()}};
  if (ps.hover_position) j["hover_position"] = ps.hover_position;
  if (!out.empty()) j["out"] = out;
  return j;
}

int ame_code_report(std::uint32_t p, const std::string& report_path) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const auto cs = reed_solomon_state(p);
  const auto& g = cs.generator();
  json gen = json::array();
  for (Index i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
    gen.push_back(row);
  }
  const auto verdict = is_ame_code(cs);
  json j = {{"p", p}, {"n", cs.sites()}, {"k", cs.dimension()}, {"generator", gen}, {"is_ame", verdict.ame},
            {"balanced_cuts", verdict.cuts_checked}};
  if (!verdict.ame) j["reason"] = verdict.reason;
  try {
    j["d_H"] = min_hamming_distance(cs);
    j["codewords"] = codeword_count(cs);
  } catch (const TooLarge& e) {
    j["d_H"] = nullptr;
    j["skipped"] = e.what();
  }
  j["singleton_bound"] = cs.sites() - cs.dimension() + 1;
  emit(j.dump(2) + "\n", report_path);
  return verdict.ame ? 0 : kExitFail;
}

int d2_code_report(bool with_entropies, const std::string& out) {
  const Polytope pt = platonic(Solid::dodecahedron);
  const auto cs = LinearCodeState::from_parity_checks(face_parity_matrix(pt));
  json j = {{"n", cs.sites()}, {"k", cs.dimension()}, {"d_H", min_hamming_distance(cs)},
            {"weight_distribution", weight_distribution(cs)}};
  if (with_entropies) {
    json rows = json::array();
    for (int m = 1; m <= cs.sites() / 2; ++m) {
      std::map<int, std::int64_t> counts;
      for_each_subset(cs.sites(), m, [&](std::span<const int> block) { ++counts[code_entropy(cs, block)]; });
      json c = json::object();
      for (auto [v, n] : counts) c[std::to_string(v)] = n;
      rows.push_back({{"m", m}, {"mode", "exhaustive"}, {"counts", c}});
    }
    j["entropies"] = rows;
  }
  emit(j.dump(2) + "\n", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Platonic AME tensor-network states"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* poly = app.add_subcommand("polytope", "Platonic solid data");
  auto* poly_show = poly->add_subcommand("show", "faces and invariants as JSON");
  std::string solid_name;
  poly_show->add_option("name", solid_name)->required();
  poly->require_subcommand(1);
  poly_show->callback([&] { std::cout << polytope_json(platonic(solid_name)).dump(2) << "\n"; });

  auto* ame = app.add_subcommand("ame", "catalogue states");
  ame->require_subcommand(1);
  std::string ame_name;
  auto* ame_dump = ame->add_subcommand("dump", "index, digits and sign of every amplitude");
  ame_dump->add_option("name", ame_name)->required();
  ame_dump->callback([&] { std::cout << sign_table(catalog_state(ame_name)); });
  auto* ame_verify = ame->add_subcommand("verify", "check every balanced cut is maximally mixed");
  std::string verify_ref;
  ame_verify->add_option("state", verify_ref, "catalogue name or state file")->required();
  ame_verify->callback([&] {
    const auto v = verify_ame(load_state(verify_ref));
    std::vector<int> worst;
    for (int s : v.worst_block) worst.push_back(s + 1);
    std::cout << json{{"ame", v.pass}, {"cuts", v.cuts}, {"max_deviation", v.max_deviation}, {"worst_block", worst},
                      {"worst_entropy", v.worst_entropy}}.dump(2) << "\n";
    if (!v.pass) exit_code = kExitFail;
  });

  auto* build = app.add_subcommand("build", "contract a platonic state");
  std::string which, orient_file, variant = "table1", build_out;
  std::optional<std::uint64_t> orient_seed;
  int hover_pos = 6;
  build->add_option("state", which, "d1, d2 or hovering")->required()->check(CLI::IsMember({"d1", "d2", "hovering"}));
  build->add_option("--orientations", orient_file, "JSON array of 12 face offsets")->check(CLI::ExistingFile);
  build->add_option("--orientation-seed", orient_seed, "random face offsets");
  build->add_option("--variant", variant, "five-qubit tensor for d1: table1 or rotinv");
  build->add_option("--hover-pos", hover_pos, "hovering site inside the six-qubit cell")->check(CLI::Range(1, 6));
  build->add_option("--out", build_out, "state file");
  build->callback([&] {
    const auto orientations = load_orientations(orient_file, orient_seed);
    const PlatonicState ps = which == "d1"   ? build_d1(orientations, parse_ame52_variant(variant))
                             : which == "d2" ? build_d2()
                                             : build_hovering(hover_pos, orientations);
    if (!build_out.empty()) write_state(fs::path(build_out), ps.state);
    std::cout << state_summary(ps, build_out).dump(2) << "\n";
  });

  auto* analyze = app.add_subcommand("analyze", "entanglement entropy sweep");
  std::string state_path, plan_path, analyze_out, csv_out, state_id, solid = "dodecahedron";
  std::vector<int> sizes;
  std::int64_t samples = 0, budget = kExhaustiveBudget;
  std::uint64_t seed = 1;
  bool exhaustive = false, structured = false, no_metadata = false;
  int workers = 0;
  analyze->add_option("--state", state_path, "state file or catalogue name")->required();
  analyze->add_option("--plan", plan_path, "plan JSON")->check(CLI::ExistingFile);
  analyze->add_option("--m", sizes, "block sizes");
  analyze->add_option("--sample", samples, "partitions per block size");
  analyze->add_option("--seed", seed);
  analyze->add_flag("--exhaustive", exhaustive);
  analyze->add_flag("--structured", structured);
  analyze->add_option("--solid", solid, "solid for structured partitions");
  analyze->add_option("--budget", budget, "largest exhaustive enumeration");
  analyze->add_option("--workers", workers);
  analyze->add_option("--id", state_id, "state id in the report");
  analyze->add_option("--out", analyze_out, "report JSON");
  analyze->add_option("--csv", csv_out, "table CSV");
  analyze->add_flag("--no-metadata", no_metadata, "omit the timestamp block");
  analyze->callback([&] {
    const StateVector sv = load_state(state_path);
    std::vector<PlanRow> plan;
    if (!plan_path.empty()) {
      if (!sizes.empty()) throw ConfigError("--plan and --m are exclusive");
      plan = parse_plan(read_json(plan_path));
    } else {
      if (sizes.empty()) throw ConfigError("need --plan or --m");
      const int modes = (samples > 0) + exhaustive + structured;
      if (modes > 1) throw ConfigError("pick one of --sample, --exhaustive, --structured");
      for (int m : sizes) {
        PlanRow row{m, PartitionMode::exhaustive, 0, 0, ""};
        if (samples > 0) {
          row.mode = PartitionMode::sampled;
          row.count = samples;
          row.seed = seed;
        } else if (structured) {
          row.mode = PartitionMode::structured;
          row.solid = solid;
        }
        plan.push_back(row);
      }
    }
    SweepOptions opts;
    opts.state_id = state_id.empty() ? fs::path(state_path).stem().string() : state_id;
    opts.exhaustive_budget = budget;
    opts.workers = workers;
    const auto report = entropy_sweep(sv, plan, opts);
    emit(to_json(report, !no_metadata).dump(2) + "\n", analyze_out);
    if (!csv_out.empty()) emit(to_csv(report), csv_out);
  });

  auto* code = app.add_subcommand("code", "code states");
  code->require_subcommand(1);
  auto* code_rs = code->add_subcommand("rs", "extended Reed-Solomon code over GF(p)");
  std::uint32_t p = 0;
  std::string report_path;
  code_rs->add_option("--p", p)->required();
  code_rs->add_option("--report", report_path, "report JSON");
  code_rs->callback([&] { exit_code = ame_code_report(p, report_path); });
  auto* code_d2 = code->add_subcommand("d2", "face-parity code of the dodecahedron");
  bool with_entropies = false;
  std::string d2_out;
  code_d2->add_flag("--entropies", with_entropies, "exhaustive rank-formula entropies");
  code_d2->add_option("--out", d2_out);
  code_d2->callback([&] { exit_code = d2_code_report(with_entropies, d2_out); });

  auto* repro = app.add_subcommand("reproduce", "rebuild and diff a reference table");
  std::vector<std::string> ids;
  bool all = false;
  ReproduceOptions ropts;
  std::string repro_out;
  repro->add_option("id", ids, "table id");
  repro->add_flag("--all", all);
  repro->add_option("--samples", ropts.samples);
  repro->add_option("--seed", ropts.seed);
  repro->add_option("--witness-budget", ropts.witness_budget);
  repro->add_option("--hover-pos", ropts.hover_position)->check(CLI::Range(1, 6));
  repro->add_option("--workers", ropts.workers);
  repro->add_option("--out", repro_out);
  repro->callback([&] {
    if (all) ids = table_ids();
    if (ids.empty()) throw ConfigError("need a table id or --all; ids: table1 ame52_flat ame62_signs table2 table3 rs12_11 hovering");
    json results = json::array();
    for (const auto& id : ids) {
      const auto r = reproduce(id, ropts);
      std::cerr << id << ": " << to_string(r.status) << "\n";
      for (const auto& d : r.diffs) std::cerr << "  " << d << "\n";
      if (r.status == CheckStatus::fail) exit_code = kExitFail;
      results.push_back(to_json(r));
    }
    emit(results.dump(2) + "\n", repro_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return exit_code;
}
