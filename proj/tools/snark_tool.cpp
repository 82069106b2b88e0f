// Command-line front end: catalog generation, per-graph analysis, the
// conjecture registry, and fixture verification.
//
// Exit codes: 0 holds/complete, 1 counterexample found, 2 resource limit,
// 3 usage error.  SNARK_WORKERS controls the analysis worker pool.

#include <filesystem>
#include <set>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "snark/conjectures.hpp"

using namespace snark;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitUsage = 3;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Completed-scope detection: re-running an identical completed request is a
// no-op that leaves the output byte-identical.
bool scope_already_complete(const std::string& path, const json& scope) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  if (last.empty()) return false;
  try {
    json rec = json::parse(last);
    return rec.value("complete", false) && rec.value("scope", json()) == scope;
  } catch (...) {
    return false;
  }
}

int run_generate(int n, const std::string& cls_name, int shards, int shard,
                 const std::string& output, const std::string& parents_path, bool long_tier,
                 const std::string& work_dir) {
  CatalogClass cls;
  if (!catalog_class_from_name(cls_name, cls)) {
    std::cerr << "unknown class: " << cls_name << "\n";
    return kExitUsage;
  }
  if (n % 2 || n < 4) {
    std::cerr << "order must be even and at least 4\n";
    return kExitUsage;
  }
  if (n > 24 && !long_tier) {
    std::cerr << "orders above 24 sit behind --tier long\n";
    return kExitUsage;
  }
  GenerationSpec spec;
  spec.target_order = n;
  spec.cls = cls;
  spec.shard_count = shards;
  spec.shard_index = shard;
  spec.work_dir = work_dir;

  auto t0 = std::chrono::steady_clock::now();
  GenerationResult res;
  if (!parents_path.empty()) {
    // externally supplied parent catalog (graph6, order n-2)
    ParentLevel level;
    level.order = n - 2;
    for (const auto& g : read_graph6_file(parents_path)) {
      if (g.order() != n - 2) {
        std::cerr << "parent catalog order mismatch\n";
        return kExitUsage;
      }
      level.append(g, canonical_hash(g));
    }
    res = final_expansion(level, spec);
  } else {
    res = generate_catalog(
        spec, [](const std::string& msg) { std::cerr << msg << "\n"; },
        worker_count_from_env());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (!output.empty()) write_graph6_file(output, res.graphs);
  else
    for (const auto& g : res.graphs) std::cout << graph6_encode(g) << "\n";

  json manifest;
  manifest["order"] = n;
  manifest["class"] = cls_name;
  manifest["shard"] = shard;
  manifest["shards"] = shards;
  manifest["count"] = res.graphs.size();
  manifest["pairs_total"] = res.pairs_total;
  long long pruned = res.pairs_pruned_lookahead + res.pairs_pruned_square;
  manifest["pairs_pruned"] = pruned;
  if (res.pairs_total > 0)
    manifest["pruned_fraction"] = (double)pruned / (double)res.pairs_total;
  manifest["seconds"] = secs;
  std::cerr << manifest.dump() << "\n";
  if (!output.empty()) {
    std::ofstream mf(output + ".manifest.json");
    mf << manifest.dump(2) << "\n";
  }
  return kExitOk;
}

int run_analyze(const std::string& input, const std::string& props_csv, const std::string& tier,
                const std::string& output) {
  auto props = split_csv(props_csv);
  if (props.empty()) {
    std::cerr << "no properties requested\n";
    return kExitUsage;
  }
  for (const auto& p : props) {
    bool known = false;
    for (const auto& name : analyze_property_names()) known = known || name == p;
    if (!known) {
      std::cerr << "unknown property: " << p << "\n";
      return kExitUsage;
    }
  }
  std::vector<CubicGraph> graphs;
  try {
    graphs = read_graph6_file(input);
  } catch (const CodecError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  if (tier != "long") {
    const std::set<std::string> heavy = {"stable-cycles", "unique-cdc-cycles", "scc-length",
                                         "removable-cycles"};
    int max_order = 0;
    for (const auto& g : graphs) max_order = std::max(max_order, g.order());
    for (const auto& p : props)
      if (heavy.count(p) && max_order > 24) {
        std::cerr << p << " on orders above 24 sits behind --tier long\n";
        return kExitUsage;
      }
  }

  json scope = {{"input", input}, {"props", props_csv}, {"tier", tier}, {"count", graphs.size()}};
  if (!output.empty() && scope_already_complete(output, scope)) {
    std::cerr << "scope already complete; leaving " << output << " untouched\n";
    return kExitOk;
  }

  struct Item {
    size_t index;
    const CubicGraph* g;
    const std::string* prop;
  };
  std::vector<Item> items;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (const auto& p : props) items.push_back({i, &graphs[i], &p});

  int workers = worker_count_from_env();
  auto results = parallel_map(items, workers, [&](const Item& it) {
    auto t0 = std::chrono::steady_clock::now();
    PropertyResult r = analyze_property(*it.g, *it.prop);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json rec;
    rec["graph"] = graph6_encode(*it.g);
    rec["property"] = r.property;
    rec["value"] = r.value;
    if (!r.witness.is_null()) rec["witness"] = r.witness;
    rec["seconds"] = secs;
    return rec.dump();
  });

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    out = &file;
  }
  for (const auto& line : results) (*out) << line << "\n";
  json done = {{"scope", scope}, {"complete", true}};
  (*out) << done.dump() << "\n";
  return kExitOk;
}

int run_verify(const std::string& conj_name, int n_max, const std::string& fixture_name_arg,
               const std::string& tier, const std::string& output) {
  ConjectureId id;
  if (!conjecture_from_name(conj_name, id)) {
    std::cerr << "unknown conjecture: " << conj_name << "\n";
    std::cerr << "known ids:";
    for (const auto& info : conjecture_registry()) std::cerr << " " << info.name;
    std::cerr << "\n";
    return kExitUsage;
  }
  bool long_tier = tier == "long";
  int workers = worker_count_from_env();
  long long budget = long_tier ? -1 : 2000000000LL;

  // assemble the scope's graph list
  std::vector<CubicGraph> graphs;
  std::string scope;
  if (!fixture_name_arg.empty()) {
    FixtureId fid;
    if (!fixture_from_name(fixture_name_arg, fid)) {
      std::cerr << "unknown fixture: " << fixture_name_arg << "\n";
      return kExitUsage;
    }
    graphs = load_fixture(fid);
    scope = std::string("fixtures:") + fixture_name(fid);
  } else {
    if (n_max < 4) {
      std::cerr << "verify needs --n-max or --fixtures\n";
      return kExitUsage;
    }
    if (n_max > 24 && !long_tier) {
      std::cerr << "scopes above n=24 sit behind --tier long\n";
      return kExitUsage;
    }
    CatalogCache cache;
    CatalogClass scope_class = conjecture_info(id).scope;
    for (int n = 4; n <= n_max; n += 2) {
      const auto& cat = cache.get(scope_class, n);
      graphs.insert(graphs.end(), cat.begin(), cat.end());
    }
    scope = "n<=" + std::to_string(n_max);
  }

  // checkpointed progress: per-graph records already in the output file are
  // not re-checked, so an interrupted long run resumes where it stopped
  std::map<std::string, json> done;
  bool already_complete = false;
  if (!output.empty()) {
    std::ifstream in(output);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        json rec = json::parse(line);
        if (rec.value("conjecture", "") != conj_name || rec.value("scope", "") != scope)
          continue;
        if (rec.value("complete", false)) already_complete = true;
        if (rec.contains("graph")) done[rec["graph"]] = rec;
      } catch (...) {
      }
    }
  }

  ConjectureReport rep;
  rep.conjecture = conj_name;
  rep.scope = scope;
  rep.graphs_checked = (long long)graphs.size();
  auto t0 = std::chrono::steady_clock::now();

  std::ofstream progress;
  if (!output.empty() && !already_complete) progress.open(output, std::ios::app);

  const size_t chunk = 64;
  for (size_t base = 0; base < graphs.size(); base += chunk) {
    std::vector<CubicGraph> todo;
    std::vector<std::string> todo_g6;
    for (size_t i = base; i < std::min(graphs.size(), base + chunk); ++i) {
      std::string g6 = graph6_encode(graphs[i]);
      auto it = done.find(g6);
      if (it != done.end()) continue;
      todo.push_back(graphs[i]);
      todo_g6.push_back(g6);
    }
    if (todo.empty()) continue;
    auto checks = parallel_map(todo, workers, [&](const CubicGraph& g) {
      return check_conjecture_on_graph(id, g, budget);
    });
    for (size_t i = 0; i < todo.size(); ++i) {
      json rec;
      rec["conjecture"] = conj_name;
      rec["scope"] = scope;
      rec["graph"] = todo_g6[i];
      rec["holds"] = checks[i].holds;
      if (checks[i].resource_limit) rec["resource_limit"] = true;
      if (!checks[i].holds) rec["detail"] = checks[i].witness;
      done[todo_g6[i]] = rec;
      if (progress.is_open()) progress << rec.dump() << "\n" << std::flush;
    }
  }

  for (const auto& g : graphs) {
    const json& rec = done.at(graph6_encode(g));
    if (rec.value("holds", true)) continue;
    if (rec.value("resource_limit", false)) {
      if (rep.verdict == ConjectureReport::Verdict::holds)
        rep.verdict = ConjectureReport::Verdict::resource_limit;
    } else {
      rep.verdict = ConjectureReport::Verdict::counterexample;
    }
    json w;
    w["graph"] = rec["graph"];
    w["detail"] = rec.value("detail", json());
    rep.witnesses.push_back(w);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << rep.to_json().dump(2) << "\n";
  if (progress.is_open()) {
    json fin = rep.to_json();
    fin["complete"] = true;
    progress << fin.dump() << "\n";
  }
  switch (rep.verdict) {
    case ConjectureReport::Verdict::holds: return kExitOk;
    case ConjectureReport::Verdict::counterexample: return kExitCounterexample;
    case ConjectureReport::Verdict::resource_limit: return kExitResourceLimit;
  }
  return kExitOk;
}

int run_fixtures_verify(const std::string& name, const std::string& tier) {
  int workers = worker_count_from_env();
  bool long_tier = tier == "long";
  std::vector<FixtureId> ids;
  if (name == "all") {
    for (FixtureId id : {FixtureId::petersen, FixtureId::appendix_als,
                         FixtureId::appendix_stable32, FixtureId::appendix_strong34,
                         FixtureId::appendix_strong36, FixtureId::appendix_no5cdc30,
                         FixtureId::appendix_no5cdc36, FixtureId::appendix_perm34})
      ids.push_back(id);
  } else {
    FixtureId id;
    if (!fixture_from_name(name, id)) {
      std::cerr << "unknown fixture: " << name << "\n";
      return kExitUsage;
    }
    ids.push_back(id);
  }
  bool all_ok = true;
  for (FixtureId id : ids) {
    auto rep = verify_fixture(id, long_tier, workers);
    json out;
    out["fixture"] = rep.fixture;
    out["total"] = rep.total;
    out["passed"] = rep.passed;
    out["failures"] = rep.failures;
    out["seconds"] = rep.seconds;
    std::cout << out.dump() << "\n";
    all_ok = all_ok && rep.ok();
  }
  return all_ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubic graph catalog generator and conjecture verifier"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "exhaustively generate a graph class at one order");
  int gen_n = 10;
  std::string gen_class = "snark";
  int gen_shards = 1, gen_shard = 0;
  std::string gen_output, gen_parents, gen_tier = "short", gen_workdir;
  gen->add_option("--n", gen_n, "target order (even)")->required();
  gen->add_option("--class", gen_class, "cubic3c|cyc4|weaksnark|snark|snark5");
  gen->add_option("--shards", gen_shards, "shard count");
  gen->add_option("--shard", gen_shard, "shard index");
  gen->add_option("--output", gen_output, "graph6 output path (stdout otherwise)");
  gen->add_option("--parents", gen_parents, "graph6 catalog of order n-2 to expand");
  gen->add_option("--tier", gen_tier, "short|long");
  gen->add_option("--workdir", gen_workdir, "scratch directory for disk-staged parent levels");

  // analyze
  auto* ana = app.add_subcommand("analyze", "per-graph properties as JSON records");
  std::string ana_input, ana_props, ana_tier = "short", ana_output;
  ana->add_option("--input", ana_input, "graph6 input path")->required();
  ana->add_option("--props", ana_props, "comma-separated property list")->required();
  ana->add_option("--tier", ana_tier, "short|long");
  ana->add_option("--output", ana_output, "JSONL output path (stdout otherwise)");

  // verify
  auto* ver = app.add_subcommand("verify", "check a conjecture over a scope");
  std::string ver_conj, ver_fixture, ver_tier = "short", ver_output;
  int ver_nmax = 0;
  ver->add_option("--conjecture", ver_conj, "conjecture id")->required();
  ver->add_option("--n-max", ver_nmax, "verify on generated catalogs up to this order");
  ver->add_option("--fixtures", ver_fixture, "verify on a fixture set");
  ver->add_option("--tier", ver_tier, "short|long");
  ver->add_option("--output", ver_output, "append report JSONL here");

  // fixtures verify
  auto* fix = app.add_subcommand("fixtures", "fixture registry operations");
  auto* fixv = fix->add_subcommand("verify", "re-check the claimed properties of a fixture set");
  std::string fix_name = "all";
  std::string fix_tier = "short";
  fixv->add_option("id", fix_name, "fixture id or 'all'");
  fixv->add_option("--tier", fix_tier, "short|long");
  auto* fixd = fix->add_subcommand("dump", "write a fixture set as graph6");
  std::string dump_name, dump_output;
  fixd->add_option("id", dump_name, "fixture id")->required();
  fixd->add_option("--output", dump_output, "graph6 output path (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return run_generate(gen_n, gen_class, gen_shards, gen_shard, gen_output, gen_parents,
                          gen_tier == "long", gen_workdir);
    if (ana->parsed()) return run_analyze(ana_input, ana_props, ana_tier, ana_output);
    if (ver->parsed()) return run_verify(ver_conj, ver_nmax, ver_fixture, ver_tier, ver_output);
    if (fix->parsed()) {
      if (fixv->parsed()) return run_fixtures_verify(fix_name, fix_tier);
      if (fixd->parsed()) {
        FixtureId id;
        if (!fixture_from_name(dump_name, id)) {
          std::cerr << "unknown fixture: " << dump_name << "\n";
          return kExitUsage;
        }
        auto graphs = load_fixture(id);
        if (!dump_output.empty()) {
          write_graph6_file(dump_output, graphs);
        } else {
          for (const auto& g : graphs) std::cout << graph6_encode(g) << "\n";
        }
        return kExitOk;
      }
      std::cerr << "usage: fixtures verify|dump [id]\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
