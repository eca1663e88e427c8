#include "rainsat/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <random>
#include <set>

#include "rainsat/cache.hpp"
#include "rainsat/constructions.hpp"
#include "rainsat/graph_io.hpp"
#include "rainsat/hypercube.hpp"
#include "rainsat/report.hpp"
#include "rainsat/saturation.hpp"
#include "rainsat/search.hpp"

namespace rainsat {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string pattern;
  std::string graph;
  std::string construct;
  std::string coloring;
  std::string cache;
  std::string format = "json";
  std::uint64_t budget_nodes = 0;
  std::int64_t budget_ms = 0;
  int jobs = 1;
  std::uint64_t seed = 1;

  // subcommand specific
  std::string family;
  int n = 0, r = 0, k = 0, w = 0;
  int trials = 100;
  std::size_t keep = 16;
  bool allow_large = false;
  bool exhaustive = false;
  int clique_extension = 0;
  std::string coloring_out;
  std::string query;
  std::vector<EdgeId> unrestricted;

  Budget budget() const { return {budget_nodes, budget_ms}; }
};

struct Input {
  Graph graph;
  std::optional<EdgeColoring> coloring;
  std::optional<ConstructionSpec> spec;
  std::string source;
};

Input load_input(const RunConfig& cfg, bool need_graph = true) {
  Input in;
  if (!cfg.construct.empty()) {
    const ConstructionSpec spec = ConstructionSpec::parse(cfg.construct);
    ColoredConstruction c = construct(spec);
    in.graph = std::move(c.graph);
    in.coloring = std::move(c.coloring);
    in.spec = spec;
    in.source = spec.to_string();
  } else if (!cfg.graph.empty()) {
    in.graph = read_graph_file(cfg.graph);
    in.source = cfg.graph;
  }
  if (!cfg.coloring.empty()) {
    auto [g, c] = parse_coloring_text(read_text_file(cfg.coloring));
    if (in.source.empty()) {
      in.graph = std::move(g);
      in.source = cfg.coloring;
    } else if (!(g == in.graph)) {
      throw UsageError("coloring file does not match the graph's edge order");
    }
    in.coloring = std::move(c);
  }
  if (need_graph && in.source.empty()) throw UsageError("give --graph or --construct");
  return in;
}

Pattern load_pattern(const RunConfig& cfg, const Input* in = nullptr) {
  if (cfg.pattern.empty()) {
    if (in && in->spec) return in->spec->pattern();
    throw UsageError("give --pattern");
  }
  try {
    return Pattern::parse(cfg.pattern);
  } catch (const std::invalid_argument&) {
    std::ifstream probe(cfg.pattern);
    if (!probe) throw;
  }
  return Pattern::general(read_graph_file(cfg.pattern));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Found:
      return kExitOk;
    case Verdict::NoneExists:
      return kExitNegative;
    case Verdict::BudgetExceeded:
      return kExitBudget;
  }
  return kExitUsage;
}

int saturation_exit(const std::string& verdict) {
  if (verdict == "Saturated") return kExitOk;
  if (verdict == "Inconclusive") return kExitBudget;
  return kExitNegative;
}

Json config_json(const std::string& command, const RunConfig& cfg) {
  return Json{{"command", command},
              {"budget_nodes", cfg.budget_nodes},
              {"budget_ms", cfg.budget_ms},
              {"jobs", cfg.jobs},
              {"seed", cfg.seed},
              {"rng", "mt19937_64"}};
}

struct Outcome {
  Json result;
  int exit = kExitOk;
};

Outcome cmd_construct(const RunConfig& cfg, std::ostream& out) {
  ConstructionSpec spec;
  if (!cfg.construct.empty()) {
    spec = ConstructionSpec::parse(cfg.construct);
  } else {
    if (cfg.family.empty()) throw UsageError("give --construct or --family");
    std::string text = cfg.family + ":";
    if (cfg.r) text += "r=" + std::to_string(cfg.r) + ",";
    if (cfg.k) text += "k=" + std::to_string(cfg.k) + ",";
    text += "n=" + std::to_string(cfg.n);
    spec = ConstructionSpec::parse(text);
  }
  const ColoredConstruction c = construct(spec);
  if (!cfg.coloring_out.empty()) {
    std::ofstream f(cfg.coloring_out);
    if (!f) throw std::runtime_error("cannot write " + cfg.coloring_out);
    f << to_coloring_text(c.graph, *c.coloring);
  }
  Outcome o;
  if (cfg.format == "g6") {
    out << encode_graph6(c.graph) << '\n' << "edges=" << c.graph.edge_count() << '\n';
    o.result = nullptr;
  } else if (cfg.format == "edges") {
    out << to_coloring_text(c.graph, *c.coloring);
    o.result = nullptr;
  } else if (cfg.format == "dot") {
    std::vector<std::string> labels, names;
    for (Color col : c.coloring->colors()) labels.push_back(std::to_string(col));
    for (Vertex v = 0; v < c.graph.vertex_count(); ++v)
      names.push_back(std::to_string(v) + ":" + c.roles[v]);
    out << to_dot(c.graph, labels, names);
    o.result = nullptr;
  } else {
    o.result = Json{{"spec", spec.to_string()},
                    {"pattern", spec.pattern().name()},
                    {"graph", graph_json(c.graph)},
                    {"edges", c.graph.edge_count()},
                    {"closed_form_edges", spec.edge_count()},
                    {"coloring", coloring_json(*c.coloring)},
                    {"roles", c.roles}};
    if (spec.family == Family::K4) o.result["remainder_new_colors"] = c.remainder_new_colors;
  }
  return o;
}

Outcome cmd_check_coloring(const RunConfig& cfg) {
  const Input in = load_input(cfg);
  if (!in.coloring) throw UsageError("give --coloring (or a --construct with a coloring)");
  const Pattern pattern = load_pattern(cfg, &in);
  Outcome o;
  const bool proper = is_proper(in.graph, *in.coloring);
  o.result = Json{{"source", in.source},
                  {"pattern", pattern.name()},
                  {"graph", graph_json(in.graph)},
                  {"proper", proper},
                  {"distinct_colors", in.coloring->distinct_colors()}};
  if (!proper) {
    o.exit = kExitNegative;
    return o;
  }
  const auto copy = find_rainbow_copy(in.graph, *in.coloring, pattern);
  o.result["rainbow_free"] = !copy;
  if (copy) o.result["rainbow_copy"] = Json{{"vertices", copy->vertices}, {"edges", copy->edges}};
  o.exit = copy ? kExitNegative : kExitOk;
  if (!copy && !cfg.unrestricted.empty()) {
    const auto u =
        check_unrestricted(in.graph, *in.coloring, cfg.unrestricted, pattern, cfg.budget());
    o.result["unrestricted"] = unrestricted_json(u);
    if (!u.decided) o.exit = kExitBudget;
  }
  return o;
}

Outcome cmd_find_coloring(const RunConfig& cfg) {
  const Input in = load_input(cfg);
  const Pattern pattern = load_pattern(cfg, &in);
  SearchOptions so;
  so.budget = cfg.budget();
  so.workers = cfg.jobs;
  const SearchOutcome r = find_rainbow_free_coloring(in.graph, pattern, so);
  Outcome o;
  o.result = outcome_json(r);
  o.result["source"] = in.source;
  o.result["pattern"] = pattern.name();
  o.result["graph"] = graph_json(in.graph);
  o.exit = verdict_exit(r.verdict);
  return o;
}

Outcome cmd_enumerate(const RunConfig& cfg) {
  const Input in = load_input(cfg);
  const Pattern pattern = load_pattern(cfg, &in);
  SearchOptions so;
  so.budget = cfg.budget();
  so.workers = cfg.jobs;
  const EnumerationOutcome e = enumerate_rainbow_free_colorings(in.graph, pattern, so, cfg.keep);
  Outcome o;
  o.result = enumeration_json(e);
  o.result["source"] = in.source;
  o.result["pattern"] = pattern.name();
  o.exit = e.exhaustive ? kExitOk : kExitBudget;
  return o;
}

Outcome cmd_check_saturation(const RunConfig& cfg, std::ostream& err) {
  const Input in = load_input(cfg);
  const Pattern pattern = load_pattern(cfg, &in);
  SaturationOptions so;
  so.budget = cfg.budget();
  so.workers = cfg.jobs;
  Outcome o;

  std::string cache_path = cfg.cache;
  if (const char* env = std::getenv("RAINSAT_CACHE"); env && *env) cache_path = env;
  if (cache_path.empty()) {
    const SaturationReport r = check_saturation(in.graph, pattern, so);
    o.result = saturation_json(r);
    o.result["cache"] = "off";
  } else {
    ResultCache cache(cache_path);
    const CacheKey key = make_cache_key("check-saturation", in.graph, pattern.name(), so.budget);
    std::optional<SaturationReport> fresh;
    bool hit = false;
    const CacheEntry e = cache_lookup_or_run(
        cache, key,
        [&] {
          fresh = check_saturation(in.graph, pattern, so);
          CacheEntry ce;
          ce.verdict = to_string(fresh->verdict);
          if (fresh->condition1.witness)
            ce.witness_digest = witness_digest(fresh->condition1.witness->colors());
          ce.timestamp = utc_timestamp();
          return ce;
        },
        hit);
    for (const auto& w : cache.warnings()) err << "warning: " << w << '\n';
    if (fresh) {
      o.result = saturation_json(*fresh);
    } else {
      o.result = Json{{"verdict", e.verdict}, {"witness_digest", e.witness_digest},
                      {"cached_at", e.timestamp}};
    }
    o.result["cache"] = hit ? "hit" : "miss";
  }
  o.result["source"] = in.source;
  o.result["pattern"] = pattern.name();
  o.result["graph"] = graph_json(in.graph);
  o.exit = saturation_exit(o.result["verdict"].get<std::string>());
  return o;
}

Outcome cmd_rsat(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("give --n");
  const Pattern pattern = load_pattern(cfg);
  SaturationOptions so;
  so.budget = cfg.budget();
  so.workers = cfg.jobs;
  const RsatResult r = rsat_exact(cfg.n, pattern, so, cfg.allow_large);
  Outcome o;
  o.result = rsat_json(r);
  o.exit = !r.exhaustive ? kExitBudget : r.value ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_audit(const RunConfig& cfg) {
  Outcome o;
  if (cfg.clique_extension > 0) {
    const auto a = audit_clique_extension(cfg.clique_extension, cfg.trials, cfg.seed,
                                          cfg.exhaustive);
    o.result = clique_audit_json(a);
    o.result["r"] = cfg.clique_extension;
    o.exit = a.passed ? kExitOk : kExitNegative;
    return o;
  }
  const Input in = load_input(cfg);
  const Pattern pattern = load_pattern(cfg, &in);
  const auto v = audit_structure(in.graph, pattern);
  o.result = Json{{"source", in.source},
                  {"pattern", pattern.name()},
                  {"graph", graph_json(in.graph)},
                  {"violations", violations_json(v)}};
  o.exit = v.empty() ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_hypercube_unique(const RunConfig& cfg) {
  SearchOptions so;
  so.budget = cfg.budget();
  so.workers = cfg.jobs;
  const UniquenessReport r = verify_unique_coloring(cfg.w, so, cfg.allow_large);
  Outcome o;
  o.result = uniqueness_json(r);
  o.exit = !r.exhaustive ? kExitBudget : r.up_to_isomorphism == 1 ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_tbfrc(const RunConfig& cfg) {
  const FoldedHypercube f = build_folded_hypercube(cfg.w);
  EdgeColoring c = bitflip_coloring(f);
  if (!cfg.coloring.empty()) {
    auto [g, given] = parse_coloring_text(read_text_file(cfg.coloring));
    if (!(g == f.graph)) throw UsageError("coloring file is not on the folded hypercube's edges");
    c = std::move(given);
  }
  Outcome o;
  const auto t = find_tbfrc(f, c);
  o.result = Json{{"w", cfg.w}, {"found", t.has_value()}};
  if (!t) {
    o.exit = kExitNegative;
    return o;
  }
  o.result["tbfrc"] = tbfc_json(*t);
  if (cfg.w >= 5) {
    const EdgeColoring back = extend_tbfrc(f, *t);
    const bool same = back == c;
    o.result["round_trip"] = same;
    if (!same) o.exit = kExitNegative;
  }
  return o;
}

Outcome cmd_greedy_cycle(const RunConfig& cfg) {
  const auto r = greedy_cycle_trials(cfg.k, cfg.n, cfg.trials, cfg.seed);
  Outcome o;
  o.result = Json{{"k", cfg.k},
                  {"n", cfg.n},
                  {"trials", r.trials},
                  {"successes", r.successes},
                  {"failures", r.failures},
                  {"first_failure", r.first_failure ? Json(*r.first_failure) : Json()}};
  o.exit = r.failures == 0 ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_closed_form(const RunConfig& cfg) {
  if (cfg.query.empty()) throw UsageError("give a query such as path_upper(6,20)");
  const Rational v = closed_form(cfg.query);
  Outcome o;
  o.result = Json{{"query", cfg.query}, {"value", v.to_string()}, {"integer", v.is_integer()}};
  if (v.is_integer()) o.result["integer_value"] = v.num;
  return o;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--budget-nodes", cfg.budget_nodes, "Search node limit per search (0: none)");
  sub->add_option("--budget-ms", cfg.budget_ms, "Wall-clock limit per search in ms (0: none)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for every random choice");
  sub->add_option("--cache", cfg.cache, "Result cache (JSON lines); RAINSAT_CACHE overrides");
}

void add_graph(CLI::App* sub, RunConfig& cfg) {
  auto* g = sub->add_option("--graph", cfg.graph, "graph6 or edge-list file");
  auto* c = sub->add_option("--construct", cfg.construct, "Family member, e.g. k4:n=10");
  g->excludes(c);
  sub->add_option("--pattern", cfg.pattern, "K<r>, P<k>, C<k> or a graph file");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper rainbow saturation toolkit", "rainsat"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* construct_cmd = app.add_subcommand("construct", "Build a saturated family member");
  construct_cmd->add_option("--construct", cfg.construct, "Family member, e.g. k4:n=10");
  construct_cmd->add_option("--family", cfg.family, "k4, kr, path, p5 or cycle");
  construct_cmd->add_option("--n", cfg.n, "Vertex count");
  construct_cmd->add_option("--r", cfg.r, "Clique order (kr)");
  construct_cmd->add_option("--k", cfg.k, "Path or cycle length");
  construct_cmd->add_option("--format", cfg.format, "g6, edges, dot or json")
      ->check(CLI::IsMember({"g6", "edges", "dot", "json"}));
  construct_cmd->add_option("--coloring-out", cfg.coloring_out, "Write the coloring here");
  add_common(construct_cmd, cfg);

  auto* check_cmd = app.add_subcommand("check-coloring", "Check a coloring is proper and rainbow-free");
  add_graph(check_cmd, cfg);
  check_cmd->add_option("--coloring", cfg.coloring, "\"u v color\" file");
  check_cmd->add_option("--unrestricted", cfg.unrestricted, "Edge indices to test for recoloring");
  add_common(check_cmd, cfg);

  auto* find_cmd = app.add_subcommand("find-coloring", "Search for a rainbow-free proper coloring");
  add_graph(find_cmd, cfg);
  add_common(find_cmd, cfg);

  auto* enum_cmd = app.add_subcommand("enumerate-colorings", "Count rainbow-free proper colorings");
  add_graph(enum_cmd, cfg);
  enum_cmd->add_option("--keep", cfg.keep, "Colorings to list");
  add_common(enum_cmd, cfg);

  auto* sat_cmd = app.add_subcommand("check-saturation", "Decide proper rainbow saturation");
  add_graph(sat_cmd, cfg);
  add_common(sat_cmd, cfg);

  auto* rsat_cmd = app.add_subcommand("rsat", "Smallest saturated graph on n vertices");
  rsat_cmd->add_option("--n", cfg.n, "Vertex count")->required();
  rsat_cmd->add_option("--pattern", cfg.pattern, "K<r>, P<k>, C<k> or a graph file")->required();
  rsat_cmd->add_flag("--allow-large", cfg.allow_large, "Allow n above the exhaustive limit");
  add_common(rsat_cmd, cfg);

  auto* audit_cmd = app.add_subcommand("audit", "Structural checks for saturated graphs");
  add_graph(audit_cmd, cfg);
  audit_cmd->add_option("--clique-extension", cfg.clique_extension,
                        "Instead: random join extensions of a rainbow K_r");
  audit_cmd->add_option("--trials", cfg.trials, "Random trials")->check(CLI::NonNegativeNumber);
  audit_cmd->add_flag("--exhaustive", cfg.exhaustive, "Also enumerate every extension (r = 3)");
  add_common(audit_cmd, cfg);

  auto* hu_cmd = app.add_subcommand("hypercube-unique", "Count rainbow-path-free colorings of H_w/2");
  hu_cmd->add_option("--w", cfg.w, "Word length")->required();
  hu_cmd->add_flag("--allow-large", cfg.allow_large, "Attempt w > 5");
  add_common(hu_cmd, cfg);

  auto* tb_cmd = app.add_subcommand("tbfrc", "Find a total bit-flip rainbow cycle and extend it");
  tb_cmd->add_option("--w", cfg.w, "Word length")->required();
  tb_cmd->add_option("--coloring", cfg.coloring, "Coloring of H_w/2 (default: bit-flip)");
  add_common(tb_cmd, cfg);

  auto* gc_cmd = app.add_subcommand("greedy-cycle", "Random trials of the greedy rainbow cycle");
  gc_cmd->add_option("--k", cfg.k, "Odd cycle length")->required();
  gc_cmd->add_option("--n", cfg.n, "Vertex count")->required();
  gc_cmd->add_option("--trials", cfg.trials, "Random colorings")->check(CLI::NonNegativeNumber);
  add_common(gc_cmd, cfg);

  auto* cf_cmd = app.add_subcommand("closed-form", "Evaluate a bound or edge count exactly");
  cf_cmd->add_option("query", cfg.query, "e.g. kr_upper_poly_slope(4)")->required();
  add_common(cf_cmd, cfg);

  std::vector<std::string> argv_store{"rainsat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    Outcome o;
    if (name == "construct")
      o = cmd_construct(cfg, out);
    else if (name == "check-coloring")
      o = cmd_check_coloring(cfg);
    else if (name == "find-coloring")
      o = cmd_find_coloring(cfg);
    else if (name == "enumerate-colorings")
      o = cmd_enumerate(cfg);
    else if (name == "check-saturation")
      o = cmd_check_saturation(cfg, err);
    else if (name == "rsat")
      o = cmd_rsat(cfg);
    else if (name == "audit")
      o = cmd_audit(cfg);
    else if (name == "hypercube-unique")
      o = cmd_hypercube_unique(cfg);
    else if (name == "tbfrc")
      o = cmd_tbfrc(cfg);
    else if (name == "greedy-cycle")
      o = cmd_greedy_cycle(cfg);
    else
      o = cmd_closed_form(cfg);
    if (!o.result.is_null()) {
      Json report{{"config", config_json(name, cfg)}, {"result", std::move(o.result)},
                  {"exit_code", o.exit}};
      out << report.dump(2) << '\n';
    }
    return o.exit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rainsat
