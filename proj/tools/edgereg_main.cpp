#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "edgereg/config.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/harness.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"
#include "edgereg/vwc.hpp"

using namespace edgereg;
using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;    // a verification or property check failed
constexpr int exit_usage = 2;   // bad invocation or unreadable input
constexpr int exit_budget = 3;  // a resource budget tripped

// write-to-temp plus rename, so an interrupted run never leaves a torn file
void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_atomic(out_path, content);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string graph;
  std::vector<std::string> products;
  std::string pair;
  std::string field = "rationals";
  std::string method = "hochster";
  std::string family;
  std::string out;
  std::string regression_out = "regression.edges";
  std::string dir;
  int power = 1;
  int smax = 1;
  int h = 2;
  int n = 6;
  int samples = 0;
  uint64_t seed = 0;
  bool have_seed = false;
  bool json = false;
  bool zero_millis = false;
};

std::string records_output(const std::vector<VerificationRecord>& records,
                           bool json, bool zero_millis) {
  if (json) return dump(records_to_json(records, zero_millis));
  return records_to_csv(records, zero_millis);
}

bool records_all_pass(const std::vector<VerificationRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

int run_nu(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  MatchingCertificate cert = induced_matching_witness(g);
  if (opt.json) {
    ordered_json j;
    j["graph"] = graph_digest(g);
    j["nu"] = static_cast<int>(cert.edges.size());
    ordered_json witness = ordered_json::array();
    for (const auto& [u, v] : cert.edges)
      witness.push_back(ordered_json::array({u, v}));
    j["witness"] = witness;
    emit(opt.out, dump(j));
  } else {
    emit(opt.out, std::to_string(cert.edges.size()) + "\n");
  }
  return exit_ok;
}

int run_check_vwc(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  bool wc = is_well_covered(g);
  bool vwc = is_very_well_covered(g);
  if (opt.json) {
    ordered_json j;
    j["graph"] = graph_digest(g);
    j["well_covered"] = wc;
    j["very_well_covered"] = vwc;
    emit(opt.out, dump(j));
  } else {
    emit(opt.out, vwc ? "true\n" : "false\n");
  }
  return vwc ? exit_ok : exit_fail;
}

int run_label(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  VwcLabeling l = vwc_labeling(g);
  validate_labeling(g, l);
  if (opt.json) {
    ordered_json j;
    j["graph"] = graph_digest(g);
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : l.pairs)
      pairs.push_back(ordered_json::array({x, y}));
    j["pairs"] = pairs;
    emit(opt.out, dump(j));
  } else {
    std::string text;
    for (const auto& [x, y] : l.pairs) text += x + " " + y + "\n";
    emit(opt.out, text);
  }
  return exit_ok;
}

int run_colon(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  if (opt.products.size() != 1)
    throw ParseError("colon needs exactly one --product");
  EdgeProduct p = parse_edge_product(g, opt.products[0]);
  MonomialIdeal colon = colon_ideal_by_even_connections(p);
  if (opt.json) {
    ordered_json j;
    j["graph"] = graph_digest(g);
    j["product"] = p.to_string();
    j["ring"] = colon.ring_vars();
    ordered_json gens = ordered_json::array();
    std::string digest = colon.digest();
    size_t start = 0;
    while (start < digest.size()) {
      size_t split = digest.find(';', start);
      if (split == std::string::npos) split = digest.size();
      gens.push_back(digest.substr(start, split - start));
      start = split + 1;
    }
    j["gens"] = gens;
    emit(opt.out, dump(j));
  } else {
    emit(opt.out, colon.to_text());
  }
  return exit_ok;
}

int run_even(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  if (opt.products.size() != 1)
    throw ParseError("even needs exactly one --product");
  EdgeProduct p = parse_edge_product(g, opt.products[0]);
  size_t comma = opt.pair.find(',');
  if (comma == std::string::npos)
    throw ParseError("--pair wants two comma-separated vertex names");
  std::string u = opt.pair.substr(0, comma);
  std::string v = opt.pair.substr(comma + 1);
  std::optional<WitnessPath> w = is_even_connected(p, u, v);
  std::vector<std::string> path;
  if (w) {
    std::string why;
    if (!witness_valid(p, u, v, *w, &why))
      throw Error("internal: witness failed re-validation: " + why);
    path = w->names(g);
  }
  if (opt.json) {
    ordered_json j;
    j["graph"] = graph_digest(g);
    j["product"] = p.to_string();
    j["pair"] = ordered_json::array({u, v});
    j["even_connected"] = w.has_value();
    j["path"] = path;
    emit(opt.out, dump(j));
  } else if (w) {
    std::string line;
    for (size_t i = 0; i < path.size(); ++i)
      line += (i ? "," : "") + path[i];
    emit(opt.out, line + "\n");
  } else {
    emit(opt.out, "none\n");
  }
  return exit_ok;
}

int run_reg(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  Field field = parse_field(opt.field);
  MonomialIdeal ideal = power(edge_ideal(g), opt.power);
  RegularityReport rep = opt.method == "lcm-lattice"
                             ? regularity_lcm_lattice(ideal, field)
                             : regularity(ideal, field);
  emit(opt.out, dump(report_to_json(rep)));
  return exit_ok;
}

int run_verify_main(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  Field field = parse_field(opt.field);
  std::vector<VerificationRecord> records;
  int budget_code = exit_ok;
  try {
    verify_main_theorem(g, opt.smax, &records, field);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    budget_code = exit_budget;
  }
  emit(opt.out, records_output(records, opt.json, opt.zero_millis));
  if (budget_code != exit_ok) return budget_code;
  return records_all_pass(records) ? exit_ok : exit_fail;
}

int run_verify_colon_bound(const Options& opt) {
  Graph g = Graph::parse_file(opt.graph);
  Field field = parse_field(opt.field);
  if (opt.products.empty())
    throw ParseError("verify-colon-bound needs at least one --product");
  std::vector<EdgeProduct> products;
  for (const std::string& text : opt.products)
    products.push_back(parse_edge_product(g, text));
  std::vector<VerificationRecord> records;
  int budget_code = exit_ok;
  try {
    verify_colon_bound(g, products, &records, field);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    budget_code = exit_budget;
  }
  emit(opt.out, records_output(records, opt.json, opt.zero_millis));
  if (budget_code != exit_ok) return budget_code;
  return records_all_pass(records) ? exit_ok : exit_fail;
}

int run_sweep_cmd(const Options& opt) {
  SweepConfig config;
  config.family = parse_family(opt.family);
  config.h = opt.h;
  config.n = opt.n;
  config.s_max = opt.smax;
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.have_seed = opt.have_seed;
  config.field = parse_field(opt.field);
  config.zero_millis = opt.zero_millis;
  SweepOutcome outcome = run_sweep(config);
  emit(opt.out, records_output(outcome.records, opt.json, opt.zero_millis));
  if (!outcome.all_pass) {
    write_atomic(opt.regression_out, outcome.regression);
    std::cerr << "sweep failed; minimal instance written to "
              << opt.regression_out << "\n";
    return exit_fail;
  }
  return exit_ok;
}

int run_fixtures(const Options& opt) {
  const std::vector<Fixture>& fs = shipped_fixtures();
  if (!opt.dir.empty()) {
    std::string text;
    for (const Fixture& f : fs) {
      std::string path = opt.dir + "/" + f.name + ".edges";
      write_atomic(path, f.graph.to_text());
      text += path + "\n";
    }
    emit(opt.out, text);
    return exit_ok;
  }
  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const Fixture& f : fs) {
      ordered_json j;
      j["name"] = f.name;
      j["graph"] = graph_digest(f.graph);
      j["vertices"] = f.graph.vertex_count();
      j["edges"] = f.graph.edge_count();
      arr.push_back(j);
    }
    emit(opt.out, dump(arr));
  } else {
    std::string text;
    for (const Fixture& f : fs) text += f.name + " " + graph_digest(f.graph) + "\n";
    emit(opt.out, text);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact regularity of edge ideal powers"};
  app.require_subcommand(1);

  Options opt;
  Budgets budget = Budgets::from_env();
  int threads = 0;

  app.add_option("--threads", threads, "worker threads (overrides EDGEREG_THREADS)");
  app.add_option("--budget-vertices", budget.max_vertices);
  app.add_option("--budget-canonical-vertices", budget.max_canonical_vertices);
  app.add_option("--budget-raw-gens", budget.max_raw_generators);
  app.add_option("--budget-ring-vars", budget.max_ring_vars);
  app.add_option("--budget-poly-vars", budget.max_polarized_vars);
  app.add_option("--budget-lcm-gens", budget.max_lcm_generators);
  app.add_option("--budget-homology-verts", budget.max_homology_vertices);
  app.add_option("--budget-family-h", budget.max_family_h);
  app.add_option("--budget-lattice", budget.max_lattice_size);
  app.add_option("--budget-faces", budget.max_faces);
  app.add_option("--budget-walks", budget.max_walks);

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph, "edge list file")->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "write output to a file (atomic)");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit JSON");
  };

  CLI::App* nu = app.add_subcommand("nu", "induced matching number");
  add_graph(nu);
  add_json(nu);
  add_out(nu);

  CLI::App* check = app.add_subcommand("check-vwc", "is the graph very well-covered (exit 1 when not)");
  add_graph(check);
  add_json(check);
  add_out(check);

  CLI::App* label = app.add_subcommand("label", "cover/independent pairing of a very well-covered graph");
  add_graph(label);
  add_json(label);
  add_out(label);

  CLI::App* colon = app.add_subcommand("colon", "colon ideal (I^{s+1} : e1...es) by even connections");
  add_graph(colon);
  colon->add_option("--product", opt.products, "edge product, e.g. x1-x2,x3-x4")->required();
  add_json(colon);
  add_out(colon);

  CLI::App* even = app.add_subcommand("even", "shortest even-connection walk for a vertex pair");
  add_graph(even);
  even->add_option("--product", opt.products, "edge product")->required();
  even->add_option("--pair", opt.pair, "vertex pair u,v")->required();
  add_json(even);
  add_out(even);

  CLI::App* reg = app.add_subcommand("reg", "regularity of I(G)^s (JSON report)");
  add_graph(reg);
  reg->add_option("--power", opt.power, "exponent s")->check(CLI::PositiveNumber);
  reg->add_option("--field", opt.field, "rationals or gf(p)");
  reg->add_option("--method", opt.method)
      ->check(CLI::IsMember({"hochster", "lcm-lattice"}));
  add_json(reg);  // accepted for symmetry; reg always emits JSON
  add_out(reg);

  CLI::App* vmain = app.add_subcommand("verify-main", "check reg(I^s) = 2s + nu - 1 for s = 1..smax");
  add_graph(vmain);
  vmain->add_option("--smax", opt.smax)->check(CLI::PositiveNumber);
  vmain->add_option("--field", opt.field);
  vmain->add_flag("--zero-millis", opt.zero_millis, "pin the millis column to 0");
  add_json(vmain);
  add_out(vmain);

  CLI::App* vcolon = app.add_subcommand("verify-colon-bound", "check reg((I^{s+1}:e1...es)) <= nu + 1");
  add_graph(vcolon);
  vcolon->add_option("--product", opt.products, "edge product (repeatable)")->required();
  vcolon->add_option("--field", opt.field);
  vcolon->add_flag("--zero-millis", opt.zero_millis);
  add_json(vcolon);
  add_out(vcolon);

  CLI::App* sweep = app.add_subcommand("sweep", "theorem verification sweep over a graph family");
  CLI::Option* seed_opt = nullptr;
  sweep->add_option("--family", opt.family,
                    "exhaustive-vwc | whiskered | unmixed-bipartite | join | random-graph | fixture")
      ->required();
  sweep->add_option("--hmax", opt.h, "family size bound");
  sweep->add_option("--n", opt.n, "random graph vertex bound");
  sweep->add_option("--smax", opt.smax)->check(CLI::PositiveNumber);
  sweep->add_option("--samples", opt.samples, "random sample count");
  seed_opt = sweep->add_option("--seed", opt.seed, "random seed (required for random-graph)");
  sweep->add_option("--field", opt.field);
  sweep->add_flag("--zero-millis", opt.zero_millis);
  sweep->add_option("--regression-out", opt.regression_out,
                    "file for the minimal failing instance");
  add_json(sweep);
  add_out(sweep);

  CLI::App* fixtures = app.add_subcommand("fixtures", "list or export the shipped example graphs");
  fixtures->add_option("--dir", opt.dir, "write .edges files into this directory");
  add_json(fixtures);
  add_out(fixtures);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  set_budgets(budget);
  if (threads > 0) set_thread_count(threads);
  opt.have_seed = seed_opt != nullptr && seed_opt->count() > 0;

  try {
    if (nu->parsed()) return run_nu(opt);
    if (check->parsed()) return run_check_vwc(opt);
    if (label->parsed()) return run_label(opt);
    if (colon->parsed()) return run_colon(opt);
    if (even->parsed()) return run_even(opt);
    if (reg->parsed()) return run_reg(opt);
    if (vmain->parsed()) return run_verify_main(opt);
    if (vcolon->parsed()) return run_verify_colon_bound(opt);
    if (sweep->parsed()) return run_sweep_cmd(opt);
    if (fixtures->parsed()) return run_fixtures(opt);
    std::cerr << "no subcommand\n";
    return exit_usage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UnknownVertex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const VertexNameCollision& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidLabeling& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
}
