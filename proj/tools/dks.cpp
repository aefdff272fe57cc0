// dks: generate, solve and benchmark densest k-subgraph instances with the
// Grover-style threshold search and its classical baselines.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dks/baselines.hpp"
#include "dks/circuits.hpp"
#include "dks/experiments.hpp"
#include "dks/graph.hpp"
#include "dks/search.hpp"
#include "dks/stats.hpp"

using json = nlohmann::json;
using namespace dks;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string sorted_vertices(VertexSubset s) {
  std::string out;
  for (int v = 0; v < 64; ++v) {
    if ((s >> v) & 1ull) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
  }
  return out;
}

std::vector<ScalingSeries> parse_series(const std::vector<std::string>& specs) {
  std::vector<ScalingSeries> out;
  for (const std::string& s : specs) {
    ScalingSeries series;
    series.n_step = 1;
    int fields[4] = {0, 0, 0, 1};
    int idx = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
      if (idx >= 4 || tok.empty()) throw CLI::ValidationError("--series", "expected K:NMIN:NMAX[:STEP]");
      fields[idx++] = std::stoi(tok);
    }
    if (idx < 3) throw CLI::ValidationError("--series", "expected K:NMIN:NMAX[:STEP]");
    series.k = fields[0];
    series.n_min = fields[1];
    series.n_max = fields[2];
    series.n_step = fields[3];
    out.push_back(series);
  }
  return out;
}

json series_to_json(const std::vector<ScalingSeries>& series) {
  json arr = json::array();
  for (const auto& s : series) {
    arr.push_back({{"k", s.k}, {"n_min", s.n_min}, {"n_max", s.n_max}, {"n_step", s.n_step}});
  }
  return arr;
}

ExecutorPolicy parse_policy(const std::string& name) {
  if (name == "auto") return ExecutorPolicy::Auto;
  if (name == "sim") return ExecutorPolicy::Simulator;
  if (name == "emulator") return ExecutorPolicy::Emulator;
  throw CLI::ValidationError("--executor", "must be auto, sim or emulator");
}

json fit_to_json(const FitResult& f) {
  return {{"a", f.a}, {"b", f.b}, {"residual_rms", f.residual_rms}, {"points", f.points}};
}

// --- gen --------------------------------------------------------------------

struct GenOptions {
  int n = 10;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out;
  bool unique_densest = false;
  int k = 0;
  int max_attempts = 10000;
};

int run_gen(const GenOptions& opt) {
  Graph g = opt.unique_densest
                ? erdos_renyi_unique_densest(opt.n, opt.p, opt.k, opt.seed, opt.max_attempts)
                : erdos_renyi(opt.n, opt.p, opt.seed);
  save_graph(opt.out, g);
  std::cout << "wrote " << opt.out << " (n=" << g.vertex_count() << ", m=" << g.edge_count_total()
            << ", seed=" << opt.seed << ")\n";
  return 0;
}

// --- solve ------------------------------------------------------------------

struct SolveOptions {
  std::string in;
  int k = 0;
  std::uint64_t seed = 0;
  std::string executor = "auto";
  double confidence = 0.95;
  double floor = 0.25;
  bool charge_verification = false;
  int sim_qubits = 24;
  double sim_sqrt_limit = 20.0;
  std::string trace_path;
  std::string json_path;
};

int run_solve(const SolveOptions& opt) {
  const Graph g = load_graph(opt.in);
  if (opt.k < 1 || opt.k > g.vertex_count()) {
    throw std::invalid_argument("solve: need 1 <= k <= n");
  }
  const std::uint64_t space = binomial(g.vertex_count(), opt.k);
  bool use_sim = false;
  if (opt.executor == "sim") {
    use_sim = true;
  } else if (opt.executor == "auto") {
    const CounterSpec spec = CounterSpec::for_threshold(opt.k, 0);
    use_sim = std::sqrt(static_cast<double>(space)) <= opt.sim_sqrt_limit &&
              g.vertex_count() + spec.width <= opt.sim_qubits;
  } else if (opt.executor != "emulator") {
    throw std::invalid_argument("solve: --executor must be auto, sim or emulator");
  }

  SearchConfig cfg;
  cfg.confidence = opt.confidence;
  cfg.success_floor = opt.floor;
  cfg.seed = opt.seed;
  cfg.charge_verification = opt.charge_verification;
  const Executor ex = use_sim ? make_quantum_executor(opt.sim_qubits) : make_black_box_executor();
  const SearchTrace trace = adaptive_search(g, opt.k, cfg, ex);

  std::cout << "graph: " << opt.in << " (n=" << g.vertex_count() << ", m=" << g.edge_count_total()
            << ")\n"
            << "k: " << opt.k << "\n"
            << "executor: " << (use_sim ? "sim" : "emulator") << "\n"
            << "seed: " << opt.seed << "\n"
            << "best subset: " << sorted_vertices(trace.best_subset) << "\n"
            << "edges: " << trace.best_edges << "\n"
            << "oracle calls: " << trace.total_calls << "\n"
            << "certificate: optimal with probability at least " << opt.confidence << "\n";

  if (!opt.trace_path.empty()) {
    std::ostringstream out;
    write_trace_csv_header(out);
    write_trace_csv(out, trace, 0);
    write_file(opt.trace_path, out.str());
  }
  if (!opt.json_path.empty()) {
    json j;
    j["command"] = "solve";
    j["config"] = {{"in", opt.in},
                   {"k", opt.k},
                   {"seed", opt.seed},
                   {"executor", use_sim ? "sim" : "emulator"},
                   {"confidence", opt.confidence},
                   {"success_floor", opt.floor},
                   {"charge_verification", opt.charge_verification},
                   {"sim_qubits", opt.sim_qubits}};
    j["result"] = {{"best_subset", sorted_vertices(trace.best_subset)},
                   {"edges", trace.best_edges},
                   {"oracle_calls", trace.total_calls},
                   {"levels_visited", trace.levels_visited},
                   {"attempts", trace.attempts.size()}};
    write_file(opt.json_path, j.dump(2) + "\n");
  }
  return 0;
}

// --- convergence --------------------------------------------------------------

struct ConvergenceOptions {
  std::string in;
  int k = 0;
  int runs = 1000;
  std::uint64_t seed = 0;
  std::string algorithms = "grover,emulator,brute,sa";
  double band = 0.90;
  int sa_steps = 0;
  double sa_t0 = 1.0;
  double sa_alpha = 0.98;
  int sa_tenure = -1;
  int sim_qubits = 24;
  int jobs = 1;
  std::string out_prefix;
};

int run_convergence(const ConvergenceOptions& opt) {
  const Graph g = load_graph(opt.in);
  std::vector<SearchAlgorithm> algos;
  std::stringstream ss(opt.algorithms);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "grover") {
      algos.push_back(SearchAlgorithm::QuantumGrover);
    } else if (tok == "emulator") {
      algos.push_back(SearchAlgorithm::BlackBoxGrover);
    } else if (tok == "brute") {
      algos.push_back(SearchAlgorithm::BruteForce);
    } else if (tok == "sa") {
      algos.push_back(SearchAlgorithm::SimulatedAnnealing);
    } else {
      throw std::invalid_argument("convergence: unknown algorithm '" + tok + "'");
    }
  }
  if (algos.empty()) throw std::invalid_argument("convergence: no algorithms selected");

  ConvergenceConfig cfg;
  cfg.runs = opt.runs;
  cfg.seed = opt.seed;
  cfg.band = opt.band;
  cfg.sa = {opt.sa_steps, opt.sa_t0, opt.sa_alpha, opt.sa_tenure};
  cfg.sim_qubit_cap = opt.sim_qubits;
  cfg.jobs = opt.jobs;
  const auto series = convergence_experiment(g, opt.k, algos, cfg);

  std::ostringstream csv;
  write_convergence_csv(csv, series);
  write_file(opt.out_prefix + ".csv", csv.str());

  json j;
  j["command"] = "convergence";
  j["config"] = {{"in", opt.in},          {"k", opt.k},
                 {"runs", opt.runs},      {"seed", opt.seed},
                 {"band", opt.band},      {"algorithms", opt.algorithms},
                 {"sa_steps", opt.sa_steps}, {"sa_t0", opt.sa_t0},
                 {"sa_alpha", opt.sa_alpha}, {"sa_tenure", opt.sa_tenure},
                 {"jobs", opt.jobs}};
  json summary = json::object();
  for (const auto& s : series) {
    const auto& pts = s.points;
    summary[to_string(s.algorithm)] = {
        {"points", pts.size()},
        {"final_mean", pts.empty() ? 0.0 : pts.back().mean},
    };
  }
  j["results"] = summary;
  write_file(opt.out_prefix + ".json", j.dump(2) + "\n");
  std::cout << "wrote " << opt.out_prefix << ".csv and " << opt.out_prefix << ".json\n";
  return 0;
}

// --- scaling ------------------------------------------------------------------

struct ScalingOptions {
  std::vector<std::string> series;
  std::string algo = "grover";
  int graphs = 20;
  int runs = 20;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string executor = "auto";
  std::uint64_t max_n = 2'000'000;
  int n_boot = 2000;
  double ci = 0.99;
  int sa_graphs = 100;
  int sa_runs = 1000;
  int sa_steps = 0;
  double cost_cap = 1e9;
  int sim_qubits = 24;
  int jobs = 1;
  std::string out_prefix;
};

int run_scaling(const ScalingOptions& opt) {
  const std::vector<ScalingSeries> series = parse_series(opt.series);
  json j;
  j["command"] = "scaling";

  if (opt.algo == "grover") {
    ScalingConfig cfg;
    cfg.graphs = opt.graphs;
    cfg.runs = opt.runs;
    cfg.p_graph = opt.p;
    cfg.seed = opt.seed;
    cfg.policy = parse_policy(opt.executor);
    cfg.sim_qubit_cap = opt.sim_qubits;
    cfg.max_search_space = opt.max_n;
    cfg.n_boot = opt.n_boot;
    cfg.ci = opt.ci;
    cfg.jobs = opt.jobs;
    const auto points = scaling_experiment(series, cfg);

    std::ostringstream csv;
    write_scaling_csv(csv, points);
    write_file(opt.out_prefix + ".csv", csv.str());

    j["config"] = {{"algo", "grover"},   {"series", series_to_json(series)},
                   {"graphs", opt.graphs}, {"runs", opt.runs},
                   {"p", opt.p},         {"seed", opt.seed},
                   {"executor", opt.executor}, {"max_n", opt.max_n},
                   {"n_boot", opt.n_boot}, {"ci", opt.ci},
                   {"jobs", opt.jobs}};
    json fits = json::object();
    std::vector<std::pair<double, double>> pooled;
    for (const auto& s : series) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : points) {
        if (p.k == s.k) pts.emplace_back(static_cast<double>(p.search_space), p.mean_calls);
      }
      pooled.insert(pooled.end(), pts.begin(), pts.end());
      if (pts.size() >= 2) fits["k=" + std::to_string(s.k)] = fit_to_json(power_law_fit(pts));
    }
    if (pooled.size() >= 2) fits["pooled"] = fit_to_json(power_law_fit(pooled));
    j["fits"] = fits;
    json results = json::array();
    for (const auto& p : points) {
      results.push_back({{"k", p.k},
                         {"n", p.n},
                         {"search_space", p.search_space},
                         {"executor", p.executor},
                         {"mean_calls", p.mean_calls},
                         {"ci_lo", p.ci_lo},
                         {"ci_hi", p.ci_hi},
                         {"optimum_rate", p.optimum_rate}});
    }
    j["results"] = results;
  } else if (opt.algo == "sa") {
    SaScalingConfig cfg;
    cfg.graphs = opt.sa_graphs;
    cfg.runs_per_graph = opt.sa_runs;
    cfg.p_graph = opt.p;
    cfg.seed = opt.seed;
    cfg.sa.steps = opt.sa_steps;
    cfg.cost_cap = opt.cost_cap;
    cfg.max_search_space = opt.max_n;
    cfg.n_boot = opt.n_boot;
    cfg.ci = opt.ci;
    cfg.jobs = opt.jobs;
    const auto points = sa_scaling_experiment(series, cfg);

    std::ostringstream csv;
    write_sa_scaling_csv(csv, points);
    write_file(opt.out_prefix + ".csv", csv.str());

    j["config"] = {{"algo", "sa"},        {"series", series_to_json(series)},
                   {"graphs", opt.sa_graphs}, {"runs_per_graph", opt.sa_runs},
                   {"p", opt.p},          {"seed", opt.seed},
                   {"sa_steps", opt.sa_steps}, {"cost_cap", opt.cost_cap},
                   {"max_n", opt.max_n},  {"n_boot", opt.n_boot},
                   {"ci", opt.ci},        {"jobs", opt.jobs}};
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : points) {
      pts.emplace_back(static_cast<double>(p.search_space), p.mean_cost);
    }
    json fits = json::object();
    if (pts.size() >= 2) fits["pooled"] = fit_to_json(power_law_fit(pts));
    j["fits"] = fits;
    json results = json::array();
    for (const auto& p : points) {
      results.push_back({{"k", p.k},
                         {"n", p.n},
                         {"search_space", p.search_space},
                         {"mean_cost", p.mean_cost},
                         {"ci_lo", p.ci_lo},
                         {"ci_hi", p.ci_hi},
                         {"mean_success", p.mean_success},
                         {"capped_graphs", p.capped_graphs}});
    }
    j["results"] = results;
  } else {
    throw std::invalid_argument("scaling: --algo must be grover or sa");
  }

  write_file(opt.out_prefix + ".json", j.dump(2) + "\n");
  std::cout << "wrote " << opt.out_prefix << ".csv and " << opt.out_prefix << ".json\n";
  return 0;
}

// --- fit ----------------------------------------------------------------------

struct FitOptions {
  std::string in;
  std::string x_col = "search_space";
  std::string y_col = "mean_calls";
  std::string json_path;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

bool parse_double(const std::string& s, double& v) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto res = std::from_chars(begin, end, v);
  return res.ec == std::errc() && res.ptr == end;
}

int run_fit(const FitOptions& opt) {
  std::ifstream in(opt.in);
  if (!in) throw std::runtime_error("cannot open: " + opt.in);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("fit: empty table");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::size_t xi = 0, yi = 1;
  std::vector<std::pair<double, double>> pts;
  const std::vector<std::string> first = split_csv_line(line);
  double vx = 0.0, vy = 0.0;
  const bool headerless = first.size() >= 2 && parse_double(first[0], vx) && parse_double(first[1], vy);
  if (headerless) {
    pts.emplace_back(vx, vy);
  } else {
    bool have_x = false, have_y = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (first[i] == opt.x_col) {
        xi = i;
        have_x = true;
      }
      if (first[i] == opt.y_col) {
        yi = i;
        have_y = true;
      }
    }
    if (!have_x || !have_y) {
      throw std::invalid_argument("fit: columns '" + opt.x_col + "' and '" + opt.y_col +
                                  "' not found in header");
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() <= std::max(xi, yi)) throw std::invalid_argument("fit: short row");
    double x = 0.0, y = 0.0;
    if (!parse_double(cells[xi], x) || !parse_double(cells[yi], y)) {
      throw std::invalid_argument("fit: non-numeric cell");
    }
    pts.emplace_back(x, y);
  }
  const FitResult f = power_law_fit(pts);
  char buf[40];
  auto rounded = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  std::cout << "a = " << rounded(f.a) << "\n"
            << "b = " << rounded(f.b) << "\n"
            << "points = " << f.points << "\n"
            << "residual_rms = " << rounded(f.residual_rms) << "\n";
  if (!opt.json_path.empty()) {
    json j;
    j["command"] = "fit";
    j["config"] = {{"in", opt.in}, {"x_col", opt.x_col}, {"y_col", opt.y_col}};
    j["result"] = fit_to_json(f);
    write_file(opt.json_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"densest k-subgraph search: Grover-style threshold search, classical baselines, "
               "and the benchmark pipeline"};
  app.require_subcommand(1);
  // Precedence: command-line flags over config-file values over defaults.
  app.set_config("--config", "", "read options from an INI file");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random graph (edge-list format)");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "master seed (default 0)");
  gen_cmd->add_option("--out", gen.out, "output path")->required();
  gen_cmd->add_flag("--unique-densest", gen.unique_densest,
                    "condition on a unique densest k-subgraph (needs --k)");
  gen_cmd->add_option("--k", gen.k, "subset size for --unique-densest");
  gen_cmd->add_option("--max-attempts", gen.max_attempts, "rejection budget");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run the adaptive threshold search");
  solve_cmd->add_option("--in", solve.in, "graph file")->required();
  solve_cmd->add_option("--k", solve.k, "subset size")->required();
  solve_cmd->add_option("--seed", solve.seed, "master seed (default 0)");
  solve_cmd->add_option("--executor", solve.executor, "auto | sim | emulator");
  solve_cmd->add_option("--confidence", solve.confidence, "certificate confidence p");
  solve_cmd->add_option("--floor", solve.floor, "per-attempt success floor s");
  solve_cmd->add_flag("--charge-verification", solve.charge_verification,
                      "charge classical verification as oracle calls");
  solve_cmd->add_option("--sim-qubits", solve.sim_qubits, "simulator qubit cap");
  solve_cmd->add_option("--trace", solve.trace_path, "write the attempt trace CSV here");
  solve_cmd->add_option("--json", solve.json_path, "write a JSON summary here");

  ConvergenceOptions conv;
  CLI::App* conv_cmd = app.add_subcommand("convergence", "best-so-far curves per oracle call");
  conv_cmd->add_option("--in", conv.in, "graph file")->required();
  conv_cmd->add_option("--k", conv.k, "subset size")->required();
  conv_cmd->add_option("--runs", conv.runs, "independent runs per algorithm");
  conv_cmd->add_option("--seed", conv.seed, "master seed (default 0)");
  conv_cmd->add_option("--algorithms", conv.algorithms,
                       "comma list of grover,emulator,brute,sa");
  conv_cmd->add_option("--band", conv.band, "central band mass (default 0.90)");
  conv_cmd->add_option("--sa-steps", conv.sa_steps, "oracle calls per SA run (0 = 30n)");
  conv_cmd->add_option("--sa-t0", conv.sa_t0, "SA initial temperature");
  conv_cmd->add_option("--sa-alpha", conv.sa_alpha, "SA cooling factor");
  conv_cmd->add_option("--sa-tenure", conv.sa_tenure, "SA tabu tenure (-1 = k)");
  conv_cmd->add_option("--sim-qubits", conv.sim_qubits, "simulator qubit cap");
  conv_cmd->add_option("--jobs", conv.jobs, "worker threads");
  conv_cmd->add_option("--out-prefix", conv.out_prefix, "output prefix")->required();

  ScalingOptions scale;
  CLI::App* scale_cmd = app.add_subcommand("scaling", "oracle cost vs search-space size");
  scale_cmd->add_option("--series", scale.series, "series spec K:NMIN:NMAX[:STEP] (repeatable)")
      ->required();
  scale_cmd->add_option("--algo", scale.algo, "grover | sa");
  scale_cmd->add_option("--graphs", scale.graphs, "graphs per point (grover)");
  scale_cmd->add_option("--runs", scale.runs, "runs per graph (grover)");
  scale_cmd->add_option("--p", scale.p, "edge probability");
  scale_cmd->add_option("--seed", scale.seed, "master seed (default 0)");
  scale_cmd->add_option("--executor", scale.executor, "auto | sim | emulator");
  scale_cmd->add_option("--max-n", scale.max_n, "skip points with C(n,k) beyond this");
  scale_cmd->add_option("--n-boot", scale.n_boot, "bootstrap replicates");
  scale_cmd->add_option("--ci", scale.ci, "confidence interval mass");
  scale_cmd->add_option("--sa-graphs", scale.sa_graphs, "graphs per point (sa)");
  scale_cmd->add_option("--sa-runs", scale.sa_runs, "runs per graph (sa)");
  scale_cmd->add_option("--sa-steps", scale.sa_steps, "oracle calls per SA run (0 = 30n)");
  scale_cmd->add_option("--cost-cap", scale.cost_cap, "recorded cost when SA never succeeds");
  scale_cmd->add_option("--sim-qubits", scale.sim_qubits, "simulator qubit cap");
  scale_cmd->add_option("--jobs", scale.jobs, "worker threads");
  scale_cmd->add_option("--out-prefix", scale.out_prefix, "output prefix")->required();

  FitOptions fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "log-log power-law fit of a table");
  fit_cmd->add_option("--in", fit.in, "CSV table")->required();
  fit_cmd->add_option("--x-col", fit.x_col, "x column name (default search_space)");
  fit_cmd->add_option("--y-col", fit.y_col, "y column name (default mean_calls)");
  fit_cmd->add_option("--json", fit.json_path, "write a JSON summary here");

  try {
    app.parse(argc, argv);
    if (gen_cmd->parsed()) {
      if (gen.unique_densest && gen.k < 1) {
        throw std::invalid_argument("gen: --unique-densest requires --k");
      }
      return run_gen(gen);
    }
    if (solve_cmd->parsed()) return run_solve(solve);
    if (conv_cmd->parsed()) return run_convergence(conv);
    if (scale_cmd->parsed()) return run_scaling(scale);
    if (fit_cmd->parsed()) return run_fit(fit);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const generation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
