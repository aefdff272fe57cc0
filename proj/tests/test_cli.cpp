// Drives the dks binary end to end through a temporary directory. The
// binary path arrives via the DKS_BIN environment variable (set by ctest).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dks/graph.hpp"

namespace fs = std::filesystem;

namespace {

int checks = 0;
int failures = 0;

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const char* bin_env = std::getenv("DKS_BIN");
  if (!bin_env) {
    std::cerr << "DKS_BIN not set\n";
    return 1;
  }
  const std::string bin = bin_env;
  const fs::path dir = fs::temp_directory_path() / "dks_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string graph_path = (dir / "g.txt").string();
  const std::string quiet = " > " + (dir / "stdout.txt").string() + " 2> " +
                            (dir / "stderr.txt").string();

  // gen: deterministic artifact, byte-identical on rerun.
  expect(run(bin + " gen --n 10 --p 0.5 --seed 7 --out " + graph_path + quiet) == 0,
         "gen exits 0");
  const std::string first_bytes = slurp(graph_path);
  expect(!first_bytes.empty(), "gen wrote a file");
  expect(run(bin + " gen --n 10 --p 0.5 --seed 7 --out " + graph_path + quiet) == 0,
         "gen rerun exits 0");
  expect(slurp(graph_path) == first_bytes, "gen rerun is byte-identical");

  // The written graph parses and matches the library generator.
  const dks::Graph g = dks::load_graph(graph_path);
  expect(g.vertex_count() == 10, "generated graph has n=10");
  expect(g.edges() == dks::erdos_renyi(10, 0.5, 7).edges(), "file matches the library generator");

  // solve: result matches a brute-force recheck of the printed edge count.
  const std::string solve_out = (dir / "solve.txt").string();
  expect(run(bin + " solve --in " + graph_path + " --k 4 --seed 1 --json " +
             (dir / "solve.json").string() + " > " + solve_out + " 2> /dev/null") == 0,
         "solve exits 0");
  {
    const std::string out = slurp(solve_out);
    const auto pos = out.find("edges: ");
    expect(pos != std::string::npos, "solve prints edges");
    const int reported = std::atoi(out.c_str() + pos + 7);
    expect(reported == dks::brute_force_densest(g, 4).best_edges,
           "solve edge count matches brute force");
    expect(out.find("certificate: optimal with probability at least 0.95") != std::string::npos,
           "solve prints the confidence statement");
    expect(out.find("best subset: ") != std::string::npos, "solve prints the subset");
  }

  // usage errors exit 1.
  expect(run(bin + " solve --in " + graph_path + " --k 11 --seed 1" + quiet) == 1,
         "solve with k > n exits 1");
  expect(run(bin + " solve --definitely-not-a-flag" + quiet) == 1, "bad flag exits 1");
  expect(run(bin + " gen --n 6 --p 1.0 --unique-densest --k 3 --max-attempts 5 --out " +
             (dir / "never.txt").string() + quiet) == 2,
         "generation cap exits 2");

  // fit: exact table recovers a=2, b=0.5.
  {
    const fs::path table = dir / "table.csv";
    std::ofstream t(table);
    t << "search_space,mean_calls\n";
    for (double x : {100.0, 400.0, 2500.0}) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, 2.0 * std::sqrt(x));
      t << buf;
    }
    t.close();
    const std::string fit_out = (dir / "fit.txt").string();
    expect(run(bin + " fit --in " + table.string() + " > " + fit_out + " 2> /dev/null") == 0,
           "fit exits 0");
    const std::string out = slurp(fit_out);
    expect(out.find("a = 2\n") != std::string::npos, "fit prints a = 2");
    expect(out.find("b = 0.5\n") != std::string::npos, "fit prints b = 0.5");
  }

  // headerless two-column table works too.
  {
    const fs::path table = dir / "plain.csv";
    std::ofstream t(table);
    t << "10,30\n100,300\n1000,3000\n";
    t.close();
    const std::string fit_out = (dir / "fit2.txt").string();
    expect(run(bin + " fit --in " + table.string() + " > " + fit_out + " 2> /dev/null") == 0,
           "headerless fit exits 0");
    expect(slurp(fit_out).find("b = 1\n") != std::string::npos, "headerless fit prints b = 1");
  }

  // config file supplies options; explicit flags override it.
  {
    const fs::path cfg = dir / "gen.ini";
    const std::string cfg_graph = (dir / "cfg_graph.txt").string();
    std::ofstream c(cfg);
    c << "[gen]\nn=10\np=0.5\nseed=7\nout=" << cfg_graph << "\n";
    c.close();
    expect(run(bin + " --config " + cfg.string() + " gen" + quiet) == 0, "config-driven gen");
    expect(slurp(cfg_graph) == first_bytes, "config-driven gen matches the flag-driven graph");
    expect(run(bin + " --config " + cfg.string() + " gen --seed 8" + quiet) == 0,
           "flag overrides config");
    expect(slurp(cfg_graph) != first_bytes, "overriding the seed changes the artifact");
  }

  // convergence + scaling produce their tables and reruns are byte-identical.
  {
    const std::string prefix = (dir / "conv").string();
    expect(run(bin + " convergence --in " + graph_path +
               " --k 3 --runs 8 --seed 3 --algorithms emulator,brute,sa --out-prefix " + prefix +
               quiet) == 0,
           "convergence exits 0");
    const std::string csv = slurp(prefix + ".csv");
    expect(csv.rfind("algorithm,call_idx,mean_best,band_lo,band_hi\n", 0) == 0,
           "convergence csv header");
    const std::string json_bytes = slurp(prefix + ".json");
    expect(run(bin + " convergence --in " + graph_path +
               " --k 3 --runs 8 --seed 3 --algorithms emulator,brute,sa --out-prefix " + prefix +
               quiet) == 0,
           "convergence rerun exits 0");
    expect(slurp(prefix + ".csv") == csv, "convergence rerun csv byte-identical");
    expect(slurp(prefix + ".json") == json_bytes, "convergence rerun json byte-identical");
  }
  {
    const std::string prefix = (dir / "scal").string();
    expect(run(bin + " scaling --series 3:7:9 --graphs 2 --runs 3 --seed 5 --n-boot 100" +
               " --executor emulator --out-prefix " + prefix + quiet) == 0,
           "scaling exits 0");
    const std::string csv = slurp(prefix + ".csv");
    expect(csv.rfind("k,n,search_space,executor,mean_calls,ci_lo,ci_hi,optimum_rate\n", 0) == 0,
           "scaling csv header");
    expect(slurp(prefix + ".json").find("\"fits\"") != std::string::npos,
           "scaling json carries fits");
    // The emitted table feeds the fit subcommand directly.
    expect(run(bin + " fit --in " + prefix + ".csv" + quiet) == 0, "fit consumes scaling csv");
  }

  std::printf("%d checks, %d failures\n", checks, failures);
  return failures == 0 ? 0 : 1;
}
