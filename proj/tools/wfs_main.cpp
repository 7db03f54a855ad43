// Command-line front end: solve a program file, cross-validate the solvers on
// random programs, benchmark the generator families, or emit a generated
// program.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wfs/gen.hpp"
#include "wfs/oracle.hpp"
#include "wfs/solver.hpp"
#include "wfs/textio.hpp"
#include "wfs/trace.hpp"

namespace {

constexpr int kExitParseError = 1;
constexpr int kExitNotLp1 = 2;
constexpr int kExitMismatch = 3;

int cmd_solve(const std::string& file, const std::string& algorithm,
              const std::string& format, bool fallback,
              const std::string& trace_path) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open " << file << "\n";
    return kExitParseError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  wfs::Program p;
  try {
    p = wfs::textio::parse(buf.str());
  } catch (const wfs::textio::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kExitParseError;
  }

  std::ofstream trace_file;
  std::unique_ptr<wfs::JsonLinesTraceSink> trace;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    trace = std::make_unique<wfs::JsonLinesTraceSink>(p, trace_file);
  }

  wfs::WfsResult r;
  if (algorithm == "vg") {
    r = wfs::solver::solve_vg(p);
  } else if (algorithm == "alg2") {
    r = wfs::solver::solve_alg2(p);
  } else {
    try {
      r = wfs::solver::solve_alg3_topdown(p, nullptr, trace.get());
    } catch (const wfs::solver::NotLp1Error& e) {
      if (!fallback) {
        std::cerr << file << ": " << e.what() << "\n";
        return kExitNotLp1;
      }
      r = wfs::solver::solve_alg3_full(p, nullptr, trace.get());
    }
  }
  std::cout << wfs::textio::serialize_result(
      p, r,
      format == "json" ? wfs::textio::ResultFormat::Json
                       : wfs::textio::ResultFormat::Text);
  if (format == "json") std::cout << "\n";
  return 0;
}

int cmd_check(std::uint64_t count, std::uint64_t max_atoms,
              std::uint64_t max_rules, double p_neg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    wfs::gen::GeneratorSpec spec;
    spec.family = wfs::gen::Family::RandomLp1;
    spec.n = 1 + rng() % max_atoms;
    spec.m = rng() % (max_rules + 1);
    spec.p_neg = p_neg;
    spec.seed = rng();
    wfs::Program p = wfs::gen::generate(spec);
    wfs::WfsResult expected = wfs::oracle::naive_wfs(p);
    wfs::WfsResult vg = wfs::solver::solve_vg(p);
    wfs::WfsResult a2 = wfs::solver::solve_alg2(p);
    wfs::WfsResult a3 = wfs::solver::solve_alg3_topdown(p);
    if (vg != expected || a2 != expected || a3 != expected) {
      std::cerr << "mismatch on program " << i << " (seed " << spec.seed
                << "):\n";
      std::cout << wfs::textio::serialize_program(p);
      return kExitMismatch;
    }
  }
  std::cout << "checked " << count << " programs, all solvers agree\n";
  return 0;
}

void bench_one(const std::string& family, std::uint64_t n,
               const std::string& algorithm, std::uint64_t reps) {
  wfs::gen::GeneratorSpec spec;
  spec.family = wfs::gen::family_from_name(family);
  spec.n = n;
  spec.k = n;  // ballast width tracks the scale parameter
  wfs::Program p = wfs::gen::generate(spec);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    wfs::solver::SolveStats stats;
    if (algorithm == "vg")
      wfs::solver::solve_vg(p, &stats);
    else if (algorithm == "alg2")
      wfs::solver::solve_alg2(p, &stats);
    else
      wfs::solver::solve_alg3_topdown(p, &stats);
    std::cout << family << ',' << n << ',' << algorithm << ',' << p.n_atoms()
              << ',' << p.size() << ',' << stats.iterations << ','
              << stats.wall_time.count() << ',' << stats.in_list_inspections
              << '\n';
  }
}

int cmd_bench(const std::string& family, const std::string& sizes,
              const std::string& algorithms, std::uint64_t reps) {
  std::cout << "family,n,algorithm,atoms,size,iterations,wall_time_ns,"
               "in_list_inspections\n";
  std::vector<std::uint64_t> ns;
  {
    std::stringstream ss(sizes);
    std::string item;
    while (std::getline(ss, item, ','))
      ns.push_back(static_cast<std::uint64_t>(std::stod(item)));
  }
  std::vector<std::string> algs;
  {
    std::stringstream ss(algorithms);
    std::string item;
    while (std::getline(ss, item, ',')) algs.push_back(item);
  }
  for (std::uint64_t n : ns)
    for (const auto& a : algs) bench_one(family, n, a, reps);
  return 0;
}

int cmd_gen(const std::string& family, std::uint64_t n, std::uint64_t k,
            std::uint64_t m, double p_neg, std::uint64_t seed) {
  wfs::gen::GeneratorSpec spec;
  spec.family = wfs::gen::family_from_name(family);
  spec.n = n;
  spec.k = k;
  spec.m = m;
  spec.p_neg = p_neg;
  spec.seed = seed;
  std::cout << wfs::textio::serialize_program(wfs::gen::generate(spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-founded semantics solver"};
  app.require_subcommand(1);

  std::string file, algorithm = "topdown", format = "text", trace_path;
  bool fallback = false;
  auto* solve = app.add_subcommand("solve", "solve a program file");
  solve->add_option("file", file)->required();
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"vg", "alg2", "topdown"}));
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--fallback", fallback,
                  "fall back to the bottom-up delta operator on non-LP1 input");
  solve->add_option("--trace-json", trace_path);

  std::uint64_t count = 100, max_atoms = 20, max_rules = 60, seed = 0;
  double p_neg = 0.2;
  auto* check = app.add_subcommand("check", "randomized oracle cross-validation");
  check->add_option("--count", count);
  check->add_option("--max-atoms", max_atoms);
  check->add_option("--max-rules", max_rules);
  check->add_option("--p-neg", p_neg);
  check->add_option("--seed", seed);

  std::string family = "chain", sizes = "1000,10000", algorithms = "vg,topdown";
  std::uint64_t reps = 1;
  auto* bench = app.add_subcommand("bench", "benchmark generator families");
  bench->add_option("--family", family);
  bench->add_option("--sizes", sizes);
  bench->add_option("--algorithms", algorithms);
  bench->add_option("--reps", reps);

  std::uint64_t gn = 10, gk = 0, gm = 0;
  auto* gen = app.add_subcommand("gen", "emit a generated program");
  gen->add_option("--family", family)->required();
  gen->add_option("--n", gn)->required();
  gen->add_option("--k", gk);
  gen->add_option("--m", gm);
  gen->add_option("--p-neg", p_neg);
  gen->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(file, algorithm, format, fallback, trace_path);
    if (check->parsed())
      return cmd_check(count, max_atoms, max_rules, p_neg, seed);
    if (bench->parsed()) return cmd_bench(family, sizes, algorithms, reps);
    if (gen->parsed()) return cmd_gen(family, gn, gk, gm, p_neg, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
