// Acceptance gate: one line per criterion, PASS or FAIL with a reason.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wfs/gen.hpp"
#include "wfs/oracle.hpp"
#include "wfs/solver.hpp"

using namespace wfs;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& why = "") {
  if (ok) {
    std::printf("criterion %d (%s): PASS\n", idx, name);
  } else {
    std::printf("criterion %d (%s): FAIL%s%s\n", idx, name,
                why.empty() ? "" : " - ", why.c_str());
    ++failures;
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct MergeSink : TraceSink {
  const Program* p;
  std::vector<std::set<std::string>> merges, reports;
  explicit MergeSink(const Program& prog) : p(&prog) {}
  void on_merge(const std::vector<AtomId>& m) override {
    merges.push_back(wfs_test::names(*p, m));
  }
  void on_report(const std::vector<AtomId>& v) override {
    reports.push_back(wfs_test::names(*p, v));
  }
};

// ---- 1. golden search trace on the eleven-atom example ----------------------
void criterion1() {
  auto t0 = Clock::now();
  Program q = gen::generate({gen::Family::PaperExample, 0});
  reducts::ShrinkingProgram sp = reducts::shrink_init(q);
  topdown::Scratch scratch(static_cast<AtomId>(q.n_atoms()));
  MergeSink sink(q);
  auto v = topdown::false_subset(sp, scratch, nullptr, &sink);

  const std::set<std::string> ghjk{"g", "h", "j", "k"};
  std::string why;
  bool ok = wfs_test::names(q, v) == ghjk;
  if (!ok) why = "wrong result set";
  const std::vector<std::set<std::string>> want_merges = {
      {"a", "c"}, {"d", "e", "f"}, {"g", "j"}, {"h", "k"}, ghjk};
  if (ok && sink.merges != want_merges) {
    ok = false;
    why = "merge sequence mismatch";
  }
  if (ok && (sink.reports.size() != 1 || sink.reports[0] != ghjk)) {
    ok = false;
    why = "report event mismatch";
  }
  if (ok && seconds_since(t0) >= 1.0) {
    ok = false;
    why = "took >= 1s";
  }
  report(1, "golden trace", ok, why);
}

// ---- 2. four-way equivalence on random LP1 programs -------------------------
void criterion2() {
  auto t0 = Clock::now();
  std::string why;
  bool ok = true;
  for (std::uint64_t i = 0; i < 1000 && ok; ++i) {
    gen::GeneratorSpec spec;
    spec.family = gen::Family::RandomLp1;
    spec.n = 1 + i % 30;
    spec.m = i % 121;
    spec.p_neg = (i % 2) ? 0.5 : 0.2;
    spec.seed = i * 2654435761u;
    Program p = gen::generate(spec);
    WfsResult want = oracle::naive_wfs(p);
    for (const WfsResult& got :
         {solver::solve_vg(p), solver::solve_alg2(p),
          solver::solve_alg3_topdown(p)}) {
      if (!(got.true_set == want.true_set && got.false_set == want.false_set)) {
        ok = false;
        why = "mismatch at seed index " + std::to_string(i);
        break;
      }
    }
  }
  double dt = seconds_since(t0);
  if (ok && dt >= 60.0) {
    ok = false;
    why = "took " + std::to_string(dt) + "s";
  }
  report(2, "oracle equivalence", ok, why);
}

// ---- 3. operator properties -------------------------------------------------
void criterion3() {
  std::mt19937_64 rng(777);
  std::string why;
  bool ok = true;
  auto subset_of = [](const Program& p, const AtomSet& a, const AtomSet& b) {
    for (AtomId x = 0; x < p.n_atoms(); ++x)
      if (a.contains(x) && !b.contains(x)) return false;
    return true;
  };
  for (int round = 0; round < 600 && ok; ++round) {
    bool inside = round < 300;  // first population: F within the false part
    Program p = wfs_test::random_program(rng, 10, 24);
    AtomSet fwfs = oracle::naive_wfs(p).false_set;
    AtomSet f(p.n_atoms());
    if (inside) {
      for (AtomId a = 0; a < p.n_atoms(); ++a)
        if (fwfs.contains(a) && rng() % 2) f.insert(a);
    } else {
      f = wfs_test::random_subset(rng, p.n_atoms());
    }
    AtomSet f2 = f;
    for (AtomId a = 0; a < p.n_atoms(); ++a)
      if (rng() % 3 == 0) f2.insert(a);
    if (inside) {
      // keep the larger set inside the false part as well
      AtomSet trimmed(p.n_atoms());
      for (AtomId a = 0; a < p.n_atoms(); ++a)
        if (f2.contains(a) && (fwfs.contains(a) || f.contains(a)))
          trimmed.insert(a);
      f2 = trimmed;
    }
    AtomSet bf = reducts::op_B(p, f);
    if (!subset_of(p, bf, reducts::op_B(p, f2))) {
      ok = false;
      why = "monotonicity";
    } else if (!subset_of(p, reducts::op_A(p, f), bf)) {
      ok = false;
      why = "A(F) not within B(F)";
    } else if (!subset_of(p, f, bf)) {
      ok = false;
      why = "F not within B(F)";
    } else if (inside && !subset_of(p, bf, fwfs)) {
      ok = false;
      why = "B(F) escapes the false part";
    }
    if (ok) {
      AtomSet lfp(p.n_atoms());
      for (;;) {
        AtomSet next = reducts::op_B(p, lfp);
        if (next == lfp) break;
        lfp = next;
      }
      if (!(lfp == fwfs)) {
        ok = false;
        why = "lfp(B) differs from the oracle";
      }
    }
  }
  report(3, "operator properties", ok, why);
}

// ---- 4. false_subset soundness on Horn input --------------------------------
void criterion4() {
  std::mt19937_64 rng(4242);
  std::string why;
  bool ok = true;
  for (int it = 0; it < 1000 && ok; ++it) {
    std::size_t n = 1 + rng() % 14;
    std::size_t m = rng() % 30;
    ProgramBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.intern("x" + std::to_string(i));
    for (std::size_t r = 0; r < m; ++r) {
      Rule rule;
      rule.head = static_cast<AtomId>(rng() % n);
      if (rng() % 2) rule.pos_body.push_back(static_cast<AtomId>(rng() % n));
      b.add_rule(std::move(rule));
    }
    Program p = b.finish();
    reducts::ShrinkingProgram sp = reducts::shrink_init(p);
    topdown::Scratch scratch(static_cast<AtomId>(n));
    auto v = topdown::false_subset(sp, scratch);
    AtomSet lm = oracle::naive_lm(reducts::h_reduct(p));
    for (AtomId a : v)
      if (lm.contains(a)) {
        ok = false;
        why = "reported an accessible atom";
      }
    if (ok && !oracle::check_unfounded(sp, v)) {
      ok = false;
      why = "externally supported set";
    }
    if (ok && v.empty() != (lm.count() == n)) {
      ok = false;
      why = "emptiness mismatch";
    }
  }
  report(4, "unfounded-set soundness", ok, why);
}

// ---- 5. asymptotic work counters -------------------------------------------
double loglog_slope(const std::vector<double>& ns,
                    const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = ns.size();
  for (std::size_t i = 0; i < k; ++i) {
    double x = std::log(ns[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

void criterion5() {
  auto t0 = Clock::now();
  const std::vector<double> ns = {50, 100, 200, 400};
  std::vector<double> td_counts, vg_counts, td_wall, vg_wall;
  for (double nd : ns) {
    auto n = static_cast<std::uint64_t>(nd);
    Program p = gen::generate({gen::Family::Ballast, n, n});
    solver::SolveStats td, vg;
    // Counters are deterministic; wall times take the best of three runs.
    double td_best = 1e9, vg_best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
      solver::solve_alg3_topdown(p, &td);
      solver::solve_vg(p, &vg);
      td_best =
          std::min(td_best, std::chrono::duration<double>(td.wall_time).count());
      vg_best =
          std::min(vg_best, std::chrono::duration<double>(vg.wall_time).count());
    }
    td_counts.push_back(static_cast<double>(td.in_list_inspections));
    vg_counts.push_back(static_cast<double>(vg.in_list_inspections));
    td_wall.push_back(td_best);
    vg_wall.push_back(vg_best);
  }
  double td_slope = loglog_slope(ns, td_counts);
  double vg_slope = loglog_slope(ns, vg_counts);
  double ratio_100 = vg_wall[1] / td_wall[1];
  double ratio_400 = vg_wall[3] / td_wall[3];
  std::string why;
  bool ok = true;
  char buf[160];
  if (td_slope > 2.2) {
    ok = false;
    std::snprintf(buf, sizeof buf, "incremental counter slope %.2f > 2.2",
                  td_slope);
    why = buf;
  } else if (vg_slope < 2.7) {
    ok = false;
    std::snprintf(buf, sizeof buf, "recompute counter slope %.2f < 2.7",
                  vg_slope);
    why = buf;
  } else if (ratio_400 < 2.0 * ratio_100) {
    ok = false;
    std::snprintf(buf, sizeof buf, "wall ratio %.1f at n=400 vs %.1f at n=100",
                  ratio_400, ratio_100);
    why = buf;
  } else if (seconds_since(t0) >= 120.0) {
    ok = false;
    why = "took >= 120s";
  }
  report(5, "scaling counters", ok, why);
}

// ---- 6. linear regime at a million atoms ------------------------------------
std::size_t peak_rss_bytes() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream ss(line.substr(6));
      std::size_t kb = 0;
      ss >> kb;
      return kb * 1024;
    }
  }
  return 0;
}

void criterion6() {
  const std::uint64_t n = 1000000;
  Program p = gen::generate({gen::Family::Chain, n});
  std::string why;
  bool ok = true;
  double base_time = 0;
  {
    auto t0 = Clock::now();
    WfsResult r = solver::solve_alg3_topdown(p);
    base_time = seconds_since(t0);
    if (r.true_set.count() != n || r.false_set.count() != 0) {
      ok = false;
      why = "wrong answer on the chain";
    }
  }
  char buf[160];
  if (ok && base_time >= 5.0) {
    ok = false;
    std::snprintf(buf, sizeof buf, "solve took %.2fs", base_time);
    why = buf;
  }
  if (ok) {
    std::size_t peak = peak_rss_bytes();
    double per_occ = static_cast<double>(peak) / static_cast<double>(p.size());
    if (per_occ > 600.0) {
      ok = false;
      std::snprintf(buf, sizeof buf, "peak memory %.0f bytes per occurrence",
                    per_occ);
      why = buf;
    }
  }
  if (ok) {
    // Same atoms, every rule duplicated: twice the size, same structure.
    ProgramBuilder b;
    for (const auto& name : p.atom_names()) b.intern(name);
    for (const Rule& r : p.rules()) {
      b.add_rule(Rule(r));
      b.add_rule(Rule(r));
    }
    Program doubled = b.finish();
    double best_doubled = 1e9, best_base = base_time;
    for (int rep = 0; rep < 2; ++rep) {
      auto t0 = Clock::now();
      solver::solve_alg3_topdown(doubled);
      best_doubled = std::min(best_doubled, seconds_since(t0));
      auto t1 = Clock::now();
      solver::solve_alg3_topdown(p);
      best_base = std::min(best_base, seconds_since(t1));
    }
    if (best_doubled >= 2.5 * best_base) {
      ok = false;
      std::snprintf(buf, sizeof buf, "doubled size ran %.2fx slower",
                    best_doubled / best_base);
      why = buf;
    }
  }
  report(6, "linear regime", ok, why);
}

// ---- 7. incremental structures equal batch recomputation --------------------
void criterion7() {
  std::mt19937_64 rng(70707);
  std::string why;
  bool ok = true;
  for (int it = 0; it < 500 && ok; ++it) {
    Program p = wfs_test::random_program(rng, 10, 24);
    std::size_t n = p.n_atoms();
    reducts::ShrinkingProgram sp = reducts::shrink_init(p);
    AtomSet f(n), t(n);
    int steps = 1 + rng() % 4;
    for (int s = 0; s < steps && ok; ++s) {
      std::vector<AtomId> df, dt;
      for (AtomId a = 0; a < n; ++a) {
        if (f.contains(a) || t.contains(a)) continue;
        auto roll = rng() % 5;
        if (roll == 0) df.push_back(a);
        else if (roll == 1) dt.push_back(a);
      }
      sp.shrink_apply(df, dt);
      for (AtomId a : df) f.insert(a);
      for (AtomId a : dt) t.insert(a);
      Program batch = reducts::restrict(p, f, t);
      std::vector<Rule> alive;
      for (auto r : sp.alive_rule_indices()) alive.push_back(p.rules()[r]);
      if (!(alive == batch.rules())) {
        ok = false;
        why = "live rule set diverged from batch restriction";
      }
    }
    if (!ok) break;
    // Incremental fact batches must match one batch least-model run.
    horn::HornProgram q = reducts::h_reduct(p);
    std::vector<AtomId> facts;
    for (AtomId a = 0; a < n; ++a)
      if (rng() % 2) facts.push_back(a);
    horn::DerivationEngine e(q);
    e.assert_facts({});
    std::size_t pos = 0;
    while (pos < facts.size()) {
      std::size_t len = rng() % (facts.size() - pos) + 1;
      e.assert_facts(
          std::vector<AtomId>(facts.begin() + pos, facts.begin() + pos + len));
      pos += len;
    }
    horn::HornProgram with_facts = q;
    for (AtomId a : facts) with_facts.rules.push_back({a, {}});
    AtomSet expect = oracle::naive_lm(with_facts);
    for (AtomId a = 0; a < n; ++a)
      if (e.is_derived(a) != expect.contains(a)) {
        ok = false;
        why = "incremental derivations diverged from batch least model";
      }
  }
  report(7, "incremental equals batch", ok, why);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  return failures;
}
