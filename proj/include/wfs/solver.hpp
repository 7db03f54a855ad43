#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wfs/core.hpp"
#include "wfs/horn.hpp"
#include "wfs/reducts.hpp"
#include "wfs/topdown.hpp"
#include "wfs/trace.hpp"

namespace wfs::solver {

struct SolveStats {
  std::size_t iterations = 0;
  // For the top-down instantiation this counts IN-list element inspections;
  // for the bottom-up algorithms it counts rule-body-occurrence visits.
  std::uint64_t in_list_inspections = 0;
  std::uint64_t rules_deleted = 0;
  std::chrono::nanoseconds wall_time{0};
};

class NotLp1Error : public std::runtime_error {
 public:
  NotLp1Error()
      : std::runtime_error(
            "program has a rule with more than one positive body atom") {}
};

namespace detail {

class Timer {
 public:
  explicit Timer(SolveStats* stats) : stats_(stats) {
    start_ = std::chrono::steady_clock::now();
  }
  ~Timer() {
    if (stats_)
      stats_->wall_time = std::chrono::steady_clock::now() - start_;
  }

 private:
  SolveStats* stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Alternating fixpoint, recomputing both sets from scratch each round:
// T := GL(complement F); F := complement GL(T); until F stabilizes.
inline WfsResult solve_vg(const Program& p, SolveStats* stats = nullptr) {
  detail::Timer timer(stats);
  const std::size_t n = p.n_atoms();
  AtomSet f(n), t(n);
  for (;;) {
    if (stats) ++stats->iterations;
    // T := true(LM(P u not(F)))
    horn::DerivationEngine e(horn::extended_horn(p));
    std::vector<AtomId> facts;
    for (AtomId a = 0; a < n; ++a)
      if (f.contains(a)) facts.push_back(horn::not_atom(p, a));
    t = AtomSet(n);
    for (AtomId a : e.assert_facts(facts))
      if (a < n) t.insert(a);
    // F := complement LM(P_T^h)
    horn::DerivationEngine e2(reducts::h_reduct(reducts::reduct_m(p, t)));
    AtomSet lm(n);
    for (AtomId a : e2.assert_facts({})) lm.insert(a);
    AtomSet f_next(n);
    for (AtomId a = 0; a < n; ++a)
      if (!lm.contains(a)) f_next.insert(a);
    if (stats) stats->in_list_inspections += e.work() + e2.work();
    if (f_next == f) break;
    f = f_next;
  }
  return {t, f};
}

// Operator-B iteration: F grows by the full complement of LM(P_{F,T}^h).
inline WfsResult solve_alg2(const Program& p, SolveStats* stats = nullptr) {
  detail::Timer timer(stats);
  const std::size_t n = p.n_atoms();
  AtomSet f(n), t(n);
  for (;;) {
    if (stats) ++stats->iterations;
    t = reducts::gl(p, reducts::complement(p, f));
    AtomSet lm = horn::least_model(
        reducts::h_reduct(reducts::restrict(p, f, t)));
    bool grew = false;
    for (AtomId a = 0; a < n; ++a)
      if (!f.contains(a) && !lm.contains(a)) grew |= f.insert(a);
    if (!grew) break;
  }
  return {t, f};
}

// A Delta_w operator: given the accumulated F and the live P_{F,T}, returns
// a set of new false atoms. Must return a subset of complement(F) \ LM(Q^h),
// empty exactly when that difference is empty.
using DeltaWPlug = std::function<std::vector<AtomId>(
    const AtomSet& f, const reducts::ShrinkingProgram& q)>;

// The Van Gelder instantiation: the whole complement(F) \ LM(Q^h).
inline std::vector<AtomId> delta_w_full(const AtomSet& /*f*/,
                                        const reducts::ShrinkingProgram& q,
                                        SolveStats* stats = nullptr) {
  const AtomId n = q.n_atoms();
  const auto& rules = q.program().rules();
  std::vector<std::uint32_t> cnt(q.n_rules());
  std::vector<std::vector<std::uint32_t>> watch(n);
  std::vector<AtomId> agenda;
  std::vector<char> derived(n, 0);
  std::uint64_t work = 0;
  for (std::uint32_t r = 0; r < q.n_rules(); ++r) {
    if (!q.rule_alive(r)) continue;
    cnt[r] = static_cast<std::uint32_t>(rules[r].pos_body.size());
    for (AtomId a : rules[r].pos_body) {
      watch[a].push_back(r);
      ++work;
    }
    if (cnt[r] == 0) agenda.push_back(rules[r].head);
  }
  while (!agenda.empty()) {
    AtomId a = agenda.back();
    agenda.pop_back();
    if (derived[a]) continue;
    derived[a] = 1;
    for (std::uint32_t r : watch[a]) {
      ++work;
      if (--cnt[r] == 0) agenda.push_back(rules[r].head);
    }
  }
  if (stats) stats->in_list_inspections += work;
  std::vector<AtomId> df;
  for (AtomId a = 0; a < n; ++a)
    if (q.atom_alive(a) && !derived[a]) df.push_back(a);
  return df;
}

// Incremental alternating fixpoint: one persistent derivation engine over the
// extended alphabet carries T forward, and the live P_{F,T} shrinks in place.
inline WfsResult solve_alg3(const Program& p, const DeltaWPlug& delta_w,
                            SolveStats* stats = nullptr,
                            TraceSink* trace = nullptr) {
  detail::Timer timer(stats);
  const std::size_t n = p.n_atoms();
  AtomSet f(n), t(n);
  horn::DerivationEngine engine(horn::extended_horn(p));
  reducts::ShrinkingProgram q = reducts::shrink_init(p);
  std::vector<AtomId> df;
  std::size_t iter = 0;
  for (;;) {
    ++iter;
    std::vector<AtomId> facts;
    facts.reserve(df.size());
    for (AtomId x : df) facts.push_back(horn::not_atom(p, x));
    std::vector<AtomId> dt;
    for (AtomId a : engine.assert_facts(facts))
      if (a < n) {
        dt.push_back(a);
        t.insert(a);
      }
    q.shrink_apply(df, dt);
    df = delta_w(f, q);
    std::sort(df.begin(), df.end());
    for (AtomId x : df) f.insert(x);
    if (trace) trace->on_iter(iter, dt, df);
    if (df.empty()) break;
  }
  if (stats) {
    stats->iterations = iter;
    stats->rules_deleted = q.rules_deleted();
  }
  return {t, f};
}

// Algorithm 3 with the top-down false-atom search; requires an LP1 program.
inline WfsResult solve_alg3_topdown(const Program& p,
                                    SolveStats* stats = nullptr,
                                    TraceSink* trace = nullptr,
                                    topdown::Counters* counters = nullptr) {
  if (!is_lp1(p)) throw NotLp1Error();
  topdown::Scratch scratch(static_cast<AtomId>(p.n_atoms()));
  topdown::Counters local;
  topdown::Counters* cnt = counters ? counters : &local;
  auto plug = [&](const AtomSet&, const reducts::ShrinkingProgram& q) {
    return topdown::false_subset(q, scratch, cnt, trace);
  };
  WfsResult r = solve_alg3(p, plug, stats, trace);
  if (stats) stats->in_list_inspections = cnt->in_list_inspections;
  return r;
}

// Algorithm 3 with the bottom-up full-delta operator; works for any program.
inline WfsResult solve_alg3_full(const Program& p, SolveStats* stats = nullptr,
                                 TraceSink* trace = nullptr) {
  auto plug = [&](const AtomSet& f, const reducts::ShrinkingProgram& q) {
    return delta_w_full(f, q, stats);
  };
  return solve_alg3(p, plug, stats, trace);
}

}  // namespace wfs::solver
