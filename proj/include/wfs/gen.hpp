#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "wfs/core.hpp"

// Deterministic program generators for cross-validation and benchmarks.
// Every family emits LP1 programs.
namespace wfs::gen {

enum class Family {
  Chain,          // a1. ; a_{i+1} <- a_i            (all true)
  PosLoopChain,   // a_i <- a_{i+1} ; a_n <- a_1     (all false)
  GuardedChain,   // self-loops released one per round (worst case for
                  // whole-program recomputation)
  Ballast,        // guarded chain plus wide inert rules
  RandomLp1,
  PaperExample,
};

struct GeneratorSpec {
  Family family = Family::Chain;
  std::uint64_t n = 1;
  std::uint64_t k = 0;        // ballast width
  std::uint64_t m = 0;        // random: rule count
  double p_neg = 0.2;         // random: per-atom negative-literal probability
  std::uint64_t seed = 0;
};

inline Family family_from_name(const std::string& name) {
  if (name == "chain") return Family::Chain;
  if (name == "pos_loop_chain") return Family::PosLoopChain;
  if (name == "guarded_chain") return Family::GuardedChain;
  if (name == "ballast") return Family::Ballast;
  if (name == "random_lp1") return Family::RandomLp1;
  if (name == "paper_example") return Family::PaperExample;
  throw std::invalid_argument("unknown generator family: " + name);
}

namespace detail {

inline void guarded_chain_rules(ProgramBuilder& b, std::uint64_t n) {
  for (std::uint64_t i = 1; i <= n; ++i) {
    AtomId bi = b.intern("b" + std::to_string(i));
    AtomId ci = b.intern("c" + std::to_string(i));
    b.add_rule({bi, {bi}, {}});
    if (i >= 2) b.add_rule({bi, {}, {b.intern("c" + std::to_string(i - 1))}});
    b.add_rule({ci, {}, {bi}});
  }
}

}  // namespace detail

inline Program generate(const GeneratorSpec& spec) {
  if (spec.n == 0 && spec.family != Family::PaperExample)
    throw std::invalid_argument("generator scale n must be positive");
  ProgramBuilder b;
  switch (spec.family) {
    case Family::Chain: {
      b.add_rule({b.intern("a1"), {}, {}});
      for (std::uint64_t i = 1; i < spec.n; ++i)
        b.add_rule({b.intern("a" + std::to_string(i + 1)),
                    {b.intern("a" + std::to_string(i))},
                    {}});
      break;
    }
    case Family::PosLoopChain: {
      for (std::uint64_t i = 1; i < spec.n; ++i)
        b.add_rule({b.intern("a" + std::to_string(i)),
                    {b.intern("a" + std::to_string(i + 1))},
                    {}});
      b.add_rule({b.intern("a" + std::to_string(spec.n)), {b.intern("a1")}, {}});
      break;
    }
    case Family::GuardedChain: {
      detail::guarded_chain_rules(b, spec.n);
      break;
    }
    case Family::Ballast: {
      detail::guarded_chain_rules(b, spec.n);
      std::uint64_t k = spec.k ? spec.k : spec.n;
      for (std::uint64_t j = 1; j <= k; ++j)
        b.add_rule({b.intern("q" + std::to_string(j)), {}, {}});
      // Wide but inert rules: one positive atom (LP1), k negative literals
      // over atoms that have no rules, so each body costs a full scan in any
      // whole-program recomputation.
      std::vector<AtomId> rs;
      rs.reserve(k);
      for (std::uint64_t j = 1; j <= k; ++j)
        rs.push_back(b.intern("r" + std::to_string(j)));
      AtomId q1 = b.intern("q1");
      for (std::uint64_t i = 1; i <= spec.n; ++i)
        b.add_rule({b.intern("p" + std::to_string(i)), {q1}, rs});
      break;
    }
    case Family::RandomLp1: {
      std::mt19937_64 rng(spec.seed);
      std::uniform_int_distribution<std::uint64_t> atom(0, spec.n - 1);
      std::bernoulli_distribution has_pos(0.5);
      std::bernoulli_distribution neg(spec.p_neg);
      for (std::uint64_t i = 0; i < spec.n; ++i)
        b.intern("x" + std::to_string(i));
      std::uint64_t m = spec.m ? spec.m : 2 * spec.n;
      for (std::uint64_t r = 0; r < m; ++r) {
        Rule rule;
        rule.head = static_cast<AtomId>(atom(rng));
        if (has_pos(rng)) rule.pos_body.push_back(static_cast<AtomId>(atom(rng)));
        for (AtomId a = 0; a < spec.n; ++a)
          if (neg(rng)) rule.neg_body.push_back(a);
        b.add_rule(std::move(rule));
      }
      break;
    }
    case Family::PaperExample: {
      // The eleven-atom Horn program with one reachable cluster {a,b,c} and
      // an unfounded cluster {g,h,j,k}; rule order fixes the IN lists and
      // therefore the whole search trace.
      auto rule = [&](const char* head, const char* tail) {
        if (tail)
          b.add_rule({b.intern(head), {b.intern(tail)}, {}});
        else
          b.add_rule({b.intern(head), {}, {}});
      };
      rule("a", "c");
      rule("a", "e");
      rule("a", nullptr);
      rule("b", "a");
      rule("c", "a");
      rule("d", "e");
      rule("d", "f");
      rule("e", "f");
      rule("e", "g");
      rule("f", "d");
      rule("g", "j");
      rule("h", "k");
      rule("i", "j");
      rule("j", "g");
      rule("j", "h");
      rule("k", "h");
      rule("k", "j");
      break;
    }
  }
  return b.finish();
}

}  // namespace wfs::gen
