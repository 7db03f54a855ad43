#pragma once

#include <cstdint>
#include <vector>

#include "wfs/core.hpp"

namespace wfs::horn {

// Negation-free program over an alphabet [0, alphabet_size). The alphabet may
// extend a source program's: literal not(a) of a program with n atoms is
// encoded as atom n + a.
struct HornProgram {
  struct HRule {
    AtomId head;
    std::vector<AtomId> body;
  };
  std::vector<HRule> rules;
  std::size_t alphabet_size = 0;
};

inline AtomId not_atom(const Program& p, AtomId a) {
  return static_cast<AtomId>(p.n_atoms() + a);
}

// P viewed as a Horn program over the extended alphabet At u not(At).
inline HornProgram extended_horn(const Program& p) {
  HornProgram q;
  q.alphabet_size = 2 * p.n_atoms();
  q.rules.reserve(p.rules().size());
  for (const Rule& r : p.rules()) {
    HornProgram::HRule h{r.head, r.pos_body};
    for (AtomId a : r.neg_body) h.body.push_back(not_atom(p, a));
    q.rules.push_back(std::move(h));
  }
  return q;
}

// Unit-propagation state for incremental least-model computation in the style
// of Dowling and Gallier. Rule counters track body atoms not yet derived; the
// residual program is implicit (rules with underived heads and counter > 0).
class DerivationEngine {
 public:
  explicit DerivationEngine(const HornProgram& q)
      : derived_(q.alphabet_size, 0), watch_first_(q.alphabet_size, kNil) {
    counters_.reserve(q.rules.size());
    std::size_t occ_total = 0;
    for (const auto& r : q.rules) occ_total += r.body.size();
    watch_rule_.reserve(occ_total);
    watch_next_.reserve(occ_total);
    heads_.reserve(q.rules.size());
    for (std::uint32_t i = 0; i < q.rules.size(); ++i) {
      const auto& r = q.rules[i];
      counters_.push_back(static_cast<std::uint32_t>(r.body.size()));
      heads_.push_back(r.head);
      // One watch entry per body occurrence: duplicates decrement twice.
      for (AtomId a : r.body) {
        watch_rule_.push_back(i);
        watch_next_.push_back(watch_first_[a]);
        watch_first_[a] = static_cast<std::uint32_t>(watch_rule_.size() - 1);
        ++work_;
      }
      if (r.body.empty()) agenda_.push_back(r.head);
    }
  }

  // Adds facts and propagates to quiescence; returns atoms newly derived.
  // On the first call this also flushes heads of empty-bodied rules.
  std::vector<AtomId> assert_facts(const std::vector<AtomId>& facts) {
    for (AtomId f : facts) agenda_.push_back(f);
    std::vector<AtomId> newly;
    while (!agenda_.empty()) {
      AtomId a = agenda_.back();
      agenda_.pop_back();
      if (derived_[a]) continue;
      derived_[a] = 1;
      newly.push_back(a);
      for (std::uint32_t e = watch_first_[a]; e != kNil; e = watch_next_[e]) {
        ++work_;
        std::uint32_t r = watch_rule_[e];
        if (--counters_[r] == 0) agenda_.push_back(heads_[r]);
      }
    }
    return newly;
  }

  bool is_derived(AtomId a) const { return derived_[a] != 0; }
  std::size_t derived_count() const {
    std::size_t c = 0;
    for (char b : derived_) c += b != 0;
    return c;
  }

  // Body-occurrence visits since construction; used by benchmark counters.
  std::uint64_t work() const { return work_; }

 private:
  static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);

  std::vector<char> derived_;
  std::vector<std::uint32_t> counters_;
  std::vector<AtomId> heads_;
  std::vector<std::uint32_t> watch_first_;   // per atom: first watch entry
  std::vector<std::uint32_t> watch_rule_;    // per entry: rule index
  std::vector<std::uint32_t> watch_next_;    // per entry: next entry
  std::vector<AtomId> agenda_;
  std::uint64_t work_ = 0;
};

inline DerivationEngine engine_init(const HornProgram& q) {
  return DerivationEngine(q);
}

inline AtomSet least_model(const HornProgram& q) {
  DerivationEngine e(q);
  AtomSet m(q.alphabet_size);
  for (AtomId a : e.assert_facts({})) m.insert(a);
  return m;
}

}  // namespace wfs::horn
