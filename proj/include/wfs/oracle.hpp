#pragma once

#include <vector>

#include "wfs/core.hpp"
#include "wfs/horn.hpp"
#include "wfs/reducts.hpp"

// Deliberately naive reference implementations, used as ground truth in
// tests. Fixpoints are computed by repeated full passes over all rules;
// nothing here shares code with the unit-propagation or shrinking paths.
namespace wfs::oracle {

inline AtomSet naive_lm(const horn::HornProgram& q) {
  AtomSet m(q.alphabet_size);
  bool change = true;
  while (change) {
    change = false;
    for (const auto& r : q.rules) {
      if (m.contains(r.head)) continue;
      bool fire = true;
      for (AtomId a : r.body)
        if (!m.contains(a)) {
          fire = false;
          break;
        }
      if (fire) {
        m.insert(r.head);
        change = true;
      }
    }
  }
  return m;
}

inline AtomSet naive_gl(const Program& p, const AtomSet& m) {
  // Reduct by M, then the least model of the positive parts.
  AtomSet lm(p.n_atoms());
  bool change = true;
  while (change) {
    change = false;
    for (const Rule& r : p.rules()) {
      if (lm.contains(r.head)) continue;
      bool alive = true;
      for (AtomId a : r.neg_body)
        if (m.contains(a)) {
          alive = false;
          break;
        }
      if (!alive) continue;
      bool fire = true;
      for (AtomId a : r.pos_body)
        if (!lm.contains(a)) {
          fire = false;
          break;
        }
      if (fire) {
        lm.insert(r.head);
        change = true;
      }
    }
  }
  return lm;
}

// T_wfs = lfp(GL o GL) from the empty set; F_wfs = At \ GL(T_wfs).
inline WfsResult naive_wfs(const Program& p) {
  const std::size_t n = p.n_atoms();
  AtomSet t(n);
  for (;;) {
    AtomSet next = naive_gl(p, naive_gl(p, t));
    if (next == t) break;
    t = next;
  }
  AtomSet g = naive_gl(p, t);
  AtomSet f(n);
  for (AtomId a = 0; a < n; ++a)
    if (!g.contains(a)) f.insert(a);
  return {t, f};
}

// True iff no alive rule supports v from outside: every alive rule with head
// in v has a nonempty h-reduct body whose (unique) positive atom is in v.
inline bool check_unfounded(const reducts::ShrinkingProgram& q,
                            const std::vector<AtomId>& v) {
  std::vector<char> in_v(q.n_atoms(), 0);
  for (AtomId a : v) in_v[a] = 1;
  for (std::uint32_t r = 0; r < q.n_rules(); ++r) {
    if (!q.rule_alive(r)) continue;
    AtomId h = q.program().rules()[r].head;
    if (!in_v[h]) continue;
    AtomId t = q.rule_tail(r);
    if (t == q.sentinel() || !in_v[t]) return false;
  }
  return true;
}

}  // namespace wfs::oracle
