#pragma once

#include <cstdint>
#include <vector>

#include "wfs/core.hpp"
#include "wfs/reducts.hpp"
#include "wfs/trace.hpp"

namespace wfs::topdown {

struct Counters {
  std::uint64_t in_list_inspections = 0;  // total IN-list elements examined
  std::uint64_t last_call_inspections = 0;
};

class Scratch;

namespace detail {
inline std::vector<AtomId> members_of(const Scratch& s, AtomId head);
}

// Reusable arrays for false_subset; one instance per solver run. The pf-set
// partition and pred graph are rebuilt at the start of every call, which costs
// O(|At|) per call; IN-list cursors also reset per call but within a call each
// list element is examined at most once.
class Scratch {
 public:
  explicit Scratch(AtomId n)
      : n_(n),
        head_of_(n + 1),
        next_member_(n + 1),
        list_tail_(n + 1),
        cardinality_(n + 1),
        pred_atom_(n + 1),
        cursor_(n + 1),
        color_(n + 1) {}

  AtomId capacity() const { return n_; }

 private:
  friend std::vector<AtomId> false_subset(const reducts::ShrinkingProgram&,
                                          Scratch&, Counters*, TraceSink*);
  friend std::vector<AtomId> detail::members_of(const Scratch&, AtomId);

  AtomId n_;
  std::vector<AtomId> head_of_;      // per atom: head of its pf-set list
  std::vector<AtomId> next_member_;  // per atom: next on membership list
  std::vector<AtomId> list_tail_;    // per set head: last member
  std::vector<std::uint32_t> cardinality_;
  std::vector<AtomId> pred_atom_;    // per set head: tail atom of its back rule
  std::vector<std::uint32_t> cursor_;  // per atom: w(x) position in IN(x)
  std::vector<char> color_;
  std::vector<AtomId> walk_path_;
  std::vector<std::vector<AtomId>> cycles_;
  std::vector<AtomId> worklist_;
};

namespace detail {

constexpr std::uint32_t kCursorUndef = static_cast<std::uint32_t>(-2);

inline std::vector<AtomId> members_of(const Scratch& s, AtomId head) {
  std::vector<AtomId> out;
  for (AtomId m = head; m != kUndefAtom; m = s.next_member_[m])
    out.push_back(m);
  return out;
}

}  // namespace detail

// Top-down search for a nonempty set of inaccessible atoms in the h-reduct
// view of sp. Requires every alive rule to have at most one positive body
// atom. Returns a subset of At(Q) \ LM(Q); returns the empty set iff
// LM(Q) = At(Q), where At(Q) is the set of alive atoms.
inline std::vector<AtomId> false_subset(const reducts::ShrinkingProgram& sp,
                                        Scratch& s, Counters* counters = nullptr,
                                        TraceSink* trace = nullptr) {
  using detail::kCursorUndef;
  constexpr std::uint32_t kNil = reducts::ShrinkingProgram::kNil;
  const AtomId n = sp.n_atoms();
  const AtomId s_node = n;  // the sentinel vertex {s}

  if (counters) counters->last_call_inspections = 0;
  auto inspect = [&]() {
    if (counters) {
      ++counters->in_list_inspections;
      ++counters->last_call_inspections;
    }
  };

  // Singleton pf-sets for every alive atom; pred undefined everywhere.
  std::size_t n_alive = sp.n_alive_atoms();
  if (n_alive == 0) return {};
  for (AtomId a = 0; a < n; ++a) {
    if (!sp.atom_alive(a)) continue;
    s.head_of_[a] = a;
    s.next_member_[a] = kUndefAtom;
    s.list_tail_[a] = a;
    s.cardinality_[a] = 1;
    s.pred_atom_[a] = kUndefAtom;
    s.cursor_[a] = kCursorUndef;
  }
  s.head_of_[s_node] = s_node;
  s.pred_atom_[s_node] = kUndefAtom;
  std::size_t active_count = n_alive;

  auto findset = [&](AtomId a) -> AtomId {
    return a == sp.sentinel() ? s_node : s.head_of_[a];
  };
  auto pred_target = [&](AtomId v) -> AtomId {
    AtomId a = s.pred_atom_[v];
    return a == kUndefAtom ? kUndefAtom : findset(a);
  };

  std::vector<AtomId>& L = s.worklist_;
  std::uint32_t size = 0;

  while (size < n_alive) {
    ++size;

    // --- procedure cycle: contract every cycle of the pred graph, then list
    // active pf-sets of cardinality `size`.
    for (AtomId a = 0; a <= n; ++a) s.color_[a] = 0;
    s.color_[s_node] = 2;
    s.cycles_.clear();
    for (AtomId h = 0; h < n; ++h) {
      if (!sp.atom_alive(h) || s.head_of_[h] != h || s.color_[h] != 0) continue;
      s.walk_path_.clear();
      AtomId cur = h;
      for (;;) {
        if (s.color_[cur] == 1) {
          // Cycle: the path suffix starting at cur.
          std::size_t i = s.walk_path_.size();
          while (s.walk_path_[i - 1] != cur) --i;
          s.cycles_.emplace_back(s.walk_path_.begin() + (i - 1),
                                 s.walk_path_.end());
          break;
        }
        if (s.color_[cur] == 2) break;
        s.color_[cur] = 1;
        s.walk_path_.push_back(cur);
        AtomId nxt = pred_target(cur);
        if (nxt == kUndefAtom) break;
        cur = nxt;
      }
      for (AtomId x : s.walk_path_) s.color_[x] = 2;
    }
    for (const auto& cyc : s.cycles_) {
      AtomId vc = cyc.front();
      for (std::size_t i = 1; i < cyc.size(); ++i) {
        AtomId vi = cyc[i];
        for (AtomId m = vi; m != kUndefAtom; m = s.next_member_[m])
          s.head_of_[m] = vc;
        s.next_member_[s.list_tail_[vc]] = vi;
        s.list_tail_[vc] = s.list_tail_[vi];
        s.cardinality_[vc] += s.cardinality_[vi];
      }
      s.pred_atom_[vc] = kUndefAtom;
      ++active_count;
      if (trace) trace->on_merge(detail::members_of(s, vc));
    }

    // No active pf-set and no cycle left: the pred graph is one tree rooted
    // at the sentinel, so every alive atom is accessible.
    if (active_count == 0) return {};

    L.clear();
    for (AtomId a = 0; a < n; ++a)
      if (sp.atom_alive(a) && s.head_of_[a] == a &&
          s.pred_atom_[a] == kUndefAtom && s.cardinality_[a] == size)
        L.push_back(a);

    // --- grow each minimal active pf-set until a back rule is found.
    for (AtomId v : L) {
      bool success = false;
      for (AtomId u = v; u != kUndefAtom && !success; u = s.next_member_[u]) {
        std::uint32_t& w = s.cursor_[u];
        if (w == kCursorUndef)
          w = sp.in_first(u);
        else if (w != kNil)
          w = sp.in_next(w);
        while (w != kNil && !success) {
          inspect();
          AtomId tail = sp.rule_tail(w);
          AtomId tset = findset(tail);
          if (tset != v) {
            success = true;
            s.pred_atom_[v] = tail;
            --active_count;
            if (trace)
              trace->on_back_edge(tset == s_node
                                      ? std::vector<AtomId>{}
                                      : detail::members_of(s, tset),
                                  detail::members_of(s, v));
          } else {
            w = sp.in_next(w);
          }
        }
      }
      if (!success) {
        auto v_members = detail::members_of(s, v);
        if (trace) trace->on_report(v_members);
        return v_members;
      }
    }
  }
  return {};
}

}  // namespace wfs::topdown
