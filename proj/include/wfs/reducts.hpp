#pragma once

#include <cstdint>
#include <vector>

#include "wfs/core.hpp"
#include "wfs/horn.hpp"

namespace wfs::reducts {

// P with all negative body literals erased.
inline horn::HornProgram h_reduct(const Program& p) {
  horn::HornProgram q;
  q.alphabet_size = p.n_atoms();
  q.rules.reserve(p.rules().size());
  for (const Rule& r : p.rules()) q.rules.push_back({r.head, r.pos_body});
  return q;
}

namespace detail {
inline Program copy_with_rules(const Program& p, std::vector<Rule> rules) {
  ProgramBuilder b;
  for (const auto& name : p.atom_names()) b.intern(name);
  for (Rule& r : rules) b.add_rule(std::move(r));
  return b.finish();
}
}  // namespace detail

// P_M: drop rules containing not(a) with a in M.
inline Program reduct_m(const Program& p, const AtomSet& m) {
  std::vector<Rule> keep;
  for (const Rule& r : p.rules()) {
    bool dies = false;
    for (AtomId a : r.neg_body)
      if (m.contains(a)) {
        dies = true;
        break;
      }
    if (!dies) keep.push_back(r);
  }
  return detail::copy_with_rules(p, std::move(keep));
}

// P_{F,T}: drop rules with head in F, a positive body atom in F, or a
// negative literal not(a) with a in T.
inline Program restrict(const Program& p, const AtomSet& f, const AtomSet& t) {
  std::vector<Rule> keep;
  for (const Rule& r : p.rules()) {
    bool dies = f.contains(r.head);
    for (auto it = r.pos_body.begin(); !dies && it != r.pos_body.end(); ++it)
      dies = f.contains(*it);
    for (auto it = r.neg_body.begin(); !dies && it != r.neg_body.end(); ++it)
      dies = t.contains(*it);
    if (!dies) keep.push_back(r);
  }
  return detail::copy_with_rules(p, std::move(keep));
}

// GL(M) = LM(P_M^h), computed through the extended-alphabet Horn view: assert
// not(a) for every a outside M and keep the original-alphabet part.
inline AtomSet gl(const Program& p, const AtomSet& m) {
  horn::DerivationEngine e(horn::extended_horn(p));
  std::vector<AtomId> facts;
  for (AtomId a = 0; a < p.n_atoms(); ++a)
    if (!m.contains(a)) facts.push_back(horn::not_atom(p, a));
  AtomSet out(p.n_atoms());
  for (AtomId a : e.assert_facts(facts))
    if (a < p.n_atoms()) out.insert(a);
  return out;
}

inline AtomSet complement(const Program& p, const AtomSet& s) {
  AtomSet out(p.n_atoms());
  for (AtomId a = 0; a < p.n_atoms(); ++a)
    if (!s.contains(a)) out.insert(a);
  return out;
}

// A(F) = complement of GL(GL(complement F)). lfp(A) is the false part of the
// well-founded model.
inline AtomSet op_A(const Program& p, const AtomSet& f) {
  return complement(p, gl(p, gl(p, complement(p, f))));
}

// B(F) = complement of LM(P_{F,T}^h) with T = GL(complement F).
inline AtomSet op_B(const Program& p, const AtomSet& f) {
  AtomSet t = gl(p, complement(p, f));
  AtomSet lm = horn::least_model(h_reduct(restrict(p, f, t)));
  AtomSet out(p.n_atoms());
  for (AtomId a = 0; a < p.n_atoms(); ++a)
    if (!lm.contains(a)) out.insert(a);
  return out;
}

// The live P_{F,T} structure. Rules die monotonically; per-atom IN lists hold
// the h-reduct tails (positive body atom, or the sentinel for an empty
// h-reduct body) of alive rules with that head, in source order. Entry i of
// the intrusive list is rule i, so unlinking on rule death is O(1).
class ShrinkingProgram {
 public:
  static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);

  explicit ShrinkingProgram(const Program& p)
      : prog_(&p),
        n_(static_cast<AtomId>(p.n_atoms())),
        current_f_(p.n_atoms()),
        current_t_(p.n_atoms()),
        alive_atom_(p.n_atoms(), 1),
        n_alive_(p.n_atoms()),
        in_first_(p.n_atoms(), kNil),
        in_last_(p.n_atoms(), kNil),
        pos_occ_(p.n_atoms()),
        neg_occ_(p.n_atoms()) {
    const auto& rules = p.rules();
    std::size_t m = rules.size();
    alive_rule_.assign(m, 1);
    tail_.reserve(m);
    in_prev_.assign(m, kNil);
    in_next_.assign(m, kNil);
    for (std::uint32_t i = 0; i < m; ++i) {
      const Rule& r = rules[i];
      tail_.push_back(r.pos_body.empty() ? sentinel() : r.pos_body[0]);
      for (AtomId a : r.pos_body) pos_occ_[a].push_back(i);
      for (AtomId a : r.neg_body) neg_occ_[a].push_back(i);
      // Append to IN(head): source order.
      in_prev_[i] = in_last_[r.head];
      if (in_last_[r.head] != kNil)
        in_next_[in_last_[r.head]] = i;
      else
        in_first_[r.head] = i;
      in_last_[r.head] = i;
    }
  }

  // Advances to P_{F u dF, T u dT}. dF and dT must be disjoint from each
  // other and from the accumulated sets.
  void shrink_apply(const std::vector<AtomId>& delta_f,
                    const std::vector<AtomId>& delta_t) {
    for (AtomId x : delta_f) {
      current_f_.insert(x);
      alive_atom_[x] = 0;
      --n_alive_;
      while (in_first_[x] != kNil) kill_rule(in_first_[x]);  // head in F
      for (std::uint32_t r : pos_occ_[x])
        if (alive_rule_[r]) kill_rule(r);
    }
    for (AtomId x : delta_t) {
      current_t_.insert(x);
      for (std::uint32_t r : neg_occ_[x])
        if (alive_rule_[r]) kill_rule(r);
    }
  }

  const Program& program() const { return *prog_; }
  AtomId n_atoms() const { return n_; }
  AtomId sentinel() const { return n_; }
  std::size_t n_alive_atoms() const { return n_alive_; }
  bool atom_alive(AtomId a) const { return alive_atom_[a] != 0; }
  bool rule_alive(std::uint32_t r) const { return alive_rule_[r] != 0; }
  std::size_t n_rules() const { return alive_rule_.size(); }
  AtomId rule_tail(std::uint32_t r) const { return tail_[r]; }
  std::uint32_t in_first(AtomId a) const { return in_first_[a]; }
  std::uint32_t in_next(std::uint32_t entry) const { return in_next_[entry]; }
  const AtomSet& current_f() const { return current_f_; }
  const AtomSet& current_t() const { return current_t_; }
  std::uint64_t rules_deleted() const { return rules_deleted_; }

  std::vector<std::uint32_t> alive_rule_indices() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t r = 0; r < alive_rule_.size(); ++r)
      if (alive_rule_[r]) out.push_back(r);
    return out;
  }

 private:
  void kill_rule(std::uint32_t r) {
    alive_rule_[r] = 0;
    ++rules_deleted_;
    AtomId h = prog_->rules()[r].head;
    std::uint32_t pr = in_prev_[r], nx = in_next_[r];
    if (pr != kNil)
      in_next_[pr] = nx;
    else
      in_first_[h] = nx;
    if (nx != kNil)
      in_prev_[nx] = pr;
    else
      in_last_[h] = pr;
  }

  const Program* prog_;
  AtomId n_;
  AtomSet current_f_, current_t_;
  std::vector<char> alive_atom_;
  std::size_t n_alive_;
  std::vector<char> alive_rule_;
  std::vector<AtomId> tail_;
  std::vector<std::uint32_t> in_first_, in_last_, in_prev_, in_next_;
  std::vector<std::vector<std::uint32_t>> pos_occ_, neg_occ_;
  std::uint64_t rules_deleted_ = 0;
};

inline ShrinkingProgram shrink_init(const Program& p) {
  return ShrinkingProgram(p);
}

}  // namespace wfs::reducts
