#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wfs {

// Dense atom index, assigned in first-occurrence order.
using AtomId = std::uint32_t;

constexpr AtomId kUndefAtom = static_cast<AtomId>(-1);

// A set of atoms over a fixed alphabet [0, n), stored as a bitmap.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t n) : bits_(n, 0) {}

  std::size_t universe_size() const { return bits_.size(); }
  bool contains(AtomId a) const { return bits_[a] != 0; }
  bool insert(AtomId a) {
    if (bits_[a]) return false;
    bits_[a] = 1;
    ++count_;
    return true;
  }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::vector<AtomId> to_vector() const {
    std::vector<AtomId> out;
    out.reserve(count_);
    for (AtomId a = 0; a < bits_.size(); ++a)
      if (bits_[a]) out.push_back(a);
    return out;
  }

  friend bool operator==(const AtomSet& x, const AtomSet& y) {
    return x.bits_ == y.bits_;
  }

 private:
  std::vector<char> bits_;
  std::size_t count_ = 0;
};

// a <- pos_body, not neg_body. Body lists keep source order, duplicates kept.
struct Rule {
  AtomId head = 0;
  std::vector<AtomId> pos_body;
  std::vector<AtomId> neg_body;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// A finite propositional normal logic program with interned atom names.
class Program {
 public:
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t n_atoms() const { return names_.size(); }

  // Total number of atom occurrences (heads plus all body literals).
  std::size_t size() const { return size_; }

  const std::string& atom_name(AtomId a) const { return names_[a]; }
  const std::vector<std::string>& atom_names() const { return names_; }

  // Returns kUndefAtom when the name was never interned.
  AtomId find_atom(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? kUndefAtom : it->second;
  }

  friend bool operator==(const Program& x, const Program& y) {
    return x.rules_ == y.rules_ && x.names_ == y.names_;
  }

 private:
  friend class ProgramBuilder;
  std::vector<Rule> rules_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> ids_;
  std::size_t size_ = 0;
};

class ProgramBuilder {
 public:
  AtomId intern(std::string_view name) {
    auto it = p_.ids_.find(std::string(name));
    if (it != p_.ids_.end()) return it->second;
    AtomId id = static_cast<AtomId>(p_.names_.size());
    p_.names_.emplace_back(name);
    p_.ids_.emplace(p_.names_.back(), id);
    return id;
  }

  void add_rule(Rule r) {
    p_.size_ += 1 + r.pos_body.size() + r.neg_body.size();
    p_.rules_.push_back(std::move(r));
  }

  Program finish() { return std::move(p_); }

 private:
  Program p_;
};

// Partition of At(P) into true / false / unknown under the well-founded
// semantics. The unknown part is implicit.
struct WfsResult {
  AtomSet true_set;
  AtomSet false_set;

  std::vector<AtomId> unknown_atoms() const {
    std::vector<AtomId> out;
    for (AtomId a = 0; a < true_set.universe_size(); ++a)
      if (!true_set.contains(a) && !false_set.contains(a)) out.push_back(a);
    return out;
  }

  friend bool operator==(const WfsResult&, const WfsResult&) = default;
};

// True iff every rule carries at most one positive body atom.
inline bool is_lp1(const Program& p) {
  for (const Rule& r : p.rules())
    if (r.pos_body.size() > 1) return false;
  return true;
}

inline AtomSet atoms_of(const Program& p) {
  AtomSet s(p.n_atoms());
  for (AtomId a = 0; a < p.n_atoms(); ++a) s.insert(a);
  return s;
}

}  // namespace wfs
