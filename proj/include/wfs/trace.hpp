#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "wfs/core.hpp"

namespace wfs {

// Observer for solver and unfounded-search events. The `from` list of a back
// edge is empty when the edge comes from the sentinel vertex.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_iter(std::size_t /*i*/, const std::vector<AtomId>& /*dt*/,
                       const std::vector<AtomId>& /*df*/) {}
  virtual void on_merge(const std::vector<AtomId>& /*members*/) {}
  virtual void on_back_edge(const std::vector<AtomId>& /*from*/,
                            const std::vector<AtomId>& /*to*/) {}
  virtual void on_report(const std::vector<AtomId>& /*v*/) {}
};

// JSON-lines writer: one object per event, atom names sorted.
class JsonLinesTraceSink : public TraceSink {
 public:
  JsonLinesTraceSink(const Program& p, std::ostream& out) : p_(&p), out_(&out) {}

  void on_iter(std::size_t i, const std::vector<AtomId>& dt,
               const std::vector<AtomId>& df) override {
    *out_ << "{\"event\":\"iter\",\"i\":" << i << ",\"dt\":" << arr(dt)
          << ",\"df\":" << arr(df) << "}\n";
  }
  void on_merge(const std::vector<AtomId>& members) override {
    *out_ << "{\"event\":\"merge\",\"members\":" << arr(members) << "}\n";
  }
  void on_back_edge(const std::vector<AtomId>& from,
                    const std::vector<AtomId>& to) override {
    *out_ << "{\"event\":\"back_edge\",\"from\":" << arr(from)
          << ",\"to\":" << arr(to) << "}\n";
  }
  void on_report(const std::vector<AtomId>& v) override {
    *out_ << "{\"event\":\"report\",\"v\":" << arr(v) << "}\n";
  }

 private:
  std::string arr(const std::vector<AtomId>& atoms) const {
    std::vector<std::string> names;
    names.reserve(atoms.size());
    for (AtomId a : atoms) names.push_back(p_->atom_name(a));
    std::sort(names.begin(), names.end());
    std::string s = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) s += ',';
      s += '"';
      s += names[i];
      s += '"';
    }
    s += ']';
    return s;
  }

  const Program* p_;
  std::ostream* out_;
};

}  // namespace wfs
