#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "turingol/executor.h"
#include "turingol/pipeline.h"

namespace testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& name) {
  return read_file(std::string(TURINGOL_TEST_DATA) + "/" + name);
}

inline std::string increment_program() { return fixture("increment.tgl"); }

/// Labeled-tree canonical form over syntactic arrows: equal strings iff the
/// trees are isomorphic (children compared as a multiset).
inline std::string canonical(const turingol::LabeledGraph& g, turingol::NodeId n) {
  std::vector<std::string> children;
  for (turingol::ArrowId id : g.outgoing(n)) {
    const turingol::Arrow& a = g.arrow(id);
    if (a.kind != turingol::ArrowKind::syntactic) continue;
    children.push_back("[" + a.label.str() + "]" + canonical(g, a.to));
  }
  std::sort(children.begin(), children.end());
  std::string out = "<" + g.label(n).str() + ">(";
  for (const std::string& c : children) out += c + ",";
  return out + ")";
}

inline std::vector<turingol::NodeId> labeled(const turingol::LabeledGraph& g, const char* w) {
  return g.nodes_labeled(w);
}

/// Runs an executor step by step and audits every step: structure may
/// change only at 'move' nodes, labels only at 'print' nodes and only on
/// tape cells, and every step from the root or an S node lands on an S node
/// or the stop node.
struct AuditedRun {
  turingol::Status status = turingol::Status::running;
  std::size_t steps = 0;
  std::vector<std::string> violations;
  std::optional<turingol::CrashReport> crash;
};

inline AuditedRun audited_run(turingol::Executor& ex, std::size_t tape_base,
                              std::size_t max_steps = 10000) {
  using namespace turingol;
  const LabeledGraph& g = ex.graph();
  auto classes = classify(ex.program());
  auto lands_ok = [&](NodeId n) { return classes[n].is_s_node() || n == *ex.program().stop; };
  using ArrowTuple = std::tuple<std::uint32_t, std::string, std::uint32_t>;
  auto arrows = [&] {
    std::vector<ArrowTuple> out;
    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
      const Arrow& a = g.arrow({i});
      out.emplace_back(a.from.value, a.label.str(), a.to.value);
    }
    return out;
  };
  auto labels = [&] {
    std::vector<std::string> out;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) out.push_back(g.label({i}).str());
    return out;
  };
  AuditedRun run;
  while (ex.state().status == Status::running && ex.state().steps < max_steps) {
    NodeId at = ex.state().current;
    const std::string word = g.label(at).str();
    bool from_statement = at == ex.program().root || classes[at].is_s_node();
    auto arrows_before = arrows();
    auto labels_before = labels();
    ex.step();
    bool structure_changed = arrows() != arrows_before || g.node_count() != labels_before.size();
    if (structure_changed && word != "move")
      run.violations.push_back("structure changed at '" + word + "'");
    auto labels_after = labels();
    for (std::size_t i = 0; i < labels_before.size(); ++i) {
      if (labels_after[i] == labels_before[i]) continue;
      if (word != "print") run.violations.push_back("label changed at '" + word + "'");
      if (i < tape_base) run.violations.push_back("program node relabeled at '" + word + "'");
    }
    if (ex.state().status == Status::running && from_statement && !lands_ok(ex.state().current))
      run.violations.push_back("step from '" + word + "' left the statement nodes");
  }
  run.status = ex.state().status;
  run.steps = ex.state().steps;
  run.crash = ex.state().crash;
  return run;
}

}  // namespace testing
