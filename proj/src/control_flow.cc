#include "turingol/control_flow.h"

#include <algorithm>
#include <deque>
#include <set>

namespace turingol {

namespace {

constexpr KindSet kSyntax = ArrowKind::syntactic;
constexpr KindSet kControl = ArrowKind::control;

bool is_ordinary(const Word& w) { return w == "print" || w == "move" || w.empty(); }

void require_stop(const Program& program) {
  if (!program.stop) throw PipelineError("no stop node; call add_stop_node first");
}

std::optional<ArrowId> parent_arrow(const LabeledGraph& g, NodeId n) {
  for (ArrowId id : g.incoming(n))
    if (g.arrow(id).kind == ArrowKind::syntactic) return id;
  return std::nullopt;
}

/// The node a statement's chain returns to once it is finished.
NodeId subordinator(const Program& program, const std::map<NodeId, NodeClass>& classes,
                    NodeId stmt) {
  const LabeledGraph& g = program.graph;
  NodeId head = stmt;
  for (;;) {
    auto in = g.incoming(head, ";", kSyntax);
    if (in.empty()) break;
    NodeId from = g.arrow(in.front()).from;
    if (!classes.at(from).is_s_node()) break;
    head = from;
  }
  auto parent = parent_arrow(g, head);
  if (!parent) throw PipelineError("statement without a parent in the syntactic tree");
  const Arrow& a = g.arrow(*parent);
  if (a.label == "}" || a.label == "then") return a.from;
  return *program.stop;
}

}  // namespace

NodeId add_stop_node(Program& program) {
  if (program.stop) throw PipelineError("the program already has a stop node");
  program.stop = program.graph.add_node(Word("stop"));
  return *program.stop;
}

std::size_t build_back_arrows(Program& program) {
  require_stop(program);
  LabeledGraph& g = program.graph;
  if (!g.arrows_labeled("back", kControl).empty()) throw PipelineError("back arrows already built");
  auto classes = classify(program);
  std::size_t count = 0;
  for (const auto& [n, c] : classes) {
    if (!c.is_s_node() || !g.outgoing(n, ";", kSyntax).empty()) continue;
    g.add_arrow(n, "back", subordinator(program, classes, n), ArrowKind::control);
    ++count;
  }
  return count;
}

ControlCounts build_control(Program& program) {
  require_stop(program);
  if (has_errors(check_labels(program)))
    throw PipelineError("cannot build control flow: L1/L2 requirements are violated");
  LabeledGraph& g = program.graph;
  if (g.arrows_labeled("back", kControl).empty())
    throw PipelineError("back arrows are not built");
  for (const char* label : {"next", "yes", "no"})
    if (!g.arrows_labeled(label, kControl).empty()) throw PipelineError("control already built");

  auto classes = classify(program);
  ControlCounts counts;
  auto draw = [&](NodeId from, const char* label, NodeId to) {
    g.add_arrow(from, Word(label), to, ArrowKind::control);
    if (label == std::string_view("next")) ++counts.next;
    else if (label == std::string_view("yes")) ++counts.yes;
    else ++counts.no;
  };
  auto parallel = [&](NodeId from, const char* syntactic, const char* label) {
    auto to = g.successor(from, syntactic, kSyntax);
    if (!to) throw PipelineError("missing '" + std::string(syntactic) + "' arrow");
    draw(from, label, *to);
  };

  parallel(program.root, ";", "next");

  // Label targets by word; L1 guarantees one per word.
  std::map<Word, NodeId> targets;
  for (NodeId t : label_points(program).targets) targets.emplace(g.label(t), t);

  std::vector<NodeId> statements;
  for (const auto& [n, c] : classes)
    if (c.is_s_node()) statements.push_back(n);

  for (NodeId n : statements) {
    const Word& w = g.label(n);
    if (w == "if") parallel(n, "then", "yes");
    if (w == "{") parallel(n, "}", "next");
    if (w == "go") {
      NodeId target = targets.at(g.label(*g.successor(n, "to", kSyntax)));
      for (;;) {
        auto in = g.incoming(target, ":", kSyntax);
        if (in.empty()) break;
        target = g.arrow(in.front()).from;
      }
      draw(n, "next", target);
    }
    if (g.outgoing(n, ";", kSyntax).empty()) continue;
    if (is_ordinary(w)) parallel(n, ";", "next");
    if (w == "if") parallel(n, ";", "no");
  }

  // Back chains: each node with a 'back' arrow inherits the continuation of
  // the chain's terminal node.
  for (NodeId n : statements) {
    auto back = g.successor(n, "back", kControl);
    if (!back) continue;
    const Word& w = g.label(n);
    if (!is_ordinary(w) && w != "if") continue;
    NodeId end = *back;
    for (auto more = g.successor(end, "back", kControl); more;
         more = g.successor(end, "back", kControl))
      end = *more;
    NodeId to = end == *program.stop ? end : *g.successor(end, ";", kSyntax);
    draw(n, w == "if" ? "no" : "next", to);
  }
  return counts;
}

ControlCounts build_flow(Program& program) {
  add_stop_node(program);
  build_back_arrows(program);
  return build_control(program);
}

std::vector<Diagnostic> check_reachability(const Program& program) {
  const LabeledGraph& g = program.graph;
  std::set<NodeId> seen{program.root};
  std::deque<NodeId> todo{program.root};
  while (!todo.empty()) {
    NodeId n = todo.front();
    todo.pop_front();
    for (ArrowId id : g.outgoing(n)) {
      const Arrow& a = g.arrow(id);
      if (a.kind != ArrowKind::control || a.label == "back") continue;
      if (seen.insert(a.to).second) todo.push_back(a.to);
    }
  }
  std::vector<Diagnostic> out;
  for (NodeId n : s_nodes(program))
    if (!seen.count(n))
      out.push_back(make_diagnostic(Code::CW1, {n},
                                    "statement '" + g.label(n).str() + "' is unreachable"));
  sort_diagnostics(program, out);
  return out;
}

std::vector<Diagnostic> check_next_acyclic(const Program& program) {
  const LabeledGraph& g = program.graph;
  // At most one 'next' leaves a node, so the 'next' subgraph is functional
  // and every cycle is found by walking forward.
  enum { unseen, active, done };
  std::vector<int> state(g.node_count(), unseen);
  std::vector<Diagnostic> out;
  for (std::uint32_t start = 0; start < g.node_count(); ++start) {
    std::vector<NodeId> walk;
    std::optional<NodeId> at = NodeId{start};
    while (at && state[at->value] == unseen) {
      state[at->value] = active;
      walk.push_back(*at);
      auto next = g.outgoing(*at, "next", kControl);
      at = next.empty() ? std::nullopt : std::optional(g.arrow(next.front()).to);
    }
    if (at && state[at->value] == active) {
      auto from = std::find(walk.begin(), walk.end(), *at);
      std::vector<NodeId> cycle(from, walk.end());
      std::string text;
      for (NodeId n : cycle) text += "'" + g.label(n).str() + "' -> ";
      text += "'" + g.label(cycle.front()).str() + "'";
      out.push_back(make_diagnostic(Code::C2, cycle, "'next' arrows form a cycle: " + text));
    }
    for (NodeId n : walk) state[n.value] = done;
  }
  sort_diagnostics(program, out);
  return out;
}

}  // namespace turingol
