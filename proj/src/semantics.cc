#include "turingol/semantics.h"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"
#include "turingol/path.h"

namespace turingol {

std::string_view to_string(Code code) {
  switch (code) {
    case Code::AW1: return "AW1";
    case Code::AW2: return "AW2";
    case Code::AW3: return "AW3";
    case Code::L1: return "L1";
    case Code::L2: return "L2";
    case Code::LW1: return "LW1";
    case Code::CW1: return "CW1";
    case Code::C2: return "C2";
    case Code::CRASH: return "CRASH";
  }
  return "?";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

Severity severity_of(Code code) {
  return to_string(code).find('W') != std::string_view::npos ? Severity::warning : Severity::error;
}

Diagnostic make_diagnostic(Code code, std::vector<NodeId> nodes, std::string message) {
  return {code, severity_of(code), std::move(nodes), std::move(message)};
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

bool has_code(const std::vector<Diagnostic>& diagnostics, Code code) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

void sort_diagnostics(const Program& program, std::vector<Diagnostic>& diagnostics) {
  auto key = [&](const Diagnostic& d) {
    SourcePos pos{std::numeric_limits<int>::max(), 0};
    std::uint32_t id = std::numeric_limits<std::uint32_t>::max();
    if (!d.nodes.empty()) {
      id = d.nodes.front().value;
      if (auto p = program.position(d.nodes.front())) pos = *p;
    }
    return std::tuple(static_cast<int>(d.code), pos, id);
  };
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
}

std::string tree_path(const Program& program, NodeId n) {
  const LabeledGraph& g = program.graph;
  std::vector<Word> steps;
  NodeId at = n;
  while (at != program.root) {
    std::optional<ArrowId> parent;
    for (ArrowId id : g.incoming(at))
      if (g.arrow(id).kind == ArrowKind::syntactic) parent = id;
    if (!parent || steps.size() > g.node_count()) return "?";
    steps.push_back(g.arrow(*parent).label);
    at = g.arrow(*parent).from;
  }
  PathFormula f = PathFormula::from(g.label(program.root));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) f.fwd(*it);
  return to_string(f);
}

std::string to_text(const Program& program, const Diagnostic& d) {
  std::string where;
  for (NodeId n : d.nodes) {
    if (!where.empty()) where += ',';
    where += std::to_string(n.value) + "@" + tree_path(program, n);
  }
  if (where.empty()) where = "-";
  return std::string(to_string(d.code)) + " " + std::string(to_string(d.severity)) + " " + where +
         " " + d.message;
}

std::string diagnostics_to_json(const Program& program, const std::vector<Diagnostic>& ds) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Diagnostic& d : ds) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (NodeId n : d.nodes) {
      nlohmann::ordered_json entry{{"id", n.value}, {"path", tree_path(program, n)}};
      if (auto p = program.position(n)) entry["position"] = to_string(*p);
      nodes.push_back(entry);
    }
    doc.push_back({{"code", std::string(to_string(d.code))},
                   {"severity", std::string(to_string(d.severity))},
                   {"nodes", nodes},
                   {"message", d.message}});
  }
  return doc.dump();
}

// ---------------------------------------------------------- classification

namespace {

constexpr KindSet kSyntax = ArrowKind::syntactic;

std::vector<NodeId> syntactic_targets(const LabeledGraph& g, std::string_view label) {
  std::vector<NodeId> result;
  for (ArrowId id : g.arrows_labeled(label, kSyntax)) result.push_back(g.arrow(id).to);
  std::sort(result.begin(), result.end());
  return result;
}

std::set<NodeId> tree_nodes(const Program& program) {
  std::set<NodeId> seen{program.root};
  std::deque<NodeId> todo{program.root};
  while (!todo.empty()) {
    NodeId n = todo.front();
    todo.pop_front();
    for (ArrowId id : program.graph.outgoing(n)) {
      const Arrow& a = program.graph.arrow(id);
      if (a.kind == ArrowKind::syntactic && seen.insert(a.to).second) todo.push_back(a.to);
    }
  }
  return seen;
}

bool is_statement_word(const Word& w) {
  return w == "go" || w == "if" || w == "print" || w == "move" || w.empty() || w == "{";
}

}  // namespace

std::map<NodeId, NodeClass> classify(const Program& program) {
  const LabeledGraph& g = program.graph;
  std::map<NodeId, NodeClass> classes;
  for (std::uint32_t i = 0; i < g.node_count(); ++i) classes[{i}] = {};

  std::set<NodeId> data;
  if (auto head = g.successor(program.root, "is", kSyntax)) {
    std::deque<NodeId> todo{*head};
    data.insert(*head);
    while (!todo.empty()) {
      NodeId n = todo.front();
      todo.pop_front();
      for (ArrowId id : g.outgoing(n)) {
        const Arrow& a = g.arrow(id);
        if (a.kind == ArrowKind::syntactic && data.insert(a.to).second) todo.push_back(a.to);
      }
    }
  }
  for (const char* label : {"to", "'", "is"})
    for (NodeId n : syntactic_targets(g, label)) data.insert(n);

  for (NodeId n : data) classes[n].kind = NodeKind::data;
  for (NodeId n : syntactic_targets(g, ":")) classes[n].kind = NodeKind::l_chain_member;

  for (NodeId n : tree_nodes(program)) {
    if (n == program.root || classes[n].is_data()) continue;
    const Word& w = g.label(n);
    if (is_statement_word(w)) {
      classes[n].kind = NodeKind::s_node;
      classes[n].control = w == "if" || w == "{" || w == "go";
    }
  }
  return classes;
}

std::vector<NodeId> s_nodes(const Program& program) {
  std::vector<NodeId> result;
  for (const auto& [n, c] : classify(program))
    if (c.is_s_node()) result.push_back(n);
  return result;
}

// ---------------------------------------------------------------- alphabet

std::vector<NodeId> w_declaration_points(const Program& program) {
  const LabeledGraph& g = program.graph;
  auto head = try_resolve(g, PathFormula::current().fwd("is"), program.root, kSyntax);
  if (auto* failure = std::get_if<PathFailure>(&head))
    throw PipelineError("malformed program tree: " + failure->describe());
  std::vector<NodeId> result{std::get<NodeId>(head)};
  for (auto n = g.successor(result.back(), ",", kSyntax); n; n = g.successor(*n, ",", kSyntax)) {
    if (result.size() > g.node_count()) break;
    result.push_back(*n);
  }
  return result;
}

std::vector<NodeId> w_usage_points(const Program& program) {
  const LabeledGraph& g = program.graph;
  const PathFormula print_word = PathFormula::current().fwd("'");
  const PathFormula if_word = PathFormula::current().fwd("").fwd("is");
  std::vector<NodeId> result;
  for (NodeId n : s_nodes(program)) {
    const Word& w = g.label(n);
    const PathFormula* path = w == "print" ? &print_word : w == "if" ? &if_word : nullptr;
    if (!path) continue;
    result.push_back(resolve(g, *path, n, kSyntax));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Diagnostic> check_alphabet(const Program& program) {
  const LabeledGraph& g = program.graph;
  std::vector<Diagnostic> out;
  auto declared = w_declaration_points(program);
  auto used = w_usage_points(program);

  std::map<Word, std::vector<NodeId>> by_word;
  for (NodeId n : declared) by_word[g.label(n)].push_back(n);
  std::set<Word> used_words;
  for (NodeId n : used) used_words.insert(g.label(n));

  for (const auto& [word, nodes] : by_word) {
    if (nodes.size() > 1)
      out.push_back(make_diagnostic(Code::AW1, nodes,
                                    "tape word '" + word.str() + "' is declared " +
                                        std::to_string(nodes.size()) + " times"));
    if (!used_words.count(word))
      out.push_back(make_diagnostic(Code::AW3, nodes,
                                    "tape word '" + word.str() + "' is declared but never used"));
  }
  for (NodeId n : used)
    if (!by_word.count(g.label(n)))
      out.push_back(make_diagnostic(Code::AW2, {n},
                                    "tape word '" + g.label(n).str() + "' is not declared"));
  sort_diagnostics(program, out);
  return out;
}

std::size_t link_is_declared_at(Program& program) {
  if (has_code(check_alphabet(program), Code::AW2))
    throw PipelineError("cannot draw 'is-declared-at' arrows: AW2 is violated");
  LabeledGraph& g = program.graph;
  auto declared = w_declaration_points(program);
  std::size_t added = 0;
  for (NodeId use : w_usage_points(program)) {
    if (!g.outgoing(use, "is-declared-at", ArrowKind::semantic).empty()) continue;
    auto decl = std::find_if(declared.begin(), declared.end(),
                             [&](NodeId d) { return g.label(d) == g.label(use); });
    g.add_arrow(use, "is-declared-at", *decl, ArrowKind::semantic);
    ++added;
  }
  return added;
}

// ------------------------------------------------------------------- labels

LabelPoints label_points(const Program& program) {
  const LabeledGraph& g = program.graph;
  auto classes = classify(program);
  LabelPoints lp;
  for (NodeId n : syntactic_targets(g, ":"))
    if (classes[n].kind == NodeKind::l_chain_member) lp.targets.push_back(n);
  for (ArrowId id : g.arrows_labeled("to", kSyntax)) {
    const Arrow& a = g.arrow(id);
    if (classes[a.from].is_s_node()) lp.usages.push_back(a.to);
  }
  // Source order; generated programs have no positions and fall back to ids.
  auto by_source = [&](NodeId a, NodeId b) {
    return std::pair(program.position(a).value_or(SourcePos{}), a) <
           std::pair(program.position(b).value_or(SourcePos{}), b);
  };
  std::sort(lp.targets.begin(), lp.targets.end(), by_source);
  std::sort(lp.usages.begin(), lp.usages.end(), by_source);
  return lp;
}

std::vector<Diagnostic> check_labels(const Program& program) {
  const LabeledGraph& g = program.graph;
  auto lp = label_points(program);
  std::map<Word, std::vector<NodeId>> targets;
  for (NodeId n : lp.targets) targets[g.label(n)].push_back(n);
  std::set<Word> used;
  for (NodeId n : lp.usages) used.insert(g.label(n));

  std::vector<Diagnostic> out;
  for (const auto& [word, nodes] : targets) {
    if (nodes.size() > 1)
      out.push_back(make_diagnostic(Code::L1, nodes,
                                    "the same identifier '" + word.str() +
                                        "' is used twice as a label"));
    if (!used.count(word))
      for (NodeId n : nodes)
        out.push_back(make_diagnostic(Code::LW1, {n},
                                      "label '" + word.str() + "' is never the target of a go to"));
  }
  for (NodeId n : lp.usages)
    if (!targets.count(g.label(n)))
      out.push_back(make_diagnostic(Code::L2, {n},
                                    "go to specifies '" + g.label(n).str() +
                                        "', which is not a statement label"));
  sort_diagnostics(program, out);
  return out;
}

}  // namespace turingol
