#pragma once

#include <map>
#include <string>
#include <vector>

#include "turingol/frontend.h"

namespace turingol {

/// Raised when a phase runs before its prerequisites hold.
class PipelineError : public Error {
 public:
  using Error::Error;
};

/// Requirement codes. A W in the name marks a warning: the requirement is
/// not critical for execution.
enum class Code { AW1, AW2, AW3, L1, L2, LW1, CW1, C2, CRASH };
enum class Severity { error, warning };

std::string_view to_string(Code code);
std::string_view to_string(Severity severity);
Severity severity_of(Code code);

struct Diagnostic {
  Code code;
  Severity severity;
  std::vector<NodeId> nodes;
  std::string message;
};

Diagnostic make_diagnostic(Code code, std::vector<NodeId> nodes, std::string message);
bool has_errors(const std::vector<Diagnostic>& diagnostics);
bool has_code(const std::vector<Diagnostic>& diagnostics, Code code);

/// Orders by (code, source position of the first node, node id).
void sort_diagnostics(const Program& program, std::vector<Diagnostic>& diagnostics);

/// Path formula from the root to `n` along syntactic arrows, or "?" when
/// `n` is not in the syntactic tree.
std::string tree_path(const Program& program, NodeId n);

/// `CODE severity node@path[,node@path...] message`
std::string to_text(const Program& program, const Diagnostic& d);
std::string diagnostics_to_json(const Program& program, const std::vector<Diagnostic>& ds);

enum class NodeKind { data, s_node, l_chain_member, other };

struct NodeClass {
  NodeKind kind = NodeKind::other;
  bool control = false;  // s_node only: 'if', '{' and 'go'

  bool is_data() const { return kind == NodeKind::data || kind == NodeKind::l_chain_member; }
  bool is_s_node() const { return kind == NodeKind::s_node; }
  friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

/// Every node of the program graph gets exactly one class. Data wins over
/// statement words: a label or tape word spelled 'go' is data. Destinations
/// of ':' arrows are l_chain_member, which counts as data.
std::map<NodeId, NodeClass> classify(const Program& program);
std::vector<NodeId> s_nodes(const Program& program);

/// The alphabet chain hanging off the root's 'is' arrow.
std::vector<NodeId> w_declaration_points(const Program& program);
/// Tape-word nodes inside print (`+"'"`) and if (`+""+is`) statements.
std::vector<NodeId> w_usage_points(const Program& program);

/// AW1 duplicate declarations, AW2 undeclared usages, AW3 unused
/// declarations. All three are warnings.
std::vector<Diagnostic> check_alphabet(const Program& program);

/// Adds a semantic 'is-declared-at' arrow from each usage point to the
/// declaration with the same word. Refuses when AW2 findings exist.
std::size_t link_is_declared_at(Program& program);

struct LabelPoints {
  std::vector<NodeId> targets;  // ':' destinations
  std::vector<NodeId> usages;   // 'to' destinations
};
LabelPoints label_points(const Program& program);

/// L1 duplicate labels, L2 go-to without target (errors), LW1 unused label
/// (warning).
std::vector<Diagnostic> check_labels(const Program& program);

}  // namespace turingol
