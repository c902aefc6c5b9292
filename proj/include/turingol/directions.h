#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "turingol/path.h"

namespace turingol {

// Propositions over a labeled graph.

/// "The P1 node label equals the P2 node label."
struct LabelsEqual {
  PathFormula first, second;
};
/// "No 'W' arrow exists to the P node."
struct NoArrowTo {
  Word label;
  PathFormula node;
};
/// "No 'W' arrow exists from the P node."
struct NoArrowFrom {
  Word label;
  PathFormula node;
};
/// "There exists a unique 'W' arrow" (over the whole graph).
struct UniqueArrowExists {
  Word label;
};
/// "The P path is passable."
struct PathPassable {
  PathFormula path;
};
/// "The P node label equals 'W'." Produced only by instruction
/// specialization, where the compared word is copied into the instruction.
struct LabelIsWord {
  PathFormula node;
  Word word;
};

using Proposition =
    std::variant<LabelsEqual, NoArrowTo, NoArrowFrom, UniqueArrowExists, PathPassable, LabelIsWord>;

// Actions.

/// "Label the P1 node by the P2 node label."
struct RelabelNode {
  PathFormula target, source;
};
/// "Reassign the 'W' arrow to the P node."
struct ReassignArrow {
  Word label;
  PathFormula target;
};
/// "Create a node and an arrow from it to the P node."
struct CreateNodeWithArrowToTarget {
  PathFormula target;
  ArrowKind kind = ArrowKind::tape;
};
/// "Create a node and an arrow from the P node to it."
struct CreateNodeWithArrowFromSource {
  PathFormula source;
  ArrowKind kind = ArrowKind::tape;
};
/// "Follow the 'W' arrow."
struct FollowArrow {
  Word label;
};
struct Stop {};
/// "Label the P node by 'W'." Specialized form of RelabelNode.
struct RelabelNodeWithWord {
  PathFormula target;
  Word word;
};

using Action = std::variant<RelabelNode, ReassignArrow, CreateNodeWithArrowToTarget,
                            CreateNodeWithArrowFromSource, FollowArrow, Stop, RelabelNodeWithWord>;

/// Ends the current instruction when performed.
bool is_transfer(const Action& a);

/// A normal-execution condition that does not hold.
struct ConditionFailure {
  std::string condition;  // the condition, phrased
  std::string detail;     // what went wrong
  std::optional<PathFailure> path;
};

class NormalConditionViolated : public Error {
 public:
  explicit NormalConditionViolated(ConditionFailure failure);
  const ConditionFailure& failure() const { return failure_; }

 private:
  ConditionFailure failure_;
};

/// Necessary and sufficient condition of normal evaluation, phrased.
std::string condition_phrase(const Proposition& p);
std::string condition_phrase(const Action& a);

/// Checks the normal-execution condition without evaluating anything.
std::optional<ConditionFailure> check_condition(const LabeledGraph& g, const Proposition& p,
                                                std::optional<NodeId> current);
std::optional<ConditionFailure> check_condition(const LabeledGraph& g, const Action& a,
                                                std::optional<NodeId> current);

/// Evaluates a proposition. Throws NormalConditionViolated instead of
/// returning false when a referenced path is impassable.
bool eval(const LabeledGraph& g, const Proposition& p, std::optional<NodeId> current = {});

struct Stopped {
  friend bool operator==(Stopped, Stopped) = default;
};
using ApplyOutcome = std::variant<NodeId, Stopped>;

/// Performs an action; returns the new current node (unchanged unless the
/// action follows an arrow) or Stopped.
ApplyOutcome apply(LabeledGraph& g, const Action& a, NodeId current);

/// Direction: an action, optionally guarded by a proposition.
struct Direction {
  std::optional<Proposition> condition;
  Action action;

  static Direction act(Action a) { return {std::nullopt, std::move(a)}; }
  static Direction when(Proposition p, Action a) { return {std::move(p), std::move(a)}; }
};

struct Instruction {
  std::vector<Direction> directions;
};

std::string phrase(const Proposition& p);
/// Lowercase action phrase, e.g. "follow the 'next' arrow".
std::string phrase(const Action& a);
/// Sentence form: "If <p>, then <a>." or "<A>."
std::string phrase(const Direction& d);
std::string phrase(const Instruction& i);

}  // namespace turingol
