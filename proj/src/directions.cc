#include "turingol/directions.h"

#include <cctype>

namespace turingol {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string quoted(const Word& w) { return "'" + w.str() + "'"; }
std::string node_phrase(const PathFormula& f) { return "the " + to_string(f) + " node"; }
std::string passable_phrase(const PathFormula& f) { return to_string(f) + " path is passable"; }

std::optional<ConditionFailure> path_condition(const LabeledGraph& g, const PathFormula& f,
                                               std::optional<NodeId> current,
                                               const std::string& condition) {
  auto r = try_resolve(g, f, current);
  if (auto* failure = std::get_if<PathFailure>(&r))
    return ConditionFailure{condition, failure->describe(), *failure};
  return std::nullopt;
}

std::optional<ConditionFailure> first_failure(
    std::initializer_list<std::optional<ConditionFailure>> checks) {
  for (const auto& c : checks)
    if (c) return c;
  return std::nullopt;
}

std::optional<ConditionFailure> unique_arrow_condition(const LabeledGraph& g, const Word& label,
                                                       const std::string& condition) {
  auto n = g.arrows_labeled(label.str()).size();
  if (n == 1) return std::nullopt;
  return ConditionFailure{condition,
                          n == 0 ? "there exists no arrow with such label"
                                 : "there exist several arrows with the same label",
                          std::nullopt};
}

NodeId must_resolve(const LabeledGraph& g, const PathFormula& f, std::optional<NodeId> current,
                    const std::string& condition) {
  auto r = try_resolve(g, f, current);
  if (auto* failure = std::get_if<PathFailure>(&r))
    throw NormalConditionViolated({condition, failure->describe(), *failure});
  return std::get<NodeId>(r);
}

}  // namespace

bool is_transfer(const Action& a) {
  return std::holds_alternative<FollowArrow>(a) || std::holds_alternative<Stop>(a);
}

NormalConditionViolated::NormalConditionViolated(ConditionFailure failure)
    : Error("normal-execution condition violated (" + failure.condition + "): " + failure.detail),
      failure_(std::move(failure)) {}

std::string condition_phrase(const Proposition& p) {
  return std::visit(
      overloaded{
          [](const LabelsEqual& x) {
            return passable_phrase(x.first) + " and " + passable_phrase(x.second);
          },
          [](const NoArrowTo& x) { return passable_phrase(x.node); },
          [](const NoArrowFrom& x) { return passable_phrase(x.node); },
          [](const UniqueArrowExists&) { return std::string("always evaluable"); },
          [](const PathPassable&) { return std::string("always evaluable"); },
          [](const LabelIsWord& x) { return passable_phrase(x.node); },
      },
      p);
}

std::string condition_phrase(const Action& a) {
  return std::visit(
      overloaded{
          [](const RelabelNode& x) {
            return passable_phrase(x.target) + " and " + passable_phrase(x.source);
          },
          [](const ReassignArrow& x) {
            return passable_phrase(x.target) + " and there exists a unique " + quoted(x.label) +
                   " arrow";
          },
          [](const CreateNodeWithArrowToTarget& x) { return passable_phrase(x.target); },
          [](const CreateNodeWithArrowFromSource& x) { return passable_phrase(x.source); },
          [](const FollowArrow& x) {
            return "there exists a unique " + quoted(x.label) + " arrow from the current node";
          },
          [](const Stop&) { return std::string("always executable"); },
          [](const RelabelNodeWithWord& x) { return passable_phrase(x.target); },
      },
      a);
}

std::optional<ConditionFailure> check_condition(const LabeledGraph& g, const Proposition& p,
                                                std::optional<NodeId> current) {
  const std::string cond = condition_phrase(p);
  return std::visit(
      overloaded{
          [&](const LabelsEqual& x) {
            return first_failure({path_condition(g, x.first, current, cond),
                                  path_condition(g, x.second, current, cond)});
          },
          [&](const NoArrowTo& x) { return path_condition(g, x.node, current, cond); },
          [&](const NoArrowFrom& x) { return path_condition(g, x.node, current, cond); },
          [&](const UniqueArrowExists&) { return std::optional<ConditionFailure>{}; },
          [&](const PathPassable&) { return std::optional<ConditionFailure>{}; },
          [&](const LabelIsWord& x) { return path_condition(g, x.node, current, cond); },
      },
      p);
}

std::optional<ConditionFailure> check_condition(const LabeledGraph& g, const Action& a,
                                                std::optional<NodeId> current) {
  const std::string cond = condition_phrase(a);
  return std::visit(
      overloaded{
          [&](const RelabelNode& x) {
            return first_failure({path_condition(g, x.target, current, cond),
                                  path_condition(g, x.source, current, cond)});
          },
          [&](const ReassignArrow& x) {
            return first_failure({path_condition(g, x.target, current, cond),
                                  unique_arrow_condition(g, x.label, cond)});
          },
          [&](const CreateNodeWithArrowToTarget& x) {
            return path_condition(g, x.target, current, cond);
          },
          [&](const CreateNodeWithArrowFromSource& x) {
            return path_condition(g, x.source, current, cond);
          },
          [&](const FollowArrow& x) -> std::optional<ConditionFailure> {
            if (!current || !g.contains(*current))
              return ConditionFailure{cond, "no current node", std::nullopt};
            auto n = g.outgoing(*current, x.label.str()).size();
            if (n == 1) return std::nullopt;
            return ConditionFailure{cond,
                                    n == 0 ? "there exists no arrow with such label"
                                           : "there exist several arrows with the same label",
                                    std::nullopt};
          },
          [&](const Stop&) { return std::optional<ConditionFailure>{}; },
          [&](const RelabelNodeWithWord& x) { return path_condition(g, x.target, current, cond); },
      },
      a);
}

bool eval(const LabeledGraph& g, const Proposition& p, std::optional<NodeId> current) {
  const auto cond = [&] { return condition_phrase(p); };
  return std::visit(
      overloaded{
          [&](const LabelsEqual& x) {
            NodeId a = must_resolve(g, x.first, current, cond());
            NodeId b = must_resolve(g, x.second, current, cond());
            return g.label(a) == g.label(b);
          },
          [&](const NoArrowTo& x) {
            NodeId n = must_resolve(g, x.node, current, cond());
            return g.incoming(n, x.label.str()).empty();
          },
          [&](const NoArrowFrom& x) {
            NodeId n = must_resolve(g, x.node, current, cond());
            return g.outgoing(n, x.label.str()).empty();
          },
          [&](const UniqueArrowExists& x) { return g.arrows_labeled(x.label.str()).size() == 1; },
          [&](const PathPassable& x) { return passable(g, x.path, current); },
          [&](const LabelIsWord& x) {
            return g.label(must_resolve(g, x.node, current, cond())) == x.word;
          },
      },
      p);
}

ApplyOutcome apply(LabeledGraph& g, const Action& a, NodeId current) {
  const auto cond = [&] { return condition_phrase(a); };
  return std::visit(
      overloaded{
          [&](const RelabelNode& x) -> ApplyOutcome {
            NodeId target = must_resolve(g, x.target, current, cond());
            NodeId source = must_resolve(g, x.source, current, cond());
            g.relabel(target, g.label(source));
            return current;
          },
          [&](const ReassignArrow& x) -> ApplyOutcome {
            NodeId target = must_resolve(g, x.target, current, cond());
            if (auto failure = unique_arrow_condition(g, x.label, cond()))
              throw NormalConditionViolated(*failure);
            g.reassign(g.arrows_labeled(x.label.str()).front(), target);
            return current;
          },
          [&](const CreateNodeWithArrowToTarget& x) -> ApplyOutcome {
            NodeId target = must_resolve(g, x.target, current, cond());
            NodeId fresh = g.add_node(Word{});
            g.add_arrow(fresh, Word{}, target, x.kind);
            return current;
          },
          [&](const CreateNodeWithArrowFromSource& x) -> ApplyOutcome {
            NodeId source = must_resolve(g, x.source, current, cond());
            NodeId fresh = g.add_node(Word{});
            g.add_arrow(source, Word{}, fresh, x.kind);
            return current;
          },
          [&](const FollowArrow& x) -> ApplyOutcome {
            if (auto failure = check_condition(g, Action{x}, current))
              throw NormalConditionViolated(*failure);
            return g.arrow(g.outgoing(current, x.label.str()).front()).to;
          },
          [&](const Stop&) -> ApplyOutcome { return Stopped{}; },
          [&](const RelabelNodeWithWord& x) -> ApplyOutcome {
            g.relabel(must_resolve(g, x.target, current, cond()), x.word);
            return current;
          },
      },
      a);
}

std::string phrase(const Proposition& p) {
  return std::visit(
      overloaded{
          [](const LabelsEqual& x) {
            return node_phrase(x.first) + " label equals " + node_phrase(x.second) + " label";
          },
          [](const NoArrowTo& x) {
            return "no " + quoted(x.label) + " arrow exists to " + node_phrase(x.node);
          },
          [](const NoArrowFrom& x) {
            return "no " + quoted(x.label) + " arrow exists from " + node_phrase(x.node);
          },
          [](const UniqueArrowExists& x) {
            return "there exists a unique " + quoted(x.label) + " arrow";
          },
          [](const PathPassable& x) { return "the " + to_string(x.path) + " path is passable"; },
          [](const LabelIsWord& x) { return node_phrase(x.node) + " label equals " + quoted(x.word); },
      },
      p);
}

std::string phrase(const Action& a) {
  return std::visit(
      overloaded{
          [](const RelabelNode& x) {
            return "label " + node_phrase(x.target) + " by " + node_phrase(x.source) + " label";
          },
          [](const ReassignArrow& x) {
            return "reassign the " + quoted(x.label) + " arrow to " + node_phrase(x.target);
          },
          [](const CreateNodeWithArrowToTarget& x) {
            return "create a node and an arrow from it to " + node_phrase(x.target);
          },
          [](const CreateNodeWithArrowFromSource& x) {
            return "create a node and an arrow from " + node_phrase(x.source) + " to it";
          },
          [](const FollowArrow& x) { return "follow the " + quoted(x.label) + " arrow"; },
          [](const Stop&) { return std::string("stop"); },
          [](const RelabelNodeWithWord& x) {
            return "label " + node_phrase(x.target) + " by " + quoted(x.word);
          },
      },
      a);
}

std::string phrase(const Direction& d) {
  std::string s;
  if (d.condition) {
    s = "If " + phrase(*d.condition) + ", then " + phrase(d.action) + ".";
  } else {
    s = phrase(d.action) + ".";
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string phrase(const Instruction& i) {
  std::string s;
  for (const Direction& d : i.directions) {
    if (!s.empty()) s += ' ';
    s += phrase(d);
  }
  return s;
}

}  // namespace turingol
