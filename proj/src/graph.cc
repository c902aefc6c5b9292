#include "turingol/graph.h"

#include <algorithm>
#include <map>

namespace turingol {

std::string_view to_string(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::syntactic: return "syntactic";
    case ArrowKind::semantic: return "semantic";
    case ArrowKind::control: return "control";
    case ArrowKind::tape: return "tape";
  }
  return "?";
}

std::optional<ArrowKind> arrow_kind_from_string(std::string_view text) {
  for (auto k : {ArrowKind::syntactic, ArrowKind::semantic, ArrowKind::control, ArrowKind::tape})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

NodeId LabeledGraph::add_node(Word label) {
  NodeId id{static_cast<std::uint32_t>(labels_.size())};
  labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

void LabeledGraph::require(NodeId node) const {
  if (!contains(node))
    throw DanglingEndpoint("node n" + std::to_string(node.value) + " does not exist");
}

ArrowId LabeledGraph::add_arrow(NodeId from, Word label, NodeId to, ArrowKind kind) {
  require(from);
  require(to);
  ArrowId id{static_cast<std::uint32_t>(arrows_.size())};
  arrows_.push_back(Arrow{from, std::move(label), to, kind});
  out_[from.value].push_back(id);
  in_[to.value].push_back(id);
  return id;
}

void LabeledGraph::relabel(NodeId node, Word label) {
  require(node);
  labels_[node.value] = std::move(label);
}

void LabeledGraph::reassign(ArrowId id, NodeId to) {
  require(to);
  Arrow& a = arrows_.at(id.value);
  auto& old_in = in_[a.to.value];
  old_in.erase(std::find(old_in.begin(), old_in.end(), id));
  a.to = to;
  auto& new_in = in_[to.value];
  new_in.insert(std::lower_bound(new_in.begin(), new_in.end(), id), id);
}

const Word& LabeledGraph::label(NodeId node) const {
  require(node);
  return labels_[node.value];
}

const Arrow& LabeledGraph::arrow(ArrowId id) const { return arrows_.at(id.value); }

std::span<const ArrowId> LabeledGraph::outgoing(NodeId node) const {
  require(node);
  return out_[node.value];
}

std::span<const ArrowId> LabeledGraph::incoming(NodeId node) const {
  require(node);
  return in_[node.value];
}

namespace {

std::vector<ArrowId> filter(const LabeledGraph& g, std::span<const ArrowId> ids,
                            std::string_view label, KindSet kinds) {
  std::vector<ArrowId> result;
  for (ArrowId id : ids) {
    const Arrow& a = g.arrow(id);
    if (a.label == label && kinds.contains(a.kind)) result.push_back(id);
  }
  return result;
}

}  // namespace

std::vector<ArrowId> LabeledGraph::outgoing(NodeId node, std::string_view label,
                                            KindSet kinds) const {
  return filter(*this, outgoing(node), label, kinds);
}

std::vector<ArrowId> LabeledGraph::incoming(NodeId node, std::string_view label,
                                            KindSet kinds) const {
  return filter(*this, incoming(node), label, kinds);
}

std::vector<ArrowId> LabeledGraph::arrows_labeled(std::string_view label, KindSet kinds) const {
  std::vector<ArrowId> result;
  for (std::uint32_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label && kinds.contains(arrows_[i].kind)) result.push_back({i});
  return result;
}

std::vector<NodeId> LabeledGraph::nodes_labeled(std::string_view label) const {
  std::vector<NodeId> result;
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) result.push_back({i});
  return result;
}

std::optional<NodeId> LabeledGraph::successor(NodeId node, std::string_view label,
                                              KindSet kinds) const {
  auto ids = outgoing(node, label, kinds);
  if (ids.size() != 1) return std::nullopt;
  return arrow(ids.front()).to;
}

std::uint32_t LabeledGraph::absorb(const LabeledGraph& other) {
  auto offset = static_cast<std::uint32_t>(labels_.size());
  for (std::uint32_t i = 0; i < other.node_count(); ++i) add_node(other.label({i}));
  for (std::uint32_t i = 0; i < other.arrow_count(); ++i) {
    const Arrow& a = other.arrow({i});
    add_arrow({a.from.value + offset}, a.label, {a.to.value + offset}, a.kind);
  }
  return offset;
}

std::vector<UniLabelViolation> check_uni_labeled(const LabeledGraph& g, KindSet kinds) {
  std::vector<UniLabelViolation> violations;
  for (std::uint32_t n = 0; n < g.node_count(); ++n) {
    std::map<Word, std::vector<ArrowId>> by_label;
    for (ArrowId id : g.outgoing({n})) {
      const Arrow& a = g.arrow(id);
      if (kinds.contains(a.kind)) by_label[a.label].push_back(id);
    }
    for (auto& [label, ids] : by_label) {
      if (ids.size() > 1) {
        std::sort(ids.begin(), ids.end());
        violations.push_back({NodeId{n}, label, std::move(ids)});
      }
    }
  }
  return violations;
}

}  // namespace turingol
