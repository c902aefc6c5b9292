#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "turingol/word.h"

namespace turingol {

/// Opaque node handle. Identifiers are dense and never reused.
struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};

struct ArrowId {
  std::uint32_t value = 0;
  friend auto operator<=>(ArrowId, ArrowId) = default;
};

/// Arrows are partitioned by role so that tree checks can look at the
/// syntactic arrows alone.
enum class ArrowKind : std::uint8_t { syntactic, semantic, control, tape };

std::string_view to_string(ArrowKind kind);
std::optional<ArrowKind> arrow_kind_from_string(std::string_view text);

class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(ArrowKind kind) : bits_(bit(kind)) {}  // NOLINT

  static constexpr KindSet all() { return KindSet(0b1111); }
  static constexpr KindSet none() { return KindSet(0); }

  constexpr bool contains(ArrowKind kind) const { return (bits_ & bit(kind)) != 0; }
  constexpr KindSet operator|(KindSet other) const { return KindSet(bits_ | other.bits_); }
  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  constexpr explicit KindSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(ArrowKind k) { return std::uint8_t(1u << unsigned(k)); }
  std::uint8_t bits_ = 0;
};

constexpr KindSet operator|(ArrowKind a, ArrowKind b) { return KindSet(a) | KindSet(b); }

struct Arrow {
  NodeId from;
  Word label;
  NodeId to;
  ArrowKind kind = ArrowKind::syntactic;
};

class DanglingEndpoint : public Error {
 public:
  using Error::Error;
};

/// Finite oriented graph whose nodes and arrows carry words.
///
/// Nothing is ever deleted: the only mutations are node/arrow creation,
/// relabeling a node and moving the head of an arrow. That is exactly the
/// repertoire the executor's actions need.
class LabeledGraph {
 public:
  NodeId add_node(Word label);
  ArrowId add_arrow(NodeId from, Word label, NodeId to, ArrowKind kind);

  void relabel(NodeId node, Word label);
  /// Moves the head (`to` end) of an arrow.
  void reassign(ArrowId arrow, NodeId to);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  bool contains(NodeId node) const { return node.value < labels_.size(); }
  bool contains(ArrowId arrow) const { return arrow.value < arrows_.size(); }

  const Word& label(NodeId node) const;
  const Arrow& arrow(ArrowId arrow) const;

  std::span<const ArrowId> outgoing(NodeId node) const;
  std::span<const ArrowId> incoming(NodeId node) const;

  /// Outgoing arrows of `node` with the given label, restricted to `kinds`.
  std::vector<ArrowId> outgoing(NodeId node, std::string_view label,
                                KindSet kinds = KindSet::all()) const;
  std::vector<ArrowId> incoming(NodeId node, std::string_view label,
                                KindSet kinds = KindSet::all()) const;
  /// Every arrow in the graph carrying `label`.
  std::vector<ArrowId> arrows_labeled(std::string_view label,
                                      KindSet kinds = KindSet::all()) const;
  std::vector<NodeId> nodes_labeled(std::string_view label) const;

  /// Single outgoing arrow with this label, if there is exactly one.
  std::optional<NodeId> successor(NodeId node, std::string_view label,
                                  KindSet kinds = KindSet::all()) const;

  /// Copies every node and arrow of `other` into this graph; returns the
  /// node id offset applied to `other`'s identifiers.
  std::uint32_t absorb(const LabeledGraph& other);

 private:
  void require(NodeId node) const;

  std::vector<Word> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

struct UniLabelViolation {
  NodeId node;
  Word label;
  std::vector<ArrowId> arrows;
};

/// Reports every (node, label) carried by two or more outgoing arrows of
/// the selected kinds. Empty result means the graph is uni-labeled.
std::vector<UniLabelViolation> check_uni_labeled(const LabeledGraph& g,
                                                 KindSet kinds = KindSet::all());

}  // namespace turingol

template <>
struct std::hash<turingol::NodeId> {
  std::size_t operator()(turingol::NodeId id) const noexcept { return id.value; }
};
template <>
struct std::hash<turingol::ArrowId> {
  std::size_t operator()(turingol::ArrowId id) const noexcept { return id.value; }
};
