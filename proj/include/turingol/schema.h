#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "turingol/graph.h"

namespace turingol {

class SchemaError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Label constraint of a schema node or AND arrow. Closed on purpose: a
/// literal word, a finite set of words, or `[a-z]+`. Membership and overlap
/// are decided by case analysis.
class RegexSpec {
 public:
  enum class Kind { literal, alternation, lower_word };

  static RegexSpec literal(Word w);
  static RegexSpec alternation(std::vector<Word> words);
  static RegexSpec lower_word();

  Kind kind() const { return kind_; }
  /// The literal word, or the members of the alternation.
  const std::vector<Word>& words() const { return words_; }

  bool matches(std::string_view word) const;
  /// True when the denoted regular sets intersect.
  bool overlaps(const RegexSpec& other) const;

  /// Grammar notation: `'is'`, `('left' | 'right')`, `[a-z]+`. The empty
  /// literal is `''`.
  std::string to_ebnf() const;

  friend bool operator==(const RegexSpec&, const RegexSpec&) = default;

 private:
  Kind kind_ = Kind::literal;
  std::vector<Word> words_;
};

/// Schema names are MLA words: uppercase letters and digits.
bool is_schema_name(std::string_view name);

struct SchemaNode {
  std::string name;
  RegexSpec label;
  /// Position of the node's own word among its production items.
  std::optional<int> order;
};

enum class ArrowVariant { and_arrow, or_arrow };

struct SchemaArrow {
  std::string from;
  std::string to;
  ArrowVariant variant = ArrowVariant::and_arrow;
  RegexSpec label;  // AND arrows only; OR arrows carry the empty literal
  bool optional = false;
  std::optional<int> order;
  /// The arrow word is written after the child's chain.
  bool suffix = false;

  bool is_and() const { return variant == ArrowVariant::and_arrow; }
};

enum class SchemaNodeClass { atomic, or_node, and_node, mixed };
std::string_view to_string(SchemaNodeClass c);

/// Completely named syntactic schema.
class Schema {
 public:
  Schema& add_node(std::string name, RegexSpec label, std::optional<int> order = std::nullopt);
  Schema& add_and(std::string from, RegexSpec label, std::string to, bool optional,
                  std::optional<int> order = std::nullopt, bool suffix = false);
  Schema& add_or(std::string from, std::string to);

  const std::vector<SchemaNode>& nodes() const { return nodes_; }
  const std::vector<SchemaArrow>& arrows() const { return arrows_; }

  const SchemaNode* find(std::string_view name) const;
  const SchemaNode& node(std::string_view name) const;
  /// Indices into arrows() of the arrows leaving `name`.
  std::vector<std::size_t> outgoing(std::string_view name) const;
  std::vector<std::size_t> and_arrows(std::string_view name) const;
  std::vector<std::size_t> or_arrows(std::string_view name) const;

  SchemaNodeClass classify(std::string_view name) const;

 private:
  std::vector<SchemaNode> nodes_;
  std::vector<SchemaArrow> arrows_;
};

std::string schema_to_json(const Schema& s);
Schema schema_from_json(const std::string& text);

struct SchemaDiagnostic {
  enum class Code {
    duplicate_name,
    bad_name,
    unknown_node,
    labeled_or_node,     // node with outgoing OR arrows carries a non-empty label
    parallel_or,         // two OR arrows with the same ends
    mandatory_and_loop,  // cycle of mandatory AND arrows: never finishes
    empty_alternation,
  };
  Code code;
  std::vector<std::string> nodes;
  std::string message;
};

struct SchemaValidation {
  std::vector<SchemaDiagnostic> errors;
  std::map<std::string, SchemaNodeClass> classes;
  bool ok() const { return errors.empty(); }
};

SchemaValidation validate(const Schema& s);

struct AndConflict {
  std::string node;
  std::size_t first_arrow;
  std::size_t second_arrow;
};

/// Pairs of AND arrows leaving one node whose label sets intersect.
std::vector<AndConflict> check_and_condition(const Schema& s);

/// Schema cycle as a list of node names; the first name is repeated at the
/// end when printed.
struct SchemaCycle {
  std::vector<std::string> nodes;
  std::string to_string() const;  // e.g. "SC-L-S-SC"
};

/// Elementary cycles that use at least one OR arrow, each rotated to start
/// at its first AND node (if any).
std::vector<SchemaCycle> or_cycles(const Schema& s);

/// Cycles through OR arrows that avoid every AND node. Empty means each
/// such cycle passes through an AND node.
std::vector<SchemaCycle> check_and_cycle_condition(const Schema& s);

struct LabelPair {
  std::string origin;
  std::size_t arrow;  // index into Schema::arrows()
  RegexSpec label;
};

struct PairConflict {
  std::string node;
  LabelPair first;
  LabelPair second;
};

struct PairPropagation {
  /// Pairs resting on each AND/atomic node, native ones included.
  std::map<std::string, std::vector<LabelPair>> settled;
  std::vector<PairConflict> conflicts;
  bool uni_labeled() const { return conflicts.empty(); }
};

/// Pushes an (origin, label) pair for every AND arrow along OR arrows until
/// it settles on AND and atomic nodes, then reports overlapping pairs.
/// Throws SchemaError when the AND-cycle condition fails.
PairPropagation propagate_pairs(const Schema& s);

/// Sentential tree: a labeled tree whose pending (auxiliary) nodes carry a
/// schema name instead of a word.
struct Setr {
  LabeledGraph graph;
  NodeId root;
  /// Auxiliary nodes and their schema names; their graph label is empty.
  std::map<NodeId, std::string> auxiliary;
  /// Schema nodes applied to each node, in application order (OR arrows
  /// make one tree node pass through several schema nodes).
  std::map<NodeId, std::vector<std::string>> lineage;
  /// Tree arrow created for (tree node, schema arrow index).
  std::map<std::pair<NodeId, std::size_t>, ArrowId> arrow_origin;

  bool is_sytr() const { return auxiliary.empty(); }
  /// Node label, or the schema name for auxiliary nodes.
  std::string display(NodeId n) const;
};

/// Supplies the word that instantiates a regex. `context` is the schema node
/// being expanded.
using WordSource = std::function<Word(const RegexSpec&, std::string_view context)>;

/// Literal words as-is, first alternation member, "x" for `[a-z]+`.
WordSource placeholder_words();
/// Literals as-is; alternation members and `[a-z]+` words drawn uniformly
/// (the latter from `pool`).
WordSource pool_words(std::vector<Word> pool, std::mt19937_64& rng);

/// All one-step sentential trees of a schema node: each subset of the
/// optional AND arrows times each OR choice.
std::vector<Setr> expansions(const Schema& s, std::string_view name,
                             const WordSource& words = placeholder_words());

struct GenerationOptions {
  std::size_t node_budget = 200;
  double optional_probability = 0.5;
};

/// Builds a syntactic tree by substituting random expansions for auxiliary
/// nodes until none remain. Past half the budget only mandatory arrows and
/// the cheapest OR targets are chosen. Throws BudgetExceeded when auxiliary
/// nodes remain at the budget.
Setr generate_sytr(const Schema& s, std::string_view root_name, std::mt19937_64& rng,
                   const WordSource& words, GenerationOptions options = {});

/// Orders a generated tree into a word chain using the schema numbering.
std::vector<std::string> linearize(const Schema& s, const Setr& tree);
/// Words joined by spaces, with a line break after each ';'.
std::string linearize_text(const Schema& s, const Setr& tree);

/// One production per node, e.g. `L ::= S (';' L)?`.
std::string export_grammar(const Schema& s);
std::string production(const Schema& s, std::string_view name);

/// Completely named schema for Turingol (16 nodes).
const Schema& turingol_schema();

}  // namespace turingol
