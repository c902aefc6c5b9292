#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "turingol/graph.h"

namespace turingol {

enum class Step : char { forward = '+', backward = '-' };

struct PathStep {
  Step direction;
  Word label;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Navigation expression. `start` holds the label of the unique starting
/// node; without it the formula starts at the current node.
///
/// Text form: `"tape-alphabet"+tape-""`, `+""+is`, `stop`. Bare tokens are
/// `[a-z]+`; any other word (including the empty one) is double-quoted.
struct PathFormula {
  std::optional<Word> start;
  std::vector<PathStep> steps;

  static PathFormula current() { return {}; }
  static PathFormula from(Word label) { return {std::move(label), {}}; }

  PathFormula& fwd(Word label) {
    steps.push_back({Step::forward, std::move(label)});
    return *this;
  }
  PathFormula& back(Word label) {
    steps.push_back({Step::backward, std::move(label)});
    return *this;
  }

  bool is_relative() const { return !start.has_value(); }
  /// Same start, every step direction flipped and the order reversed.
  PathFormula reversed_steps() const;

  friend bool operator==(const PathFormula&, const PathFormula&) = default;
};

/// `[a-z]+` words are written bare, everything else quoted.
std::string quote_word(std::string_view word);

std::string to_string(const PathFormula& f);
PathFormula parse_path(std::string_view text);

class PathSyntaxError : public Error {
 public:
  using Error::Error;
};

/// Why a formula could not be followed.
struct PathFailure {
  enum class Reason {
    start_missing,    // no node bears the start label
    start_ambiguous,  // several nodes bear it
    no_current,       // relative formula without a current node
    no_arrow,         // step found no arrow
    several_arrows,   // step found more than one arrow
  };
  Reason reason;
  /// Index of the failing step; -1 for start failures.
  int at_step = -1;
  PathFormula formula;

  std::string describe() const;
};

std::string_view to_string(PathFailure::Reason reason);

class PathError : public Error {
 public:
  explicit PathError(PathFailure failure);
  const PathFailure& failure() const { return failure_; }

 private:
  PathFailure failure_;
};

using Resolution = std::variant<NodeId, PathFailure>;

/// Follows `f` through `g`. Each step must find exactly one arrow.
Resolution try_resolve(const LabeledGraph& g, const PathFormula& f,
                       std::optional<NodeId> current = std::nullopt,
                       KindSet kinds = KindSet::all());

/// Throwing variant of try_resolve.
NodeId resolve(const LabeledGraph& g, const PathFormula& f,
               std::optional<NodeId> current = std::nullopt, KindSet kinds = KindSet::all());

inline bool passable(const LabeledGraph& g, const PathFormula& f,
                     std::optional<NodeId> current = std::nullopt,
                     KindSet kinds = KindSet::all()) {
  return std::holds_alternative<NodeId>(try_resolve(g, f, current, kinds));
}

}  // namespace turingol
