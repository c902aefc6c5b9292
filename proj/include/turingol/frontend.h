#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turingol/graph.h"

namespace turingol {

struct SourcePos {
  int line = 0;
  int column = 0;
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(const SourcePos& pos);

struct Token {
  enum class Kind { word, punct };
  Kind kind;
  Word text;
  SourcePos pos;
};

class LexError : public Error {
 public:
  LexError(const std::string& what, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string expected, std::string found, SourcePos pos);
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string expected_, found_;
  SourcePos pos_;
};

/// Words are maximal `[a-z]+(-[a-z]+)*` runs; `; { } . : , '` are single
/// punctuation tokens; whitespace separates.
std::vector<Token> lex(std::string_view text);

/// A Turingol program as a labeled graph. Straight out of the parser the
/// graph holds the syntactic tree only; semantic links, control arrows, the
/// stop node and the tape are added by later phases.
///
/// Tree encoding (no sibling order is stored):
///   root 'tape-alphabet' --is--> alphabet chain (linked by ',')
///                        --;---> first statement (statements linked by ';')
///                        --""--> '.'
///   statement --:--> label (further labels chained by ':')
///   'go' --to--> label          'print' --'--> tape word
///   'if' --""--> 'the-tape-symbol' --is--> tape word,  'if' --then--> statement
///   'move' --left|right--> 'one-square'
///   '{' --}--> first statement of the inner chain
///   empty statement: node labeled ""
struct Program {
  LabeledGraph graph;
  NodeId root;
  std::map<NodeId, SourcePos> positions;
  std::optional<NodeId> stop;

  std::optional<SourcePos> position(NodeId n) const;
};

Program parse_program(const std::vector<Token>& tokens);
Program parse_program(std::string_view text);

/// Turingol text that reparses to an isomorphic tree.
std::string render_program(const Program& program);

}  // namespace turingol
