#include "turingol/frontend.h"

#include <cctype>

namespace turingol {

std::string to_string(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

LexError::LexError(const std::string& what, SourcePos pos)
    : Error(to_string(pos) + ": " + what), pos_(pos) {}

SyntaxError::SyntaxError(std::string expected, std::string found, SourcePos pos)
    : Error(to_string(pos) + ": expected " + expected + ", found " + found),
      expected_(std::move(expected)),
      found_(std::move(found)),
      pos_(pos) {}

std::optional<SourcePos> Program::position(NodeId n) const {
  if (auto it = positions.find(n); it != positions.end()) return it->second;
  return std::nullopt;
}

// -------------------------------------------------------------------- lexer

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  SourcePos pos{1, 1};
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  auto is_letter = [](char c) { return c >= 'a' && c <= 'z'; };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance();
    } else if (is_letter(c)) {
      SourcePos start = pos;
      std::string word;
      while (i < text.size()) {
        if (is_letter(text[i])) {
          word += text[i];
          advance();
        } else if (text[i] == '-' && i + 1 < text.size() && is_letter(text[i + 1])) {
          word += '-';
          advance();
        } else {
          break;
        }
      }
      tokens.push_back({Token::Kind::word, Word(word), start});
    } else if (c != '-' && is_program_char(c)) {
      tokens.push_back({Token::Kind::punct, Word(std::string(1, c)), pos});
      advance();
    } else {
      std::string shown = std::isprint(static_cast<unsigned char>(c))
                              ? std::string(1, c)
                              : "\\x" + std::to_string(static_cast<unsigned char>(c));
      throw LexError("illegal character '" + shown + "'", pos);
    }
  }
  return tokens;
}

// ------------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Program parse() {
    const Token& head = expect_word("tape-alphabet");
    program_.root = node(head.text, head.pos);
    expect_word("is");
    NodeId first_symbol = parse_chain(",");
    add(program_.root, "is", first_symbol);
    expect_punct(";");
    add(program_.root, ";", parse_list());
    const Token& dot = expect_punct(".");
    add(program_.root, "", node(dot.text, dot.pos));
    if (!at_end()) fail("end of program");
    return std::move(program_);
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool peek_is(std::string_view text, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->text == text;
  }
  bool peek_punct(std::string_view text, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->kind == Token::Kind::punct && t->text == text;
  }

  SourcePos here() const {
    if (const Token* t = peek()) return t->pos;
    if (!tokens_.empty()) return tokens_.back().pos;
    return {1, 1};
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = at_end() ? "end of input" : "'" + peek()->text.str() + "'";
    throw SyntaxError(expected, found, here());
  }

  const Token& expect_word(std::string_view text) {
    if (!peek_is(text) || peek()->kind != Token::Kind::word) fail("'" + std::string(text) + "'");
    return tokens_[pos_++];
  }
  const Token& expect_punct(std::string_view text) {
    if (!peek_punct(text)) fail("'" + std::string(text) + "'");
    return tokens_[pos_++];
  }
  const Token& expect_identifier() {
    const Token* t = peek();
    if (!t || t->kind != Token::Kind::word || !is_lower_word(t->text.str()))
      fail("an identifier ([a-z]+)");
    return tokens_[pos_++];
  }

  NodeId node(const Word& label, SourcePos pos) {
    NodeId n = program_.graph.add_node(label);
    program_.positions[n] = pos;
    return n;
  }
  void add(NodeId from, const char* label, NodeId to) {
    program_.graph.add_arrow(from, Word(label), to, ArrowKind::syntactic);
  }

  /// identifier (sep identifier)*, linked by `sep` arrows; returns the head.
  NodeId parse_chain(const char* sep) {
    const Token& first = expect_identifier();
    NodeId head = node(first.text, first.pos);
    NodeId last = head;
    while (peek_punct(sep)) {
      ++pos_;
      const Token& t = expect_identifier();
      NodeId next = node(t.text, t.pos);
      add(last, sep, next);
      last = next;
    }
    return head;
  }

  /// statement (';' statement)*; returns the first statement.
  NodeId parse_list() {
    NodeId head = parse_statement();
    NodeId last = head;
    while (peek_punct(";")) {
      ++pos_;
      NodeId next = parse_statement();
      add(last, ";", next);
      last = next;
    }
    return head;
  }

  NodeId parse_statement() {
    std::vector<const Token*> labels;
    while (peek() && peek()->kind == Token::Kind::word && peek_punct(":", 1)) {
      labels.push_back(&expect_identifier());
      ++pos_;
    }
    NodeId stmt = parse_unlabeled();
    NodeId from = stmt;
    for (const Token* l : labels) {
      NodeId label = node(l->text, l->pos);
      add(from, ":", label);
      from = label;
    }
    return stmt;
  }

  NodeId parse_unlabeled() {
    const Token* t = peek();
    if (!t || peek_punct(";") || peek_punct("}") || peek_punct(".")) {
      if (!t) fail("a statement");
      return node(Word{}, t->pos);  // empty statement
    }
    SourcePos pos = t->pos;
    if (t->kind == Token::Kind::word) {
      if (t->text == "print") {
        ++pos_;
        NodeId stmt = node(Word("print"), pos);
        expect_punct("'");
        const Token& id = expect_identifier();
        expect_punct("'");
        add(stmt, "'", node(id.text, id.pos));
        return stmt;
      }
      if (t->text == "move") {
        ++pos_;
        NodeId stmt = node(Word("move"), pos);
        const char* side = peek_is("left") ? "left" : peek_is("right") ? "right" : nullptr;
        if (!side) fail("'left' or 'right'");
        ++pos_;
        const Token& square = expect_word("one-square");
        add(stmt, side, node(square.text, square.pos));
        return stmt;
      }
      if (t->text == "go") {
        ++pos_;
        NodeId stmt = node(Word("go"), pos);
        expect_word("to");
        const Token& id = expect_identifier();
        add(stmt, "to", node(id.text, id.pos));
        return stmt;
      }
      if (t->text == "if") {
        ++pos_;
        NodeId stmt = node(Word("if"), pos);
        const Token& symbol = expect_word("the-tape-symbol");
        NodeId symbol_node = node(symbol.text, symbol.pos);
        add(stmt, "", symbol_node);
        expect_word("is");
        expect_punct("'");
        const Token& id = expect_identifier();
        expect_punct("'");
        add(symbol_node, "is", node(id.text, id.pos));
        expect_word("then");
        add(stmt, "then", parse_statement());
        return stmt;
      }
    } else if (t->text == "{") {
      ++pos_;
      NodeId stmt = node(Word("{"), pos);
      NodeId inner = parse_list();
      expect_punct("}");
      add(stmt, "}", inner);
      return stmt;
    }
    fail("a statement");
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  Program program_;
};

}  // namespace

Program parse_program(const std::vector<Token>& tokens) { return Parser(tokens).parse(); }

Program parse_program(std::string_view text) { return parse_program(lex(text)); }

// ----------------------------------------------------------------- renderer

namespace {

class Renderer {
 public:
  explicit Renderer(const Program& p) : g_(p.graph) {}

  std::string program(NodeId root) {
    if (g_.label(root) != "tape-alphabet") bad("root is not 'tape-alphabet'");
    std::string out = "tape-alphabet is " + chain(one(root, "is"), ",", ", ") + ";\n";
    out += list(one(root, ";"), ";\n");
    NodeId dot = one(root, "");
    if (g_.label(dot) != ".") bad("'.' node missing");
    return out + "\n.\n";
  }

 private:
  [[noreturn]] void bad(const std::string& what) const {
    throw Error("non-canonical program tree: " + what);
  }

  NodeId one(NodeId from, std::string_view label) const {
    auto ids = g_.outgoing(from, label);
    if (ids.size() != 1) bad("expected one '" + std::string(label) + "' arrow");
    return g_.arrow(ids.front()).to;
  }
  std::optional<NodeId> maybe(NodeId from, std::string_view label) const {
    auto ids = g_.outgoing(from, label);
    if (ids.size() > 1) bad("several '" + std::string(label) + "' arrows");
    if (ids.empty()) return std::nullopt;
    return g_.arrow(ids.front()).to;
  }

  std::string chain(NodeId head, std::string_view sep, std::string_view joiner) const {
    std::string out = g_.label(head).str();
    for (auto n = maybe(head, sep); n; n = maybe(*n, sep)) out += std::string(joiner) + g_.label(*n).str();
    return out;
  }

  std::string list(NodeId head, std::string_view joiner) const {
    std::string out = statement(head);
    for (auto n = maybe(head, ";"); n; n = maybe(*n, ";")) out += std::string(joiner) + statement(*n);
    return out;
  }

  std::string statement(NodeId s) const {
    std::string prefix;
    if (auto label = maybe(s, ":")) prefix = chain(*label, ":", ": ") + ": ";
    const std::string& word = g_.label(s).str();
    if (word.empty()) return prefix;
    if (word == "print") return prefix + "print '" + g_.label(one(s, "'")).str() + "'";
    if (word == "go") return prefix + "go to " + g_.label(one(s, "to")).str();
    if (word == "move") {
      auto left = maybe(s, "left");
      auto right = maybe(s, "right");
      if (left.has_value() == right.has_value()) bad("move needs exactly one of left/right");
      return prefix + "move " + (left ? "left" : "right") + " one-square";
    }
    if (word == "if") {
      NodeId symbol = one(s, "");
      return prefix + "if the-tape-symbol is '" + g_.label(one(symbol, "is")).str() + "' then " +
             statement(one(s, "then"));
    }
    if (word == "{") return prefix + "{" + list(one(s, "}"), "; ") + "}";
    bad("unknown statement '" + word + "'");
  }

  const LabeledGraph& g_;
};

}  // namespace

std::string render_program(const Program& program) {
  for (std::uint32_t i = 0; i < program.graph.arrow_count(); ++i)
    if (program.graph.arrow({i}).kind != ArrowKind::syntactic)
      throw Error("non-canonical program tree: " + std::string(to_string(program.graph.arrow({i}).kind)) +
                  " arrow present");
  return Renderer(program).program(program.root);
}

}  // namespace turingol
