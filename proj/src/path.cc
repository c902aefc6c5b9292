#include "turingol/path.h"

#include <algorithm>
#include <cctype>

namespace turingol {

PathFormula PathFormula::reversed_steps() const {
  PathFormula r{start, {}};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    r.steps.push_back(
        {it->direction == Step::forward ? Step::backward : Step::forward, it->label});
  }
  return r;
}

std::string quote_word(std::string_view word) {
  if (is_lower_word(word)) return std::string(word);
  std::string out = "\"";
  for (char c : word) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_string(const PathFormula& f) {
  std::string out;
  if (f.start) out += quote_word(f.start->str());
  for (const PathStep& s : f.steps) {
    out += static_cast<char>(s.direction);
    out += quote_word(s.label.str());
  }
  return out;
}

namespace {

class PathReader {
 public:
  explicit PathReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() { return done() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  Word token() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '"') {
      ++pos_;
      std::string word;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted word");
        char c = text_[pos_++];
        if (c == '"') break;
        if (c == '\\') {
          if (pos_ >= text_.size()) fail("dangling escape");
          c = text_[pos_++];
        }
        word += c;
      }
      try {
        return Word(word);
      } catch (const InvalidWord& e) {
        fail(e.what());
      }
    }
    std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
    if (begin == pos_) fail("expected a word");
    return Word(text_.substr(begin, pos_ - begin));
  }

  [[noreturn]] void fail(const std::string& what) {
    throw PathSyntaxError("path formula \"" + std::string(text_) + "\", offset " +
                          std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PathFormula parse_path(std::string_view text) {
  PathReader r(text);
  PathFormula f;
  if (r.done()) r.fail("empty formula");
  if (r.peek() != '+' && r.peek() != '-') f.start = r.token();
  while (!r.done()) {
    char c = r.peek();
    if (c != '+' && c != '-') r.fail("expected '+' or '-'");
    r.take();
    Word w = r.token();
    f.steps.push_back({static_cast<Step>(c), std::move(w)});
  }
  return f;
}

std::string_view to_string(PathFailure::Reason reason) {
  switch (reason) {
    case PathFailure::Reason::start_missing: return "no node bears the start label";
    case PathFailure::Reason::start_ambiguous: return "several nodes bear the start label";
    case PathFailure::Reason::no_current: return "no current node";
    case PathFailure::Reason::no_arrow: return "there exists no arrow with such label";
    case PathFailure::Reason::several_arrows: return "there exist several arrows with the same label";
  }
  return "?";
}

std::string PathFailure::describe() const {
  std::string s = "path " + to_string(formula) + " is impassable: " + std::string(to_string(reason));
  if (at_step >= 0) {
    const PathStep& st = formula.steps.at(static_cast<std::size_t>(at_step));
    s += " (step " + std::to_string(at_step + 1) + ", " + static_cast<char>(st.direction) +
         quote_word(st.label.str()) + ")";
  }
  return s;
}

PathError::PathError(PathFailure failure)
    : Error(failure.describe()), failure_(std::move(failure)) {}

Resolution try_resolve(const LabeledGraph& g, const PathFormula& f,
                       std::optional<NodeId> current, KindSet kinds) {
  NodeId at;
  if (f.start) {
    auto starts = g.nodes_labeled(f.start->str());
    if (starts.empty()) return PathFailure{PathFailure::Reason::start_missing, -1, f};
    if (starts.size() > 1) return PathFailure{PathFailure::Reason::start_ambiguous, -1, f};
    at = starts.front();
  } else {
    if (!current || !g.contains(*current))
      return PathFailure{PathFailure::Reason::no_current, -1, f};
    at = *current;
  }
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const PathStep& s = f.steps[i];
    auto ids = s.direction == Step::forward ? g.outgoing(at, s.label.str(), kinds)
                                            : g.incoming(at, s.label.str(), kinds);
    if (ids.size() != 1) {
      return PathFailure{ids.empty() ? PathFailure::Reason::no_arrow
                                     : PathFailure::Reason::several_arrows,
                         static_cast<int>(i), f};
    }
    const Arrow& a = g.arrow(ids.front());
    at = s.direction == Step::forward ? a.to : a.from;
  }
  return at;
}

NodeId resolve(const LabeledGraph& g, const PathFormula& f, std::optional<NodeId> current,
               KindSet kinds) {
  auto r = try_resolve(g, f, current, kinds);
  if (auto* failure = std::get_if<PathFailure>(&r)) throw PathError(std::move(*failure));
  return std::get<NodeId>(r);
}

}  // namespace turingol
