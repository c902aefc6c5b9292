#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turingol {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// True for characters of the program alphabet: lowercase letters, the
/// hyphen and the punctuation `; { } . : , '`.
constexpr bool is_program_char(char c) {
  if (c >= 'a' && c <= 'z') return true;
  switch (c) {
    case '-': case ';': case '{': case '}': case '.': case ':': case ',': case '\'':
      return true;
    default:
      return false;
  }
}

constexpr bool is_program_word(std::string_view text) {
  for (char c : text)
    if (!is_program_char(c)) return false;
  return true;
}

/// True for `[a-z]+`.
constexpr bool is_lower_word(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text)
    if (c < 'a' || c > 'z') return false;
  return true;
}

/// True for `[a-z]+(-[a-z]+)*`, the shape of composite words.
bool is_composite_word(std::string_view text);

/// A word over the program alphabet. The empty word is valid.
class Word {
 public:
  Word() = default;
  Word(std::string text);  // NOLINT: implicit by design of the label API
  Word(std::string_view text) : Word(std::string(text)) {}
  Word(const char* text) : Word(std::string(text)) {}

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word& a, std::string_view b) { return a.text_ == b; }
  friend bool operator==(const Word& a, const char* b) { return a.text_ == b; }

 private:
  std::string text_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace turingol

template <>
struct std::hash<turingol::Word> {
  std::size_t operator()(const turingol::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
