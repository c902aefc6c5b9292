#include "turingol/word.h"

namespace turingol {

bool is_composite_word(std::string_view text) {
  bool need_letter = true;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      need_letter = false;
    } else if (c == '-' && !need_letter) {
      need_letter = true;
    } else {
      return false;
    }
  }
  return !need_letter;
}

Word::Word(std::string text) : text_(std::move(text)) {
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (!is_program_char(text_[i])) {
      throw InvalidWord("character '" + std::string(1, text_[i]) + "' at offset " +
                        std::to_string(i) + " of \"" + text_ + "\" is outside the program alphabet");
    }
  }
}

}  // namespace turingol
