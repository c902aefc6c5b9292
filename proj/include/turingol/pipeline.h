#pragma once

#include <string_view>
#include <vector>

#include "turingol/control_flow.h"

namespace turingol {

struct CheckReport {
  Program program;                       // linked and with control flow when possible
  std::vector<Diagnostic> diagnostics;   // sorted
  bool linked = false;                   // 'is-declared-at' arrows drawn
  bool flow_built = false;               // stop, back, next/yes/no drawn

  bool ok() const { return !has_errors(diagnostics); }
};

/// parse -> AW1..AW3 -> L1/L2/LW1 -> links -> control flow -> CW1 -> C2.
/// Lex and syntax errors propagate as exceptions.
CheckReport check_program(std::string_view text);

}  // namespace turingol
