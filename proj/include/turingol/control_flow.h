#pragma once

#include <vector>

#include "turingol/semantics.h"

namespace turingol {

/// Adds the node labeled 'stop' and records it in `program.stop`.
NodeId add_stop_node(Program& program);

/// Every S node without an outgoing ';' gets one 'back' arrow: to the '{'
/// or 'if' that subordinates its chain, or to the stop node for the top
/// level chain.
std::size_t build_back_arrows(Program& program);

struct ControlCounts {
  std::size_t next = 0, yes = 0, no = 0;
  friend bool operator==(const ControlCounts&, const ControlCounts&) = default;
};

/// Draws the 'next', 'yes' and 'no' arrows. Requires the stop node, the
/// back arrows and a program free of L1/L2 errors.
ControlCounts build_control(Program& program);

/// add_stop_node + build_back_arrows + build_control.
ControlCounts build_flow(Program& program);

/// CW1: S nodes not reachable from the root over next/yes/no.
std::vector<Diagnostic> check_reachability(const Program& program);

/// C2: cycles made of 'next' arrows only.
std::vector<Diagnostic> check_next_acyclic(const Program& program);

}  // namespace turingol
