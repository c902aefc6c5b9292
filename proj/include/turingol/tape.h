#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "turingol/graph.h"

namespace turingol {

class TapeSyntaxError : public Error {
 public:
  using Error::Error;
};

/// A finite chain of word-labeled cells linked by empty-labeled arrows of
/// kind tape. `root` is the leftmost cell.
struct Tape {
  LabeledGraph graph;
  NodeId root;

  std::size_t size() const { return graph.node_count(); }
};

/// Whitespace-separated cells, each a composite word or `""` for an empty
/// cell.
Tape parse_tape(std::string_view text);
Tape make_tape(const std::vector<Word>& cells);

/// Grows the tape by one empty cell; returns the new cell.
NodeId expand_left(Tape& t);
NodeId expand_right(Tape& t);

/// Cells left to right starting from `root`.
std::vector<NodeId> tape_cells(const LabeledGraph& g, NodeId root);
/// Leftmost cell of the chain containing `cell`.
NodeId tape_root(const LabeledGraph& g, NodeId cell);

std::string render_cells(const LabeledGraph& g, NodeId root, std::size_t limit = 0);
std::string render_tape(const Tape& t);

}  // namespace turingol
