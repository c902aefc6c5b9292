#include "turingol/tape.h"

#include <sstream>

namespace turingol {

Tape make_tape(const std::vector<Word>& cells) {
  if (cells.empty()) throw TapeSyntaxError("a tape needs at least one cell");
  Tape t;
  t.root = t.graph.add_node(cells.front());
  NodeId last = t.root;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    NodeId n = t.graph.add_node(cells[i]);
    t.graph.add_arrow(last, Word{}, n, ArrowKind::tape);
    last = n;
  }
  return t;
}

Tape parse_tape(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Word> cells;
  std::string token;
  while (in >> token) {
    if (token == "\"\"") {
      cells.emplace_back();
    } else if (is_composite_word(token)) {
      cells.emplace_back(token);
    } else {
      throw TapeSyntaxError("illegal tape cell '" + token + "'");
    }
  }
  if (cells.empty()) throw TapeSyntaxError("empty tape");
  return make_tape(cells);
}

NodeId expand_left(Tape& t) {
  NodeId n = t.graph.add_node(Word{});
  t.graph.add_arrow(n, Word{}, t.root, ArrowKind::tape);
  t.root = n;
  return n;
}

NodeId expand_right(Tape& t) {
  NodeId last = tape_cells(t.graph, t.root).back();
  NodeId n = t.graph.add_node(Word{});
  t.graph.add_arrow(last, Word{}, n, ArrowKind::tape);
  return n;
}

std::vector<NodeId> tape_cells(const LabeledGraph& g, NodeId root) {
  std::vector<NodeId> cells{root};
  for (auto n = g.successor(root, "", ArrowKind::tape); n; n = g.successor(*n, "", ArrowKind::tape)) {
    if (cells.size() > g.node_count()) throw Error("tape chain is cyclic");
    cells.push_back(*n);
  }
  return cells;
}

NodeId tape_root(const LabeledGraph& g, NodeId cell) {
  std::size_t guard = 0;
  for (;;) {
    auto in = g.incoming(cell, "", ArrowKind::tape);
    if (in.size() != 1) return cell;
    cell = g.arrow(in.front()).from;
    if (++guard > g.node_count()) throw Error("tape chain is cyclic");
  }
}

std::string render_cells(const LabeledGraph& g, NodeId root, std::size_t limit) {
  std::string out;
  std::size_t count = 0;
  for (NodeId n : tape_cells(g, root)) {
    if (limit && count == limit) {
      out += " ...";
      break;
    }
    if (count++) out += ' ';
    out += g.label(n).empty() ? "\"\"" : g.label(n).str();
  }
  return out;
}

std::string render_tape(const Tape& t) { return render_cells(t.graph, t.root); }

}  // namespace turingol
