#include <random>

#include "doctest.h"
#include "turingol/tape.h"

using namespace turingol;

namespace {

std::vector<std::string> cells(const Tape& t) {
  std::vector<std::string> out;
  for (NodeId n : tape_cells(t.graph, t.root)) out.push_back(t.graph.label(n).str());
  return out;
}

void check_chain(const Tape& t) {
  std::size_t roots = 0, lasts = 0;
  for (std::uint32_t i = 0; i < t.graph.node_count(); ++i) {
    auto in = t.graph.incoming({i}, "").size();
    auto out = t.graph.outgoing({i}, "").size();
    CHECK(in <= 1);
    CHECK(out <= 1);
    roots += in == 0;
    lasts += out == 0;
  }
  CHECK(roots == 1);
  CHECK(lasts == 1);
  CHECK(tape_cells(t.graph, t.root).size() == t.size());
}

}  // namespace

TEST_CASE("parse tape") {
  Tape t = parse_tape("one one");
  CHECK(cells(t) == std::vector<std::string>{"one", "one"});
  CHECK(t.graph.arrow_count() == 1);
  CHECK(t.graph.arrow({0}).label.empty());
  CHECK(t.graph.arrow({0}).kind == ArrowKind::tape);

  Tape blank = parse_tape("\"\"");
  CHECK(cells(blank) == std::vector<std::string>{""});

  CHECK_THROWS_AS(parse_tape(""), TapeSyntaxError);
  CHECK_THROWS_AS(parse_tape("   \n"), TapeSyntaxError);
  CHECK_THROWS_AS(parse_tape("one ;"), TapeSyntaxError);
  CHECK_THROWS_AS(parse_tape("One"), TapeSyntaxError);
  CHECK(cells(parse_tape("the-tape-symbol\n x")) == std::vector<std::string>{"the-tape-symbol", "x"});
}

TEST_CASE("expansion") {
  Tape l = parse_tape("one");
  NodeId fresh = expand_left(l);
  CHECK(l.root == fresh);
  CHECK(cells(l) == std::vector<std::string>{"", "one"});

  Tape r = parse_tape("one");
  expand_right(r);
  CHECK(cells(r) == std::vector<std::string>{"one", ""});

  Tape twice = parse_tape("one");
  expand_left(twice);
  expand_left(twice);
  CHECK(cells(twice).size() == 3);
  check_chain(twice);
}

TEST_CASE("render") {
  CHECK(render_tape(parse_tape("one zero point")) == "one zero point");
  CHECK(render_tape(parse_tape("\"\"")) == "\"\"");
  Tape t = parse_tape("a b c d");
  CHECK(render_cells(t.graph, t.root, 2) == "a b ...");
  CHECK(tape_root(t.graph, tape_cells(t.graph, t.root).back()) == t.root);
}

TEST_CASE("random tapes round-trip and keep the chain shape under expansion") {
  std::mt19937_64 rng(17);
  const char* words[] = {"one", "zero", "point", "blank", "\"\"", "x-y"};
  for (int round = 0; round < 300; ++round) {
    std::string text;
    std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) text += std::string(i ? " " : "") + words[rng() % 6];
    Tape t = parse_tape(text);
    CHECK(render_tape(t) == text);
    Tape again = parse_tape(render_tape(t));
    CHECK(cells(again) == cells(t));

    auto before = cells(t);
    for (int k = 0; k < 3; ++k) (rng() % 2 ? expand_left(t) : expand_right(t));
    check_chain(t);
    auto after = cells(t);
    // Expansion never relabels existing cells: the old cells appear in order.
    auto it = std::search(after.begin(), after.end(), before.begin(), before.end());
    CHECK(it != after.end());
  }
}
