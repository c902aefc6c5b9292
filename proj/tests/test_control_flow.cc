#include <set>

#include "doctest.h"
#include "support.h"
#include "turingol/control_flow.h"
#include "turingol/export.h"

using namespace turingol;

namespace {

constexpr KindSet kControl = ArrowKind::control;

std::optional<NodeId> ctl(const Program& p, NodeId n, const char* label) {
  return p.graph.successor(n, label, kControl);
}

std::set<std::pair<std::string, std::string>> back_pairs(const Program& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (ArrowId id : p.graph.arrows_labeled("back", kControl)) {
    const Arrow& a = p.graph.arrow(id);
    out.insert({tree_path(p, a.from), p.graph.label(a.to).str()});
  }
  return out;
}

Program flow(std::string_view text) {
  Program p = parse_program(text);
  build_flow(p);
  return p;
}

// Statement nodes of the increment program by role.
struct Increment {
  Program p = flow(testing::increment_program());
  const LabeledGraph& g = p.graph;
  NodeId s1 = *g.successor(p.root, ";");           // print 'point'
  NodeId s2 = *g.successor(s1, ";");                // go to carry
  NodeId s3 = *g.successor(s2, ";");                // test: if ...
  NodeId block = *g.successor(s3, "then");          // {
  NodeId c1 = *g.successor(block, "}");             // print 'zero'
  NodeId c2 = *g.successor(c1, ";");                // carry: move left
  NodeId c3 = *g.successor(c2, ";");                // go to test
  NodeId s4 = *g.successor(s3, ";");                // print 'one'
  NodeId s5 = *g.successor(s4, ";");                // realign: move right
  NodeId s6 = *g.successor(s5, ";");                // if ... zero
  NodeId s6a = *g.successor(s6, "then");            // go to realign
};

}  // namespace

TEST_CASE("stop node") {
  Program p = parse_program(testing::increment_program());
  auto before = p.graph.node_count();
  NodeId stop = add_stop_node(p);
  CHECK(p.graph.node_count() == before + 1);
  CHECK(p.graph.label(stop) == "stop");
  CHECK_THROWS_AS(add_stop_node(p), PipelineError);
  std::string dot = to_dot(p.graph);
  std::size_t count = 0;
  for (auto at = dot.find("label=\"stop\""); at != std::string::npos; at = dot.find("label=\"stop\"", at + 1))
    ++count;
  CHECK(count == 1);
}

TEST_CASE("back arrows of the increment program") {
  Program p = parse_program(testing::increment_program());
  CHECK_THROWS_AS(build_back_arrows(p), PipelineError);  // no stop yet
  add_stop_node(p);
  CHECK(build_back_arrows(p) == 4);
  const std::string root = "\"tape-alphabet\"";
  auto pairs = back_pairs(p);
  // inner 'go to test' -> its '{'; last 'if' -> stop
  CHECK(pairs.count({root + "+\";\"+\";\"+\";\"+then+\"}\"+\";\"+\";\"", "{"}));
  CHECK(pairs.count({root + "+\";\"+\";\"+\";\"+\";\"+\";\"+\";\"", "stop"}));
  // '{' -> the if it hangs from; 'go to realign' -> its if
  CHECK(pairs.count({root + "+\";\"+\";\"+\";\"+then", "if"}));
  CHECK(pairs.count({root + "+\";\"+\";\"+\";\"+\";\"+\";\"+\";\"+then", "if"}));
}

TEST_CASE("single statement backs onto stop") {
  Program p = parse_program("tape-alphabet is a; print 'a'.");
  NodeId stop = add_stop_node(p);
  CHECK(build_back_arrows(p) == 1);
  CHECK(ctl(p, *p.graph.successor(p.root, ";"), "back") == stop);
}

TEST_CASE("nested if chain") {
  Program p = flow(
      "tape-alphabet is a; if the-tape-symbol is 'a' then if the-tape-symbol is 'a' then print "
      "'a'; print 'a'.");
  const LabeledGraph& g = p.graph;
  NodeId outer = *g.successor(p.root, ";");
  NodeId inner = *g.successor(outer, "then");
  NodeId print = *g.successor(inner, "then");
  NodeId after = *g.successor(outer, ";");
  // back chain print -> inner -> outer, ending at outer's ';'
  CHECK(ctl(p, print, "back") == inner);
  CHECK(ctl(p, inner, "back") == outer);
  CHECK_FALSE(ctl(p, outer, "back"));
  CHECK(ctl(p, print, "next") == after);
  CHECK(ctl(p, inner, "no") == after);
  CHECK(ctl(p, outer, "no") == after);
  CHECK(ctl(p, after, "next") == *p.stop);
}

TEST_CASE("control flow of the increment program") {
  Increment x;
  const Program& p = x.p;
  CHECK(ctl(p, p.root, "next") == x.s1);
  CHECK(ctl(p, x.s1, "next") == x.s2);
  CHECK(ctl(p, x.s2, "next") == x.c2);
  CHECK(ctl(p, x.s3, "yes") == x.block);
  CHECK(ctl(p, x.s3, "no") == x.s4);  // parallel to its ';'
  CHECK(ctl(p, x.block, "next") == x.c1);
  CHECK(ctl(p, x.c1, "next") == x.c2);
  CHECK(ctl(p, x.c2, "next") == x.c3);
  CHECK(ctl(p, x.c3, "next") == x.s3);
  CHECK(ctl(p, x.s4, "next") == x.s5);
  CHECK(ctl(p, x.s5, "next") == x.s6);
  CHECK(ctl(p, x.s6, "yes") == x.s6a);
  CHECK(ctl(p, x.s6, "no") == *p.stop);
  CHECK(ctl(p, x.s6a, "next") == x.s5);
  CHECK(check_reachability(p).empty());
  CHECK(check_next_acyclic(p).empty());
}

TEST_CASE("out-degree contract") {
  for (const char* text :
       {"tape-alphabet is a; .", "tape-alphabet is a; {}; {{}}.",
        "tape-alphabet is a; x: if the-tape-symbol is 'a' then {print 'a'; go to x}; move right "
        "one-square."}) {
    Program p = flow(text);
    auto outdeg = [&](NodeId n, const char* label) { return p.graph.outgoing(n, label, kControl).size(); };
    CHECK(outdeg(p.root, "next") == 1);
    CHECK(p.graph.outgoing(*p.stop).empty());
    for (NodeId n : s_nodes(p)) {
      bool is_if = p.graph.label(n) == "if";
      CHECK(outdeg(n, "next") == (is_if ? 0u : 1u));
      CHECK(outdeg(n, "yes") == (is_if ? 1u : 0u));
      CHECK(outdeg(n, "no") == (is_if ? 1u : 0u));
    }
  }
  Increment x;
  auto classes = classify(x.p);
  for (std::uint32_t i = 0; i < x.g.arrow_count(); ++i) {
    const Arrow& a = x.g.arrow({i});
    if (a.kind != ArrowKind::control) continue;
    for (NodeId end : {a.from, a.to})
      CHECK((classes[end].is_s_node() || end == x.p.root || end == *x.p.stop));
  }
}

TEST_CASE("control construction is deterministic") {
  Program a = flow(testing::increment_program());
  Program b = flow(testing::increment_program());
  CHECK(to_json(a.graph) == to_json(b.graph));
}

TEST_CASE("control construction refuses label errors") {
  Program p = parse_program(testing::fixture("missing_target.tgl"));
  add_stop_node(p);
  build_back_arrows(p);
  CHECK_THROWS_AS(build_control(p), PipelineError);
}

TEST_CASE("go to itself") {
  Program p = flow(testing::fixture("goto_self.tgl"));
  NodeId go = *p.graph.successor(p.root, ";");
  CHECK(ctl(p, go, "next") == go);
  CHECK(check_reachability(p).empty());
  auto c2 = check_next_acyclic(p);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].code == Code::C2);
  CHECK(c2[0].severity == Severity::error);
}

TEST_CASE("reachability") {
  Program p = flow("tape-alphabet is a; go to x; print 'a'; x: print 'a'.");
  auto cw1 = check_reachability(p);
  REQUIRE(cw1.size() == 1);
  CHECK(cw1[0].code == Code::CW1);
  CHECK(p.graph.label(cw1[0].nodes[0]) == "print");
  CHECK(p.position(cw1[0].nodes[0])->column == 30);

  CHECK(check_reachability(flow("tape-alphabet is a; .")).empty());
  CHECK(check_next_acyclic(flow("tape-alphabet is a; print 'a'; move left one-square.")).empty());
}
