#include "doctest.h"
#include "json.hpp"
#include "support.h"
#include "turingol/semantics.h"

using namespace turingol;

namespace {

std::vector<std::string> labels_of(const Program& p, const std::vector<NodeId>& nodes) {
  std::vector<std::string> out;
  for (NodeId n : nodes) out.push_back(p.graph.label(n).str());
  return out;
}

std::vector<Code> codes(const std::vector<Diagnostic>& ds) {
  std::vector<Code> out;
  for (const auto& d : ds) out.push_back(d.code);
  return out;
}

}  // namespace

TEST_CASE("severity follows the W in the code") {
  CHECK(severity_of(Code::AW1) == Severity::warning);
  CHECK(severity_of(Code::AW2) == Severity::warning);
  CHECK(severity_of(Code::AW3) == Severity::warning);
  CHECK(severity_of(Code::LW1) == Severity::warning);
  CHECK(severity_of(Code::CW1) == Severity::warning);
  CHECK(severity_of(Code::L1) == Severity::error);
  CHECK(severity_of(Code::L2) == Severity::error);
  CHECK(severity_of(Code::C2) == Severity::error);
  CHECK(severity_of(Code::CRASH) == Severity::error);
}

TEST_CASE("w-declaration-points") {
  Program p = parse_program(testing::increment_program());
  CHECK(labels_of(p, w_declaration_points(p)) ==
        std::vector<std::string>{"blank", "one", "zero", "point"});
  Program one = parse_program("tape-alphabet is a; .");
  CHECK(w_declaration_points(one).size() == 1);

  Program broken;
  broken.root = broken.graph.add_node("tape-alphabet");
  CHECK_THROWS_AS(w_declaration_points(broken), PipelineError);
}

TEST_CASE("w-usage-points") {
  Program p = parse_program(testing::increment_program());
  CHECK(labels_of(p, w_usage_points(p)) ==
        std::vector<std::string>{"point", "one", "zero", "one", "zero"});
  CHECK(w_usage_points(parse_program("tape-alphabet is a; move left one-square.")).empty());
  Program nested = parse_program("tape-alphabet is a, b; if the-tape-symbol is 'a' then print 'b'.");
  CHECK(labels_of(nested, w_usage_points(nested)) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("alphabet requirements") {
  Program p = parse_program(testing::increment_program());
  auto ds = check_alphabet(p);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].code == Code::AW3);
  CHECK(ds[0].severity == Severity::warning);
  CHECK(p.graph.label(ds[0].nodes.at(0)) == "blank");

  auto dup = check_alphabet(parse_program("tape-alphabet is a, a; print 'a'."));
  CHECK(codes(dup) == std::vector<Code>{Code::AW1});
  CHECK(dup[0].nodes.size() == 2);

  auto undeclared = check_alphabet(parse_program("tape-alphabet is a; print 'a'; print 'b'."));
  CHECK(codes(undeclared) == std::vector<Code>{Code::AW2});
}

TEST_CASE("is-declared-at links") {
  Program p = parse_program(testing::increment_program());
  CHECK(link_is_declared_at(p) == 5);
  for (NodeId u : w_usage_points(p)) {
    auto links = p.graph.outgoing(u, "is-declared-at", ArrowKind::semantic);
    REQUIRE(links.size() == 1);
    CHECK(p.graph.label(p.graph.arrow(links[0]).to) == p.graph.label(u));
  }
  CHECK(link_is_declared_at(p) == 0);  // already linked

  Program none = parse_program("tape-alphabet is a; .");
  CHECK(link_is_declared_at(none) == 0);

  Program bad = parse_program("tape-alphabet is a; print 'b'.");
  CHECK_THROWS_AS(link_is_declared_at(bad), PipelineError);
}

TEST_CASE("label points") {
  Program p = parse_program(testing::increment_program());
  auto lp = label_points(p);
  CHECK(labels_of(p, lp.targets) == std::vector<std::string>{"test", "carry", "realign"});
  CHECK(labels_of(p, lp.usages) == std::vector<std::string>{"carry", "test", "realign"});

  auto none = label_points(parse_program("tape-alphabet is a; print 'a'."));
  CHECK(none.targets.empty());
  CHECK(none.usages.empty());

  Program chain = parse_program("tape-alphabet is a; a: b: print 'a'.");
  CHECK(label_points(chain).targets.size() == 2);
}

TEST_CASE("label requirements") {
  CHECK(check_labels(parse_program(testing::increment_program())).empty());

  Program dup = parse_program(testing::fixture("duplicate_label.tgl"));
  auto l1 = check_labels(dup);
  REQUIRE(codes(l1) == std::vector<Code>{Code::L1});
  CHECK(l1[0].severity == Severity::error);
  CHECK(l1[0].nodes.size() == 2);

  auto l2 = check_labels(parse_program(testing::fixture("missing_target.tgl")));
  REQUIRE(codes(l2) == std::vector<Code>{Code::L2});
  CHECK(l2[0].severity == Severity::error);

  auto lw1 = check_labels(parse_program("tape-alphabet is a; x: print 'a'."));
  CHECK(codes(lw1) == std::vector<Code>{Code::LW1});
}

TEST_CASE("classification") {
  Program p = parse_program(testing::increment_program());
  auto classes = classify(p);
  CHECK(classes.size() == p.graph.node_count());
  auto s = s_nodes(p);
  // print, go, if, '{', print, move, go, print, move, if, go
  CHECK(labels_of(p, s) == std::vector<std::string>{"print", "go", "if", "{", "print", "move", "go",
                                                     "print", "move", "if", "go"});
  std::size_t control = 0;
  for (NodeId n : s) control += classes[n].control;
  CHECK(control == 6);
  for (NodeId n : w_declaration_points(p)) CHECK(classes[n].kind == NodeKind::data);
  for (const auto& [n, c] : classes) CHECK_FALSE((c.is_data() && c.is_s_node()));

  // 'go' as label and goto target is data.
  Program g = parse_program("tape-alphabet is a; go: print 'a'; go to go.");
  auto gc = classify(g);
  std::size_t go_statements = 0, go_data = 0;
  for (NodeId n : g.graph.nodes_labeled("go")) {
    if (gc[n].is_s_node()) ++go_statements;
    if (gc[n].is_data()) ++go_data;
  }
  CHECK(go_statements == 1);
  CHECK(go_data == 2);
  CHECK(check_labels(g).empty());
}

TEST_CASE("diagnostic text and json") {
  Program p = parse_program(testing::increment_program());
  auto ds = check_alphabet(p);
  CHECK(to_text(p, ds[0]) ==
        "AW3 warning 1@\"tape-alphabet\"+is tape word 'blank' is declared but never used");
  auto doc = nlohmann::json::parse(diagnostics_to_json(p, ds));
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["code"] == "AW3");
  CHECK(doc[0]["severity"] == "warning");
  CHECK(doc[0]["nodes"][0]["position"] == "1:18");
}

TEST_CASE("diagnostics are sorted and checks are idempotent") {
  Program p = parse_program("tape-alphabet is a, c, c; x: print 'b'; y: print 'd'; go to z.");
  auto first = check_alphabet(p);
  auto second = check_alphabet(p);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(to_text(p, first[i]) == to_text(p, second[i]));
  CHECK(codes(first) == std::vector<Code>{Code::AW1, Code::AW2, Code::AW2, Code::AW3, Code::AW3});
  auto labels = check_labels(p);
  CHECK(codes(labels) == std::vector<Code>{Code::L2, Code::LW1, Code::LW1});
}
