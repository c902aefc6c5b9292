#include <filesystem>
#include <map>

#include "doctest.h"
#include "json.hpp"
#include "support.h"
#include "turingol/executor.h"

using namespace turingol;

namespace {

Program flow_program(std::string_view text) {
  CheckReport r = check_program(text);
  REQUIRE(r.flow_built);
  return std::move(r.program);
}

struct RunCase {
  std::string name, tape, start, final_tape;
};

std::vector<RunCase> run_cases() {
  std::vector<RunCase> out;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(TURINGOL_TEST_DATA) + "/runs")) {
    std::map<std::string, std::string> fields;
    std::istringstream in(testing::read_file(entry.path().string()));
    for (std::string line; std::getline(in, line);) {
      auto colon = line.find(": ");
      if (colon != std::string::npos) fields[line.substr(0, colon)] = line.substr(colon + 2);
    }
    out.push_back({entry.path().stem().string(), fields["tape"], fields["start"], fields["final"]});
  }
  std::sort(out.begin(), out.end(), [](const RunCase& a, const RunCase& b) { return a.name < b.name; });
  return out;
}

}  // namespace

TEST_CASE("start positions") {
  CHECK(StartPosition::parse("first").kind == StartPosition::Kind::first);
  CHECK(StartPosition::parse("last").kind == StartPosition::Kind::last);
  CHECK(StartPosition::parse("3").index == 3);
  CHECK_THROWS_AS(StartPosition::parse("-1"), Error);
  CHECK_THROWS_AS(StartPosition::parse("middle"), Error);
}

TEST_CASE("instruction installation") {
  Program p = flow_program(testing::increment_program());
  auto instr = install_instructions(p);
  CHECK(instr.size() == 13);  // root, stop and 11 statements
  for (const auto& [n, i] : instr) {
    const Word& w = p.graph.label(n);
    bool statement = classify(p)[n].is_s_node();
    CHECK((statement || n == p.root || n == *p.stop));
    REQUIRE_FALSE(i.directions.empty());
    const Action& last = i.directions.back().action;
    CHECK(is_transfer(last));
    if (w == "move") {
      bool left = p.graph.successor(n, "left", ArrowKind::syntactic).has_value();
      REQUIRE(i.directions.size() == 3);
      REQUIRE(i.directions[0].condition.has_value());
      if (left) {
        CHECK(std::holds_alternative<NoArrowTo>(*i.directions[0].condition));
        CHECK(std::holds_alternative<CreateNodeWithArrowToTarget>(i.directions[0].action));
      } else {
        CHECK(std::holds_alternative<NoArrowFrom>(*i.directions[0].condition));
        CHECK(std::holds_alternative<CreateNodeWithArrowFromSource>(i.directions[0].action));
      }
    }
  }
  CHECK(phrase(instr.at(*p.stop)) == "Stop.");
  CHECK(phrase(instr.at(p.root)) == "Follow the 'next' arrow.");

  Program se = flow_program("tape-alphabet is a; .");
  auto se_instr = install_instructions(se);
  NodeId empty = *se.graph.successor(se.root, ";", ArrowKind::syntactic);
  CHECK(phrase(se_instr.at(empty)) == "Follow the 'next' arrow.");

  Program bare = parse_program("tape-alphabet is a; .");
  CHECK_THROWS_AS(install_instructions(bare), PipelineError);
  add_stop_node(bare);
  CHECK_THROWS_AS(install_instructions(bare), PipelineError);
}

TEST_CASE("optimized instructions carry the compared word") {
  Program p = flow_program(testing::increment_program());
  auto instr = install_instructions(p, true);
  std::size_t specialized = 0;
  for (const auto& [n, i] : instr)
    for (const Direction& d : i.directions) {
      if (d.condition && std::holds_alternative<LabelIsWord>(*d.condition)) ++specialized;
      if (std::holds_alternative<RelabelNodeWithWord>(d.action)) ++specialized;
    }
  CHECK(specialized == 5);
}

TEST_CASE("initialization") {
  Tape tape = parse_tape("one one");
  SUBCASE("start at the last cell") {
    Executor ex(flow_program(testing::increment_program()));
    ex.initialize(tape, StartPosition::last());
    auto tapes = ex.graph().outgoing(ex.program().root, "tape");
    REQUIRE(tapes.size() == 1);
    NodeId cell = ex.tape_cell();
    CHECK(ex.graph().outgoing(cell, "").empty());
    CHECK(ex.graph().incoming(cell, "").size() == 1);
    CHECK(ex.state().current == ex.program().root);
    CHECK(ex.state().steps == 0);
    CHECK_THROWS_AS(ex.initialize(tape, StartPosition::last()), PipelineError);
  }
  SUBCASE("index zero is the first cell") {
    Executor a(flow_program(testing::increment_program()));
    Executor b(flow_program(testing::increment_program()));
    a.initialize(tape, StartPosition::at(0));
    b.initialize(tape, StartPosition::first());
    CHECK(a.tape_cell() == b.tape_cell());
  }
  SUBCASE("index out of range") {
    Executor ex(flow_program(testing::increment_program()));
    CHECK_THROWS_AS(ex.initialize(tape, StartPosition::at(5)), Error);
  }
  SUBCASE("requirements") {
    Executor undeclared(flow_program("tape-alphabet is a; print 'b'."));
    CHECK_THROWS_AS(undeclared.initialize(tape, StartPosition::last()), PipelineError);
    Executor self(flow_program(testing::fixture("goto_self.tgl")));
    CHECK_THROWS_AS(self.initialize(tape, StartPosition::last()), PipelineError);
  }
}

TEST_CASE("single steps") {
  Executor ex(flow_program(testing::increment_program()));
  ex.initialize(parse_tape("one one"), StartPosition::last());
  NodeId first = *ex.graph().successor(ex.program().root, ";", ArrowKind::syntactic);
  ex.step();
  CHECK(ex.state().current == first);
  CHECK(ex.state().steps == 1);

  // 'print' then 'move left' put the head on the first 'one': 'if' takes 'yes'.
  while (ex.graph().label(ex.state().current) != "if") ex.step();
  NodeId if_node = ex.state().current;
  CHECK(ex.graph().label(ex.tape_cell()) == "one");
  ex.step();
  CHECK(ex.state().current == *ex.graph().successor(if_node, "yes", ArrowKind::control));
}

TEST_CASE("crash situations") {
  SUBCASE("empty instruction") {
    Executor ex(flow_program(testing::increment_program()));
    ex.initialize(parse_tape("one"), StartPosition::last());
    ex.instructions()[ex.program().root].directions.clear();
    RunResult r = ex.run();
    CHECK(r.outcome == Outcome::crashed);
    CHECK(r.crash->situation == Situation::directions_exhausted);
  }
  SUBCASE("no instruction") {
    Executor ex(flow_program(testing::increment_program()));
    ex.initialize(parse_tape("one"), StartPosition::last());
    NodeId first = *ex.graph().successor(ex.program().root, ";", ArrowKind::syntactic);
    ex.instructions().erase(first);
    RunResult r = ex.run();
    CHECK(r.outcome == Outcome::crashed);
    CHECK(r.crash->situation == Situation::no_instruction);
    CHECK(r.crash->node == first);
    CHECK(r.steps == 1);
  }
  SUBCASE("tape word equal to the root label makes the tape path ambiguous") {
    for (bool cautious : {false, true}) {
      Executor ex(flow_program(testing::increment_program()), ExecOptions{cautious});
      ex.initialize(parse_tape("tape-alphabet one"), StartPosition::last());
      RunResult r = ex.run();
      CHECK(r.outcome == Outcome::crashed);
      CHECK(r.crash->situation == Situation::normal_condition_violated);
      CHECK(r.crash->detail.find("tape-alphabet") != std::string::npos);
    }
  }
}

TEST_CASE("runs match the hand-simulated oracle files") {
  auto cases = run_cases();
  CHECK(cases.size() >= 5);
  for (const RunCase& c : cases) {
    for (bool cautious : {false, true})
      for (bool optimize : {false, true}) {
        CAPTURE(c.name);
        Executor ex(flow_program(testing::increment_program()), ExecOptions{cautious, optimize});
        ex.initialize(parse_tape(c.tape), StartPosition::parse(c.start));
        RunResult r = ex.run();
        CHECK(r.outcome == Outcome::stopped);
        CHECK(r.steps < 10000);
        CHECK(ex.tape_text() == c.final_tape);
      }
  }
}

TEST_CASE("a next cycle exhausts the budget") {
  Executor ex(flow_program(testing::fixture("goto_self.tgl")));
  ex.initialize(parse_tape("a"), StartPosition::last(), /*verify=*/false);
  RunResult r = ex.run(500);
  CHECK(r.outcome == Outcome::budget_exhausted);
  CHECK(r.steps == 500);
}

TEST_CASE("structure and labeling discipline with landing on statements") {
  for (const char* tape : {"one one", "zero", "one zero one one", "blank point", "\"\""})
    for (const char* start : {"first", "last"}) {
      Program p = flow_program(testing::increment_program());
      std::size_t base = p.graph.node_count();
      Executor ex(std::move(p));
      ex.initialize(parse_tape(tape), StartPosition::parse(start));
      auto run = testing::audited_run(ex, base);
      CHECK(run.status == Status::stopped);
      CHECK(run.violations.empty());
    }
}

TEST_CASE("identical inputs give identical traces") {
  auto trace = [] {
    Executor ex(flow_program(testing::increment_program()));
    ex.initialize(parse_tape("one zero one"), StartPosition::last());
    return trace_to_json(ex.run().trace);
  };
  CHECK(trace() == trace());
}

TEST_CASE("trace formats") {
  Executor ex(flow_program(testing::increment_program()));
  ex.initialize(parse_tape("one one"), StartPosition::last());
  RunResult r = ex.run();
  REQUIRE(r.trace.size() == r.steps);
  CHECK(r.trace.front().label == "tape-alphabet");
  CHECK(r.trace.back().label == "stop");
  std::string text = trace_to_text(r.trace);
  CHECK(text.rfind("1 tape-alphabet Follow the 'next' arrow.\n", 0) == 0);
  CHECK(text.find("  tape: one point\n") != std::string::npos);
  auto doc = nlohmann::json::parse(trace_to_json(r.trace));
  CHECK(doc.size() == r.steps);
  CHECK(doc[1]["label"] == "print");
  CHECK(doc[1]["tape"] == "one point");
}
