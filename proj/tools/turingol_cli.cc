// turingol: check, run and inspect Turingol programs.
//
// Exit codes: 0 success (program stopped), 1 errors, 2 crash, 3 step
// budget exhausted.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "turingol/executor.h"
#include "turingol/export.h"
#include "turingol/pipeline.h"
#include "turingol/schema.h"

using namespace turingol;

namespace {

enum Exit { kOk = 0, kErrors = 1, kCrash = 2, kBudget = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_diagnostics(const CheckReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << diagnostics_to_json(r.program, r.diagnostics) << "\n";
    return;
  }
  for (const Diagnostic& d : r.diagnostics) std::cout << to_text(r.program, d) << "\n";
}

int cmd_check(const std::string& file, const std::string& format) {
  CheckReport r = check_program(read_file(file));
  print_diagnostics(r, format);
  return r.ok() ? kOk : kErrors;
}

struct RunArgs {
  std::string file, tape, tape_file, start = "last", trace = "off";
  std::size_t max_steps = 10000;
  bool cautious = false, optimize = false;
};

int cmd_run(const RunArgs& a) {
  CheckReport r = check_program(read_file(a.file));
  if (!r.ok() || !r.flow_built || has_code(r.diagnostics, Code::AW2)) {
    for (const Diagnostic& d : r.diagnostics) std::cerr << to_text(r.program, d) << "\n";
    return kErrors;
  }
  Tape tape = parse_tape(a.tape_file.empty() ? a.tape : read_file(a.tape_file));
  Executor ex(std::move(r.program), ExecOptions{a.cautious, a.optimize});
  ex.initialize(tape, StartPosition::parse(a.start));
  RunResult result = ex.run(a.max_steps, a.trace != "off");
  if (a.trace == "text") std::cout << trace_to_text(result.trace);
  if (a.trace == "json") std::cout << trace_to_json(result.trace) << "\n";
  std::cout << ex.tape_text() << "\n";
  std::cerr << to_string(result.outcome) << " after " << result.steps << " steps\n";
  switch (result.outcome) {
    case Outcome::stopped: return kOk;
    case Outcome::crashed:
      std::cerr << to_string(result.crash->situation) << " at node " << result.crash->node.value
                << " ('" << ex.graph().label(result.crash->node) << "'): " << result.crash->detail
                << "\n";
      return kCrash;
    case Outcome::budget_exhausted: return kBudget;
  }
  return kErrors;
}

int cmd_graph(const std::string& file, const std::string& stage, const std::string& format) {
  const ExportFormat fmt = format == "json" ? ExportFormat::json : ExportFormat::dot;
  std::string text = read_file(file);
  if (stage == "sytr") {
    std::cout << export_graph(parse_program(text).graph, fmt);
    return kOk;
  }
  CheckReport r = check_program(text);
  bool ready = stage == "linked" ? r.linked : r.flow_built;
  if (!ready) {
    for (const Diagnostic& d : r.diagnostics) std::cerr << to_text(r.program, d) << "\n";
    std::cerr << "cannot build the '" << stage << "' stage\n";
    return kErrors;
  }
  if (stage == "linked") {
    // Drop the control arrows again: rebuild from the tree and the links only.
    Program p = parse_program(text);
    link_is_declared_at(p);
    std::cout << export_graph(p.graph, fmt);
  } else {
    std::cout << export_graph(r.program.graph, fmt);
  }
  return kOk;
}

struct SchemaArgs {
  std::string action, file, root = "P";
  std::uint64_t seed = 1;
  std::size_t budget = 200;
};

int cmd_schema(const SchemaArgs& a) {
  const Schema schema = a.file.empty() ? turingol_schema() : schema_from_json(read_file(a.file));
  if (a.action == "json") {
    std::cout << schema_to_json(schema) << "\n";
    return kOk;
  }
  if (a.action == "grammar") {
    std::cout << export_grammar(schema);
    return kOk;
  }
  if (a.action == "gen") {
    std::mt19937_64 rng(a.seed);
    WordSource words = pool_words({Word("a"), Word("b"), Word("c")}, rng);
    Setr tree = generate_sytr(schema, a.root, rng, words, GenerationOptions{a.budget, 0.5});
    std::cout << linearize_text(schema, tree) << "\n";
    return kOk;
  }

  // check
  SchemaValidation v = validate(schema);
  for (const SchemaDiagnostic& d : v.errors) std::cout << "invalid: " << d.message << "\n";
  if (!v.ok()) return kErrors;
  bool uni = true;
  auto and_conflicts = check_and_condition(schema);
  std::cout << "AND condition: " << (and_conflicts.empty() ? "ok" : "violated") << "\n";
  for (const AndConflict& c : and_conflicts)
    std::cout << "  node " << c.node << ": arrows " << c.first_arrow << " and " << c.second_arrow
              << " overlap\n";
  uni = uni && and_conflicts.empty();

  std::cout << "OR cycles:";
  for (const SchemaCycle& c : or_cycles(schema)) std::cout << " " << c.to_string();
  std::cout << "\n";
  auto bad_cycles = check_and_cycle_condition(schema);
  std::cout << "AND-cycle condition: " << (bad_cycles.empty() ? "ok" : "violated") << "\n";
  for (const SchemaCycle& c : bad_cycles) std::cout << "  " << c.to_string() << "\n";
  uni = uni && bad_cycles.empty();

  if (bad_cycles.empty()) {
    PairPropagation pp = propagate_pairs(schema);
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> moved;
    for (const auto& [node, pairs] : pp.settled)
      for (const LabelPair& p : pairs)
        if (p.origin != node) moved[{p.origin, p.label.to_ebnf()}].push_back(node);
    for (const auto& [pair, nodes] : moved) {
      std::cout << "pair (" << pair.first << "," << pair.second << ") settles on";
      for (const std::string& n : nodes) std::cout << " " << n;
      std::cout << "\n";
    }
    std::cout << "sufficient condition: " << (pp.uni_labeled() ? "ok" : "violated") << "\n";
    for (const PairConflict& c : pp.conflicts)
      std::cout << "  node " << c.node << ": (" << c.first.origin << "," << c.first.label.to_ebnf()
                << ") overlaps (" << c.second.origin << "," << c.second.label.to_ebnf() << ")\n";
    uni = uni && pp.uni_labeled();
  }
  std::cout << "verdict: " << (uni ? "uni-labeled family" : "not proven uni-labeled") << "\n";
  return uni ? kOk : kErrors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check, run and inspect Turingol programs"};
  app.require_subcommand(1);

  std::string file, format = "text";
  auto* check = app.add_subcommand("check", "Report requirement violations");
  check->add_option("program", file, "Program file (.tgl)")->required();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Execute a program against a tape");
  run_cmd->add_option("program", run.file, "Program file (.tgl)")->required();
  auto* tape_opt = run_cmd->add_option("--tape", run.tape, "Tape cells, e.g. \"one one\"");
  run_cmd->add_option("--tape-file", run.tape_file, "Tape file (.tape)")->excludes(tape_opt);
  run_cmd->add_option("--start", run.start, "first, last or a cell index");
  run_cmd->add_option("--max-steps", run.max_steps, "Step budget")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--cautious", run.cautious, "Verify every condition before acting");
  run_cmd->add_option("--trace", run.trace, "off, text or json")
      ->check(CLI::IsMember({"off", "text", "json"}));
  run_cmd->add_flag("--optimize", run.optimize, "Copy compared and printed words into instructions");

  std::string stage = "sytr", graph_format = "dot";
  auto* graph = app.add_subcommand("graph", "Export the program graph");
  graph->add_option("program", file, "Program file (.tgl)")->required();
  graph->add_option("--stage", stage, "sytr, linked or flow")
      ->check(CLI::IsMember({"sytr", "linked", "flow"}));
  graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  SchemaArgs sa;
  auto* schema = app.add_subcommand("schema", "Analyse a syntactic schema");
  schema->add_option("action", sa.action, "check, grammar, gen or json")
      ->required()
      ->check(CLI::IsMember({"check", "grammar", "gen", "json"}));
  schema->add_option("--file", sa.file, "Schema JSON file (default: built-in Turingol schema)");
  schema->add_option("--root", sa.root, "Root node for gen");
  schema->add_option("--seed", sa.seed, "Random seed for gen");
  schema->add_option("--budget", sa.budget, "Node budget for gen")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(file, format);
    if (*run_cmd) {
      if (run.tape.empty() && run.tape_file.empty()) {
        std::cerr << "run: one of --tape or --tape-file is required\n";
        return kErrors;
      }
      return cmd_run(run);
    }
    if (*graph) return cmd_graph(file, stage, graph_format);
    if (*schema) return cmd_schema(sa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErrors;
  }
  return kErrors;
}
