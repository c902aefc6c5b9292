#include "turingol/executor.h"

#include <charconv>

#include "json.hpp"
#include "turingol/control_flow.h"

namespace turingol {

StartPosition StartPosition::parse(std::string_view text) {
  if (text == "first") return first();
  if (text == "last") return last();
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error("start position must be 'first', 'last' or a cell index, not '" +
                std::string(text) + "'");
  return at(k);
}

// ------------------------------------------------------------ instructions

namespace {

PathFormula current_tape() { return PathFormula::from(Word("tape-alphabet")).fwd("tape"); }

Instruction follow(const char* label) { return {{Direction::act(FollowArrow{Word(label)})}}; }

}  // namespace

std::map<NodeId, Instruction> install_instructions(const Program& program, bool optimize) {
  if (!program.stop) throw PipelineError("no stop node");
  const LabeledGraph& g = program.graph;
  const PathFormula tape = current_tape();
  std::map<NodeId, Instruction> out;

  auto require_control = [&](NodeId n, std::initializer_list<const char*> labels) {
    for (const char* l : labels)
      if (!g.successor(n, l, ArrowKind::control))
        throw PipelineError("node " + std::to_string(n.value) + " ('" + g.label(n).str() +
                            "') has no '" + l + "' control arrow");
  };

  require_control(program.root, {"next"});
  out[program.root] = follow("next");
  out[*program.stop] = {{Direction::act(Stop{})}};

  for (NodeId n : s_nodes(program)) {
    const Word& w = g.label(n);
    if (w == "if") {
      require_control(n, {"yes", "no"});
      const PathFormula word = PathFormula::current().fwd("").fwd("is");
      Proposition test = LabelsEqual{tape, word};
      if (optimize) test = LabelIsWord{tape, g.label(resolve(g, word, n, ArrowKind::syntactic))};
      out[n] = {{Direction::when(test, FollowArrow{Word("yes")}),
                 Direction::act(FollowArrow{Word("no")})}};
      continue;
    }
    require_control(n, {"next"});
    if (w == "print") {
      const PathFormula word = PathFormula::current().fwd("'");
      Action write = RelabelNode{tape, word};
      if (optimize) write = RelabelNodeWithWord{tape, g.label(resolve(g, word, n, ArrowKind::syntactic))};
      out[n] = {{Direction::act(write), Direction::act(FollowArrow{Word("next")})}};
    } else if (w == "move") {
      bool left = g.successor(n, "left", ArrowKind::syntactic).has_value();
      PathFormula neighbour = tape;
      if (left) {
        neighbour.back("");
        out[n] = {{Direction::when(NoArrowTo{Word{}, tape}, CreateNodeWithArrowToTarget{tape}),
                   Direction::act(ReassignArrow{Word("tape"), neighbour}),
                   Direction::act(FollowArrow{Word("next")})}};
      } else {
        neighbour.fwd("");
        out[n] = {{Direction::when(NoArrowFrom{Word{}, tape}, CreateNodeWithArrowFromSource{tape}),
                   Direction::act(ReassignArrow{Word("tape"), neighbour}),
                   Direction::act(FollowArrow{Word("next")})}};
      }
    } else {
      out[n] = follow("next");  // go, '{', empty statement
    }
  }
  return out;
}

// ----------------------------------------------------------------- executor

std::string_view to_string(Situation s) {
  switch (s) {
    case Situation::no_instruction: return "no-instruction";
    case Situation::directions_exhausted: return "directions-exhausted";
    case Situation::normal_condition_violated: return "normal-condition-violated";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::stopped: return "stopped";
    case Outcome::crashed: return "crashed";
    case Outcome::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

Executor::Executor(Program program, ExecOptions options)
    : program_(std::move(program)), options_(options) {
  instructions_ = install_instructions(program_, options_.optimize);
  state_.current = program_.root;
}

void Executor::initialize(const Tape& tape, StartPosition start, bool verify) {
  LabeledGraph& g = program_.graph;
  if (!g.arrows_labeled("tape").empty()) throw PipelineError("a tape is already attached");
  if (verify) {
    std::vector<Diagnostic> ds = check_alphabet(program_);
    for (auto more : {check_labels(program_), check_reachability(program_),
                      check_next_acyclic(program_)})
      ds.insert(ds.end(), more.begin(), more.end());
    if (has_errors(ds) || has_code(ds, Code::AW2)) {
      std::string first;
      for (const Diagnostic& d : ds)
        if (d.severity == Severity::error || d.code == Code::AW2) {
          first = to_text(program_, d);
          break;
        }
      throw PipelineError("program does not meet the requirements: " + first);
    }
  }
  auto cells = tape_cells(tape.graph, tape.root);
  std::size_t k = 0;
  switch (start.kind) {
    case StartPosition::Kind::first: k = 0; break;
    case StartPosition::Kind::last: k = cells.size() - 1; break;
    case StartPosition::Kind::index:
      if (start.index >= cells.size())
        throw Error("start index " + std::to_string(start.index) + " is outside a tape of " +
                    std::to_string(cells.size()) + " cells");
      k = start.index;
  }
  std::uint32_t offset = g.absorb(tape.graph);
  g.add_arrow(program_.root, Word("tape"), NodeId{cells[k].value + offset}, ArrowKind::tape);
  state_ = ExecState{program_.root, 0, Status::running, std::nullopt};
  initialized_ = true;
}

NodeId Executor::tape_cell() const {
  auto ids = program_.graph.outgoing(program_.root, "tape");
  if (ids.size() != 1) throw PipelineError("no tape attached");
  return program_.graph.arrow(ids.front()).to;
}

std::string Executor::tape_text(std::size_t limit) const {
  const LabeledGraph& g = program_.graph;
  return render_cells(g, tape_root(g, tape_cell()), limit);
}

void Executor::crash(Situation s, std::string detail) {
  state_.status = Status::crashed;
  state_.crash = CrashReport{s, state_.current, std::move(detail)};
}

const ExecState& Executor::step() {
  if (!initialized_) throw PipelineError("executor is not initialized");
  if (state_.status != Status::running) return state_;
  last_directions_.clear();
  LabeledGraph& g = program_.graph;
  const NodeId here = state_.current;
  auto it = instructions_.find(here);
  if (it == instructions_.end()) {
    crash(Situation::no_instruction, "node '" + g.label(here).str() + "' holds no instruction");
    return state_;
  }
  try {
    for (const Direction& d : it->second.directions) {
      if (d.condition) {
        if (options_.cautious)
          if (auto f = check_condition(g, *d.condition, here)) throw NormalConditionViolated(*f);
        if (!eval(g, *d.condition, here)) continue;
      }
      if (options_.cautious)
        if (auto f = check_condition(g, d.action, here)) throw NormalConditionViolated(*f);
      ApplyOutcome outcome = apply(g, d.action, here);
      last_directions_.push_back(phrase(d));
      if (!is_transfer(d.action)) continue;
      ++state_.steps;
      if (std::holds_alternative<Stopped>(outcome)) {
        state_.status = Status::stopped;
      } else {
        state_.current = std::get<NodeId>(outcome);
      }
      return state_;
    }
  } catch (const NormalConditionViolated& e) {
    const ConditionFailure& f = e.failure();
    crash(Situation::normal_condition_violated, f.condition + ": " + f.detail);
    return state_;
  }
  crash(Situation::directions_exhausted,
        "instruction of node '" + g.label(here).str() + "' ended without a transfer");
  return state_;
}

RunResult Executor::run(std::size_t max_steps, bool record_trace) {
  RunResult result{Outcome::budget_exhausted, 0, {}, std::nullopt};
  std::string tape_before = record_trace ? tape_text(options_.snapshot_cells) : std::string();
  while (state_.status == Status::running && state_.steps < max_steps) {
    NodeId here = state_.current;
    Word label = program_.graph.label(here);
    step();
    if (!record_trace) continue;
    TraceEntry entry{state_.steps, here, label, last_directions_, std::nullopt};
    if (state_.status != Status::crashed) {
      std::string tape_now = tape_text(options_.snapshot_cells);
      if (tape_now != tape_before) entry.tape = tape_before = tape_now;
    }
    result.trace.push_back(std::move(entry));
  }
  result.steps = state_.steps;
  if (state_.status == Status::stopped) result.outcome = Outcome::stopped;
  if (state_.status == Status::crashed) {
    result.outcome = Outcome::crashed;
    result.crash = state_.crash;
  }
  return result;
}

std::string trace_to_text(const std::vector<TraceEntry>& trace) {
  std::string out;
  for (const TraceEntry& e : trace) {
    std::string phrases;
    for (const std::string& p : e.directions) phrases += (phrases.empty() ? "" : " ") + p;
    out += std::to_string(e.step) + " " + (e.label.empty() ? "\"\"" : e.label.str()) + " " +
           phrases + "\n";
    if (e.tape) out += "  tape: " + *e.tape + "\n";
  }
  return out;
}

std::string trace_to_json(const std::vector<TraceEntry>& trace) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const TraceEntry& e : trace) {
    nlohmann::ordered_json entry{{"step", e.step},
                                 {"node", e.node.value},
                                 {"label", e.label.str()},
                                 {"directions", e.directions}};
    if (e.tape) entry["tape"] = *e.tape;
    doc.push_back(entry);
  }
  return doc.dump();
}

}  // namespace turingol
