#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turingol/directions.h"
#include "turingol/semantics.h"
#include "turingol/tape.h"

namespace turingol {

struct StartPosition {
  enum class Kind { first, last, index };
  Kind kind = Kind::last;
  std::size_t index = 0;

  static StartPosition first() { return {Kind::first, 0}; }
  static StartPosition last() { return {Kind::last, 0}; }
  static StartPosition at(std::size_t k) { return {Kind::index, k}; }
  /// "first", "last" or a zero-based cell index.
  static StartPosition parse(std::string_view text);
};

/// The standard instruction set: root, stop and every S node get an
/// instruction, nothing else does. With `optimize` the tape word compared
/// by 'if' and written by 'print' is copied into the instruction.
std::map<NodeId, Instruction> install_instructions(const Program& program, bool optimize = false);

enum class Situation { no_instruction, directions_exhausted, normal_condition_violated };
std::string_view to_string(Situation s);

struct CrashReport {
  Situation situation;
  NodeId node;
  std::string detail;
};

enum class Status { running, stopped, crashed };

struct ExecState {
  NodeId current;
  std::size_t steps = 0;
  Status status = Status::running;
  std::optional<CrashReport> crash;
};

struct TraceEntry {
  std::size_t step;
  NodeId node;
  Word label;
  std::vector<std::string> directions;  // phrases of the performed directions
  std::optional<std::string> tape;      // set when the step changed the tape
};

enum class Outcome { stopped, crashed, budget_exhausted };
std::string_view to_string(Outcome o);

struct RunResult {
  Outcome outcome;
  std::size_t steps = 0;
  std::vector<TraceEntry> trace;
  std::optional<CrashReport> crash;
};

std::string trace_to_text(const std::vector<TraceEntry>& trace);
std::string trace_to_json(const std::vector<TraceEntry>& trace);

struct ExecOptions {
  bool cautious = false;   // check every normal-execution condition first
  bool optimize = false;   // specialized instructions
  std::size_t snapshot_cells = 1000;
};

/// Walks the control graph of a program executing node instructions
/// against an attached tape. Crashes are states, not exceptions.
class Executor {
 public:
  /// `program` must have its control flow built.
  explicit Executor(Program program, ExecOptions options = {});

  /// Attaches the tape by a 'tape' arrow from the root. With `verify` the
  /// program must be free of errors and of AW2 findings.
  void initialize(const Tape& tape, StartPosition start, bool verify = true);

  const ExecState& step();
  RunResult run(std::size_t max_steps = 10000, bool record_trace = true);

  const ExecState& state() const { return state_; }
  const Program& program() const { return program_; }
  const LabeledGraph& graph() const { return program_.graph; }
  std::map<NodeId, Instruction>& instructions() { return instructions_; }

  /// Cell the 'tape' arrow points at.
  NodeId tape_cell() const;
  std::string tape_text(std::size_t limit = 0) const;

 private:
  void crash(Situation s, std::string detail);

  Program program_;
  ExecOptions options_;
  std::map<NodeId, Instruction> instructions_;
  ExecState state_;
  bool initialized_ = false;
  std::vector<std::string> last_directions_;
};

}  // namespace turingol
