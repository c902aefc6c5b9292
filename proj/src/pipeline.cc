#include "turingol/pipeline.h"

namespace turingol {

CheckReport check_program(std::string_view text) {
  CheckReport report{parse_program(text), {}, false, false};
  Program& p = report.program;
  auto take = [&](std::vector<Diagnostic> ds) {
    report.diagnostics.insert(report.diagnostics.end(), ds.begin(), ds.end());
  };

  auto alphabet = check_alphabet(p);
  bool aw2 = has_code(alphabet, Code::AW2);
  take(std::move(alphabet));
  auto labels = check_labels(p);
  bool label_errors = has_errors(labels);
  take(std::move(labels));

  if (!aw2) {
    link_is_declared_at(p);
    report.linked = true;
  }
  if (!label_errors) {
    build_flow(p);
    report.flow_built = true;
    take(check_reachability(p));
    take(check_next_acyclic(p));
  }
  sort_diagnostics(p, report.diagnostics);
  return report;
}

}  // namespace turingol
