#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "trda/solver.hpp"

namespace trda {

// Result of replaying recorded traces against the run-level guarantees the
// algorithm is supposed to keep. Monotonicity, the iteration partition and
// the radius growth chain are mechanical and must hold exactly; the radius
// floor and the iteration budgets depend on measured curvature constants and
// are reported without failing the audit.
struct AuditReport {
  int runs = 0;

  std::uint64_t mono_checks = 0;
  std::uint64_t mono_violations = 0;
  std::uint64_t partition_checks = 0;
  std::uint64_t partition_violations = 0;
  std::uint64_t chain_checks = 0;  // radius bounded by the success/failure split
  std::uint64_t chain_violations = 0;

  int floor_runs = 0;  // runs with iterates embedded, where constants are measurable
  int floor_held = 0;
  int budget_runs = 0;
  int budget_succ_held = 0;   // successful iterations within the predicted budget
  int budget_total_held = 0;  // all iterations within the predicted budget
  double max_kappa_h = 0.0;
  double max_kappa_grad = 0.0;

  bool failed() const {
    return mono_violations > 0 || partition_violations > 0 || chain_violations > 0;
  }
  std::string to_text() const;
};

// Reads JSON-lines traces (one iteration object per line, as written by
// TraceWriter) and checks them. The constants in cfg must match the ones the
// traces were produced with. Throws std::invalid_argument on unreadable or
// empty input.
AuditReport audit_theory(std::istream& in, const SolverConfig& cfg = {});

}  // namespace trda
