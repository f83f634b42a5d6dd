#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trda/oracle.hpp"
#include "trda/problems.hpp"
#include "trda/vec.hpp"

namespace trda {

// Benchmark variants. LMQN runs with exact evaluations; LMQN_S and LMQN_H
// force every oracle call to a fixed reduced tier; ILMQN_A and ILMQN_B adapt
// the requested accuracies per iteration.
enum class Variant { LMQN, LMQN_S, LMQN_H, ILMQN_A, ILMQN_B };

const char* variant_name(Variant v);                    // table labels
std::optional<Variant> parse_variant(const std::string& s);  // cli spellings
bool variant_is_forced(Variant v);
Tier variant_forced_tier(Variant v);  // only meaningful for forced variants

struct SolverConfig {
  double eta0 = 0.01;    // accuracy fraction of predicted decrease
  double eta1 = 0.05;    // acceptance threshold
  double eta2 = 0.75;    // very-successful threshold
  double gamma1 = 0.25;  // radius interval bounds
  double gamma2 = 0.5;
  double gamma3 = 2.5;
  double kappa_g = 0.1;  // cap on the relative gradient accuracy
  double delta0 = 1.0;
  double omega_f0 = 0.01;  // initial objective accuracy for adaptive variants
  double grow = 2.0;       // concrete radius factors, one per outcome band
  double midrange = 0.75;
  double shrink = 0.5;
  int max_iters = 1000;
  double epsilon = 1e-5;  // target bound on the exact gradient norm

  // Throws std::invalid_argument when the constants violate the conditions
  // the convergence theory needs (or a radius factor leaves its band).
  void validate() const;
};

// Accuracy schedules. pred is the model decrease of the current step; the
// objective accuracy is capped at 1e-1 and scales with pred, which keeps it
// within eta0 * pred under the default constants.
double policy_omega_f(Variant v, const SolverConfig& cfg, double pred);
double policy_omega_g(Variant v, const SolverConfig& cfg, double omega_f_current);

double update_radius(const SolverConfig& cfg, double rho, double delta);

// True when the measured gradient norm certifies that the exact gradient norm
// is at most epsilon.
bool check_termination(const SolverConfig& cfg, double gbar_norm);

enum class Status { Converged, IterLimit, EvalError };

const char* status_name(Status s);

struct IterationRecord {
  int k = 0;
  Vec x;               // iterate at the start of the iteration
  double delta = 0.0;  // radius used by this iteration
  double omega_f = 0.0;
  double omega_g = 0.0;
  double gbar_norm = 0.0;
  double pred = 0.0;
  double rho = 0.0;
  bool accepted = false;
  double exact_f = 0.0;   // verification channel, not charged
  double hnorm_lb = 0.0;  // power-iteration lower bound on |H|
  std::vector<Tier> f_tiers;  // trial evaluation, then recompute if one happened
  std::vector<Tier> g_tiers;  // attempted tiers when the gradient was evaluated
};

// Rolled-up per-run invariant checks. Checks are exact counts of how often an
// inequality was tested; violations should stay zero.
struct AuditCounters {
  std::uint64_t cauchy_checks = 0;
  std::uint64_t cauchy_violations = 0;
  std::uint64_t mono_checks = 0;
  std::uint64_t mono_violations = 0;
  std::uint64_t omega_checks = 0;
  std::uint64_t omega_violations = 0;
  std::uint64_t radius_chain_checks = 0;
  std::uint64_t radius_chain_violations = 0;
  std::uint64_t partition_checks = 0;
  std::uint64_t partition_violations = 0;

  void merge(const AuditCounters& o);
};

struct SolveResult {
  Status status = Status::IterLimit;
  int iterations = 0;
  int n_successful = 0;
  EnergyLedger ledger;
  Vec x_final;
  double exact_grad_norm_final = 0.0;
  double exact_f_final = 0.0;
  double kappa_h_observed = 0.0;  // max norm lower bound seen over the run
  AuditCounters audit;
  std::vector<IterationRecord> trace;  // filled only when requested
};

SolveResult solve(const Problem& p, Variant v, const SolverConfig& cfg,
                  std::uint64_t seed, bool with_trace = false);

}  // namespace trda
