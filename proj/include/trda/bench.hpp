#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trda/solver.hpp"

namespace trda {

enum class OutFormat { Markdown, Csv, Json };

std::optional<OutFormat> parse_format(const std::string& s);

struct CampaignSpec {
  std::vector<Variant> variants{Variant::LMQN, Variant::LMQN_S, Variant::LMQN_H,
                                Variant::ILMQN_A, Variant::ILMQN_B};
  std::vector<double> epsilons{1e-3, 1e-5, 1e-7};
  int replicates = 20;
  std::vector<std::string> problems;  // empty means the whole catalog
  std::uint64_t seed_base = 42;
  int workers = 0;  // 0 picks the hardware concurrency
  bool with_trace = false;
  SolverConfig base;  // epsilon is overwritten per run

  void validate() const;  // throws std::invalid_argument
  std::vector<std::string> resolved_problems() const;
};

struct RunRecord {
  std::string problem;
  Variant variant = Variant::LMQN;
  double epsilon = 0.0;
  int replicate = 0;
  std::uint64_t seed = 0;

  Status status = Status::IterLimit;
  int iterations = 0;
  int n_successful = 0;
  double costf = 0.0;  // equivalent double-precision evaluation counts
  double costg = 0.0;
  std::array<std::uint64_t, 3> f_tier_counts{};  // indexed by Tier
  std::array<std::uint64_t, 3> g_tier_counts{};
  double exact_grad_norm_final = 0.0;
  double exact_f_final = 0.0;
  double kappa_h_observed = 0.0;
  bool success = false;  // Converged and the exact gradient met the target
  AuditCounters audit;
  std::uint64_t contract_checks = 0;
  std::uint64_t contract_violations = 0;
};

// Stable per-run seed so adding problems or variants never shifts the noise
// stream of an existing run.
std::uint64_t derive_seed(std::uint64_t seed_base, const std::string& problem,
                          Variant v, double epsilon, int replicate);

// Streams one JSON object per iteration to a sink. Lines carry the run key so
// the audit reader can regroup them; iterates are embedded only for small
// problems, where the audit estimates curvature by finite differences.
class TraceWriter {
 public:
  explicit TraceWriter(std::ostream& os) : os_(os) {}
  void write_run(const RunRecord& run, const std::vector<IterationRecord>& trace);
  void write_text(const std::string& lines);

  static std::string serialize(const RunRecord& run,
                               const std::vector<IterationRecord>& trace);

 private:
  std::ostream& os_;
};

std::vector<RunRecord> run_campaign(const CampaignSpec& spec,
                                    TraceWriter* traces = nullptr);

struct AggregateRow {
  double epsilon = 0.0;
  Variant variant = Variant::LMQN;
  int nsucc = 0;          // problems where at least half the replicates succeed
  double mean_its = 0.0;  // means over successful runs, problems weighted equally
  double mean_costf = 0.0;
  double mean_costg = 0.0;
  std::optional<double> rel_its;  // vs. LMQN on jointly solved problems
  std::optional<double> rel_costf;
  std::optional<double> rel_costg;

  bool operator==(const AggregateRow&) const = default;
};

// Rows come out ordered by epsilon descending, then by variant enum order,
// so the same record multiset always aggregates to the same table.
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records);

std::string emit(const std::vector<AggregateRow>& rows, OutFormat format);
std::vector<AggregateRow> parse_csv(const std::string& text);

}  // namespace trda
