#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trda/audit.hpp"
#include "trda/bench.hpp"

namespace {

int cmd_run(const std::vector<std::string>& variant_names,
            const std::vector<double>& eps, int replicates,
            const std::vector<std::string>& problems, unsigned long long seed_base,
            const std::string& format_name, const std::string& out_path,
            bool trace, const std::string& trace_path, int workers) {
  trda::CampaignSpec spec;
  spec.variants.clear();
  for (const std::string& n : variant_names) {
    auto v = trda::parse_variant(n);
    if (!v) {
      std::cerr << "unknown variant: " << n << "\n";
      return 1;
    }
    spec.variants.push_back(*v);
  }
  spec.epsilons = eps;
  spec.replicates = replicates;
  spec.problems = problems;
  spec.seed_base = seed_base;
  spec.workers = workers;

  auto format = trda::parse_format(format_name);
  if (!format) {
    std::cerr << "unknown format: " << format_name << " (use md, csv or json)\n";
    return 1;
  }

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  std::ofstream trace_file;
  std::optional<trda::TraceWriter> writer;
  if (trace) {
    trace_file.open(trace_path, std::ios::binary);
    if (!trace_file) {
      std::cerr << "cannot open " << trace_path << " for writing\n";
      return 1;
    }
    writer.emplace(trace_file);
  }

  std::vector<trda::RunRecord> records =
      trda::run_campaign(spec, writer ? &*writer : nullptr);
  std::string text = trda::emit(trda::aggregate(records), *format);

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

int cmd_audit(const std::string& in_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << in_path << "\n";
    return 1;
  }
  trda::AuditReport rep;
  try {
    rep = trda::audit_theory(in);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cout << rep.to_text();
  return rep.failed() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trust-region benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a solve campaign and emit the results table");
  std::vector<std::string> variants{"lmqn", "lmqn-s", "lmqn-h", "ilmqn-a", "ilmqn-b"};
  std::vector<double> eps{1e-3, 1e-5, 1e-7};
  int replicates = 20;
  std::vector<std::string> problems{"all"};
  unsigned long long seed_base = 42;
  std::string format = "md";
  std::string out_path;
  bool trace = false;
  std::string trace_path = "traces.jsonl";
  int workers = 0;
  run->add_option("--variants", variants, "comma separated variant names")->delimiter(',');
  run->add_option("--eps", eps, "gradient accuracy targets")->delimiter(',');
  run->add_option("--replicates", replicates, "independent runs per problem");
  run->add_option("--problems", problems, "problem names, or 'all'")->delimiter(',');
  run->add_option("--seed-base", seed_base, "base seed for the noise streams");
  run->add_option("--format", format, "output format: md, csv or json");
  run->add_option("--out", out_path, "output file (stdout when omitted)");
  run->add_flag("--trace", trace, "write per-iteration JSON lines");
  run->add_option("--trace-out", trace_path, "trace output file");
  run->add_option("--workers", workers, "worker threads (0 = hardware)");

  auto* problems_cmd = app.add_subcommand("problems", "inspect the problem catalog");
  problems_cmd->require_subcommand(1);
  auto* list_cmd = problems_cmd->add_subcommand("list", "list problem names and sizes");

  auto* audit = app.add_subcommand("audit", "check recorded traces against the run guarantees");
  std::string audit_in;
  audit->add_option("--in", audit_in, "JSON-lines trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (run->parsed())
    return cmd_run(variants, eps, replicates, problems, seed_base, format,
                   out_path, trace, trace_path, workers);
  if (list_cmd->parsed()) {
    for (const trda::Problem& p : trda::catalog())
      std::printf("%-12s %4d\n", p.name.c_str(), p.dim);
    return 0;
  }
  if (audit->parsed()) return cmd_audit(audit_in);
  return 1;
}
