#include "trda/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>

#include <json.hpp>

namespace trda {

using ojson = nlohmann::ordered_json;

std::optional<OutFormat> parse_format(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "md" || t == "markdown") return OutFormat::Markdown;
  if (t == "csv") return OutFormat::Csv;
  if (t == "json") return OutFormat::Json;
  return std::nullopt;
}

void CampaignSpec::validate() const {
  if (variants.empty()) throw std::invalid_argument("no variants selected");
  if (epsilons.empty()) throw std::invalid_argument("no epsilon targets given");
  for (double e : epsilons)
    if (!(e > 0.0 && e <= 1.0)) throw std::invalid_argument("epsilon outside (0, 1]");
  if (replicates < 1) throw std::invalid_argument("need at least one replicate");
  base.validate();
  resolved_problems();
}

std::vector<std::string> CampaignSpec::resolved_problems() const {
  std::vector<std::string> names;
  if (problems.empty() || (problems.size() == 1 && problems[0] == "all")) {
    for (const Problem& p : catalog()) names.push_back(p.name);
    return names;
  }
  for (const std::string& n : problems) {
    if (!find_problem(n)) throw std::invalid_argument("unknown problem: " + n);
    names.push_back(n);
  }
  return names;
}

static std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed_base, const std::string& problem,
                          Variant v, double epsilon, int replicate) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu|%s|%s|%.17g|%d",
                static_cast<unsigned long long>(seed_base), problem.c_str(),
                variant_name(v), epsilon, replicate);
  return fnv1a(buf);
}

std::string TraceWriter::serialize(const RunRecord& run,
                                   const std::vector<IterationRecord>& trace) {
  std::string out;
  // Curvature estimation by finite differences is only affordable, and only
  // attempted, on small problems; larger traces omit the iterate.
  const bool embed_x = !trace.empty() && trace.front().x.size() <= 12;
  for (const IterationRecord& r : trace) {
    ojson j;
    j["problem"] = run.problem;
    j["variant"] = variant_name(run.variant);
    j["eps"] = run.epsilon;
    j["replicate"] = run.replicate;
    j["seed"] = run.seed;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["omega_f"] = r.omega_f;
    j["omega_g"] = r.omega_g;
    j["gbar_norm"] = r.gbar_norm;
    j["pred"] = r.pred;
    j["rho"] = std::isfinite(r.rho) ? r.rho : -1e308;
    j["accepted"] = r.accepted;
    j["exact_f"] = r.exact_f;
    j["hnorm_lb"] = r.hnorm_lb;
    ojson ft = ojson::array();
    for (Tier t : r.f_tiers) ft.push_back(tier_name(t));
    j["f_tiers"] = std::move(ft);
    ojson gt = ojson::array();
    for (Tier t : r.g_tiers) gt.push_back(tier_name(t));
    j["g_tiers"] = std::move(gt);
    if (embed_x) j["x"] = r.x;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void TraceWriter::write_run(const RunRecord& run,
                            const std::vector<IterationRecord>& trace) {
  os_ << serialize(run, trace);
}

void TraceWriter::write_text(const std::string& lines) { os_ << lines; }

namespace {

struct Task {
  const Problem* problem;
  Variant variant;
  double epsilon;
  int replicate;
  std::uint64_t seed;
};

}  // namespace

std::vector<RunRecord> run_campaign(const CampaignSpec& spec, TraceWriter* traces) {
  spec.validate();
  const std::vector<std::string> names = spec.resolved_problems();

  std::vector<Task> tasks;
  tasks.reserve(spec.epsilons.size() * spec.variants.size() * names.size() *
                static_cast<std::size_t>(spec.replicates));
  for (double eps : spec.epsilons)
    for (Variant v : spec.variants)
      for (const std::string& n : names) {
        const Problem* p = find_problem(n);
        for (int r = 0; r < spec.replicates; ++r)
          tasks.push_back({p, v, eps, r, derive_seed(spec.seed_base, n, v, eps, r)});
      }

  std::vector<RunRecord> records(tasks.size());
  std::vector<std::string> trace_texts(traces ? tasks.size() : 0);

  auto work = [&](std::size_t i) {
    const Task& t = tasks[i];
    SolverConfig cfg = spec.base;
    cfg.epsilon = t.epsilon;
    const bool want_trace = traces != nullptr || spec.with_trace;
    SolveResult res = solve(*t.problem, t.variant, cfg, t.seed, want_trace);

    RunRecord& rec = records[i];
    rec.problem = t.problem->name;
    rec.variant = t.variant;
    rec.epsilon = t.epsilon;
    rec.replicate = t.replicate;
    rec.seed = t.seed;
    rec.status = res.status;
    rec.iterations = res.iterations;
    rec.n_successful = res.n_successful;
    rec.costf = res.ledger.cost_f();
    rec.costg = res.ledger.cost_g();
    rec.f_tier_counts = res.ledger.f_count;
    rec.g_tier_counts = res.ledger.g_count;
    rec.exact_grad_norm_final = res.exact_grad_norm_final;
    rec.exact_f_final = res.exact_f_final;
    rec.kappa_h_observed = res.kappa_h_observed;
    rec.success = res.status == Status::Converged &&
                  res.exact_grad_norm_final <= t.epsilon;
    rec.audit = res.audit;
    rec.contract_checks = res.ledger.contract_checks;
    rec.contract_violations = res.ledger.contract_violations;
    if (traces) trace_texts[i] = TraceWriter::serialize(rec, res.trace);
  };

  int workers = spec.workers > 0
                    ? spec.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<std::size_t>(workers, tasks.size());

  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          work(i);
        }
      });
    for (std::thread& th : pool) th.join();
  }

  if (traces)
    for (const std::string& s : trace_texts) traces->write_text(s);
  return records;
}

namespace {

struct GroupKey {
  double epsilon;
  int variant;
  bool operator<(const GroupKey& o) const {
    if (epsilon != o.epsilon) return epsilon > o.epsilon;  // loose targets first
    return variant < o.variant;
  }
};

struct ProblemStats {
  int runs = 0;
  int successes = 0;
  double sum_its = 0.0;
  double sum_costf = 0.0;
  double sum_costg = 0.0;

  bool solved() const { return 2 * successes >= runs && successes > 0; }
  double mean_its() const { return sum_its / successes; }
  double mean_costf() const { return sum_costf / successes; }
  double mean_costg() const { return sum_costg / successes; }
};

using GroupStats = std::map<std::string, ProblemStats>;

struct Means {
  double its = 0.0, costf = 0.0, costg = 0.0;
};

// Per-problem means first, then an unweighted average across problems, so
// every problem counts once regardless of replicate count.
template <class Pred>
static std::optional<Means> mean_over(const GroupStats& g, Pred include) {
  Means m;
  int n = 0;
  for (const auto& [name, st] : g) {
    if (!st.solved() || !include(name)) continue;
    m.its += st.mean_its();
    m.costf += st.mean_costf();
    m.costg += st.mean_costg();
    n += 1;
  }
  if (n == 0) return std::nullopt;
  m.its /= n;
  m.costf /= n;
  m.costg /= n;
  return m;
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no records to aggregate");

  std::map<GroupKey, GroupStats> groups;
  for (const RunRecord& r : records) {
    ProblemStats& st = groups[{r.epsilon, static_cast<int>(r.variant)}][r.problem];
    st.runs += 1;
    if (r.success) {
      st.successes += 1;
      st.sum_its += r.iterations;
      st.sum_costf += r.costf;
      st.sum_costg += r.costg;
    }
  }

  std::vector<AggregateRow> rows;
  for (const auto& [key, stats] : groups) {
    AggregateRow row;
    row.epsilon = key.epsilon;
    row.variant = static_cast<Variant>(key.variant);
    for (const auto& [name, st] : stats)
      if (st.solved()) row.nsucc += 1;
    if (auto m = mean_over(stats, [](const std::string&) { return true; })) {
      row.mean_its = m->its;
      row.mean_costf = m->costf;
      row.mean_costg = m->costg;
    }

    if (row.variant != Variant::LMQN) {
      auto base_it = groups.find({key.epsilon, static_cast<int>(Variant::LMQN)});
      if (base_it != groups.end()) {
        const GroupStats& base = base_it->second;
        auto in_both = [&](const std::string& name) {
          auto it = base.find(name);
          return it != base.end() && it->second.solved();
        };
        auto mv = mean_over(stats, in_both);
        auto mb = mean_over(base, [&](const std::string& name) {
          auto it = stats.find(name);
          return it != stats.end() && it->second.solved();
        });
        if (mv && mb) {
          if (mb->its > 0.0) row.rel_its = mv->its / mb->its;
          if (mb->costf > 0.0) row.rel_costf = mv->costf / mb->costf;
          if (mb->costg > 0.0) row.rel_costg = mv->costg / mb->costg;
        }
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

const char* kHeaders[] = {"eps",   "variant",   "nsucc",      "its.",
                          "costf", "costg",     "rel. its.",  "rel. costf",
                          "rel. costg"};

std::string emit_markdown(const std::vector<AggregateRow>& rows) {
  std::string out = "|";
  for (const char* h : kHeaders) out += std::string(" ") + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < std::size(kHeaders); ++i) out += "---|";
  out += "\n";
  for (const AggregateRow& r : rows) {
    out += "| " + fmt("%.0e", r.epsilon) + " | " + variant_name(r.variant) +
           " | " + std::to_string(r.nsucc) + " | " + fmt("%.2f", r.mean_its) +
           " | " + fmt("%.2f", r.mean_costf) + " | " + fmt("%.2f", r.mean_costg);
    for (const auto& rel : {r.rel_its, r.rel_costf, r.rel_costg})
      out += rel ? " | " + fmt("%.2f", *rel) : " | ";
    out += " |\n";
  }
  return out;
}

std::string emit_csv(const std::vector<AggregateRow>& rows) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kHeaders); ++i) {
    if (i) out += ',';
    out += kHeaders[i];
  }
  out += '\n';
  for (const AggregateRow& r : rows) {
    out += fmt("%.17g", r.epsilon) + "," + variant_name(r.variant) + "," +
           std::to_string(r.nsucc) + "," + fmt("%.17g", r.mean_its) + "," +
           fmt("%.17g", r.mean_costf) + "," + fmt("%.17g", r.mean_costg);
    for (const auto& rel : {r.rel_its, r.rel_costf, r.rel_costg})
      out += rel ? "," + fmt("%.17g", *rel) : ",";
    out += '\n';
  }
  return out;
}

std::string emit_json(const std::vector<AggregateRow>& rows) {
  ojson root;
  ojson jrows = ojson::array();
  for (const AggregateRow& r : rows) {
    ojson j;
    j["eps"] = r.epsilon;
    j["variant"] = variant_name(r.variant);
    j["nsucc"] = r.nsucc;
    j["its"] = r.mean_its;
    j["costf"] = r.mean_costf;
    j["costg"] = r.mean_costg;
    j["rel_its"] = r.rel_its ? ojson(*r.rel_its) : ojson(nullptr);
    j["rel_costf"] = r.rel_costf ? ojson(*r.rel_costf) : ojson(nullptr);
    j["rel_costg"] = r.rel_costg ? ojson(*r.rel_costg) : ojson(nullptr);
    jrows.push_back(std::move(j));
  }
  root["rows"] = std::move(jrows);

  // Grouped-bar data, one panel per metric, one bar group per variant, one
  // bar per gradient target.
  ojson panels;
  const char* panel_names[] = {"success_ratio", "rel_its", "rel_costf", "rel_costg"};
  for (const char* pn : panel_names) panels[pn] = ojson::object();
  auto baseline = [&](double eps) -> const AggregateRow* {
    for (const AggregateRow& r : rows)
      if (r.variant == Variant::LMQN && r.epsilon == eps) return &r;
    return nullptr;
  };
  for (const AggregateRow& r : rows) {
    if (r.variant == Variant::LMQN) continue;
    const AggregateRow* b = baseline(r.epsilon);
    auto add = [&](const char* panel, std::optional<double> v) {
      if (!v) return;
      ojson bar;
      bar["eps"] = r.epsilon;
      bar["value"] = *v;
      panels[panel][variant_name(r.variant)].push_back(std::move(bar));
    };
    std::optional<double> succ;
    if (b && b->nsucc > 0) succ = static_cast<double>(r.nsucc) / b->nsucc;
    add("success_ratio", succ);
    add("rel_its", r.rel_its);
    add("rel_costf", r.rel_costf);
    add("rel_costg", r.rel_costg);
  }
  root["figures"] = std::move(panels);
  return root.dump(2) + "\n";
}

}  // namespace

std::string emit(const std::vector<AggregateRow>& rows, OutFormat format) {
  if (rows.empty()) throw std::invalid_argument("no rows to emit");
  switch (format) {
    case OutFormat::Markdown: return emit_markdown(rows);
    case OutFormat::Csv: return emit_csv(rows);
    case OutFormat::Json: return emit_json(rows);
  }
  throw std::invalid_argument("bad format");
}

std::vector<AggregateRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty csv");

  std::vector<AggregateRow> rows;
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    return parts;
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f = split(line);
    if (f.size() != std::size(kHeaders))
      throw std::invalid_argument("malformed csv row: " + line);
    AggregateRow r;
    r.epsilon = std::stod(f[0]);
    auto v = parse_variant(f[1]);
    if (!v) throw std::invalid_argument("unknown variant in csv: " + f[1]);
    r.variant = *v;
    r.nsucc = std::stoi(f[2]);
    r.mean_its = std::stod(f[3]);
    r.mean_costf = std::stod(f[4]);
    r.mean_costg = std::stod(f[5]);
    auto opt = [](const std::string& s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      return std::stod(s);
    };
    r.rel_its = opt(f[6]);
    r.rel_costf = opt(f[7]);
    r.rel_costg = opt(f[8]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace trda
