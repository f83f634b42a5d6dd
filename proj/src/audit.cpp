#include "trda/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace trda {

namespace {

struct TracePoint {
  int k = 0;
  double delta = 0.0;
  bool accepted = false;
  double exact_f = 0.0;
  double hnorm_lb = 0.0;
  Vec x;  // empty unless the writer embedded it
};

struct RunTrace {
  std::string problem;
  Variant variant = Variant::LMQN;
  double epsilon = 0.0;
  std::vector<TracePoint> points;
};

using RunKey = std::tuple<std::string, std::string, double, int, std::uint64_t>;

// Frobenius norm of a centered finite-difference Hessian; it upper-bounds the
// spectral norm, which is the safe direction for a curvature constant.
double fd_hessian_norm(const Problem& p, const Vec& x) {
  const int n = p.dim;
  std::vector<Vec> cols(n);
  Vec xp = x, xm = x;
  for (int i = 0; i < n; ++i) {
    double h = 1e-5 * (1.0 + std::fabs(x[i]));
    xp[i] = x[i] + h;
    xm[i] = x[i] - h;
    Vec gp = exact_g(p, xp);
    Vec gm = exact_g(p, xm);
    xp[i] = x[i];
    xm[i] = x[i];
    cols[i].resize(n);
    for (int j = 0; j < n; ++j) cols[i][j] = (gp[j] - gm[j]) / (2.0 * h);
  }
  double fro2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double hij = 0.5 * (cols[i][j] + cols[j][i]);
      fro2 += hij * hij;
    }
  return std::sqrt(fro2);
}

}  // namespace

AuditReport audit_theory(std::istream& in, const SolverConfig& cfg) {
  std::map<RunKey, RunTrace> runs;
  std::string line;
  std::size_t lines_read = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad trace line: ") + e.what());
    }
    lines_read += 1;
    RunKey key{j.at("problem").get<std::string>(), j.at("variant").get<std::string>(),
               j.at("eps").get<double>(), j.at("replicate").get<int>(),
               j.at("seed").get<std::uint64_t>()};
    RunTrace& rt = runs[key];
    if (rt.points.empty()) {
      rt.problem = std::get<0>(key);
      auto v = parse_variant(std::get<1>(key));
      if (!v) throw std::invalid_argument("unknown variant in trace: " + std::get<1>(key));
      rt.variant = *v;
      rt.epsilon = std::get<2>(key);
    }
    TracePoint pt;
    pt.k = j.at("k").get<int>();
    pt.delta = j.at("delta").get<double>();
    pt.accepted = j.at("accepted").get<bool>();
    pt.exact_f = j.at("exact_f").get<double>();
    pt.hnorm_lb = j.at("hnorm_lb").get<double>();
    if (j.contains("x")) pt.x = j.at("x").get<Vec>();
    rt.points.push_back(std::move(pt));
  }
  if (lines_read == 0) throw std::invalid_argument("no trace records in input");

  AuditReport rep;
  const double log_g2 = std::log(cfg.gamma2);
  const double log_g3 = std::log(cfg.gamma3);

  for (auto& [key, rt] : runs) {
    rep.runs += 1;
    std::sort(rt.points.begin(), rt.points.end(),
              [](const TracePoint& a, const TracePoint& b) { return a.k < b.k; });
    const bool forced = variant_is_forced(rt.variant);

    int s_count = 0, u_count = 0;
    double delta0 = rt.points.front().delta;
    double kappa_h = 0.0;
    bool prev_accepted = false;
    double prev_exact_f = 0.0;

    for (std::size_t i = 0; i < rt.points.size(); ++i) {
      const TracePoint& pt = rt.points[i];
      kappa_h = std::max(kappa_h, pt.hnorm_lb);

      rep.partition_checks += 1;
      if (pt.k != static_cast<int>(i) || s_count + u_count != pt.k)
        rep.partition_violations += 1;

      // The radius after s successes and u failures can have grown by at most
      // gamma3 per success and must have shrunk by at least gamma2 per failure.
      rep.chain_checks += 1;
      double lhs = std::log(pt.delta / delta0);
      double rhs = s_count * log_g3 + u_count * log_g2;
      if (lhs > rhs + 1e-9 * (1.0 + std::fabs(rhs))) rep.chain_violations += 1;

      if (!forced && i > 0 && prev_accepted) {
        rep.mono_checks += 1;
        if (pt.exact_f > prev_exact_f + 1e-10 * std::max(1.0, std::fabs(prev_exact_f)))
          rep.mono_violations += 1;
      }
      prev_accepted = pt.accepted;
      prev_exact_f = pt.exact_f;

      if (pt.accepted) s_count += 1; else u_count += 1;
    }

    rep.max_kappa_h = std::max(rep.max_kappa_h, kappa_h);

    // The floor and budget checks need a curvature constant for the exact
    // Hessian, estimated by finite differences where iterates were recorded.
    const Problem* p = find_problem(rt.problem);
    if (!p || rt.points.front().x.empty()) continue;

    double kappa_grad = 0.0;
    std::size_t stride = std::max<std::size_t>(1, rt.points.size() / 5);
    for (std::size_t i = 0; i < rt.points.size(); i += stride)
      kappa_grad = std::max(kappa_grad, fd_hessian_norm(*p, rt.points[i].x));
    rep.max_kappa_grad = std::max(rep.max_kappa_grad, kappa_grad);

    double kappa_hg = 1.0 + std::max(kappa_h, kappa_grad);
    double theta = cfg.gamma1 *
                   (0.5 * (1.0 - cfg.eta1) - cfg.eta0 - cfg.kappa_g) /
                   (kappa_hg * (1.0 + cfg.kappa_g));
    double floor = std::min(delta0, theta * rt.epsilon);

    rep.floor_runs += 1;
    bool held = true;
    for (const TracePoint& pt : rt.points)
      if (pt.delta < floor * (1.0 - 1e-9)) held = false;
    if (held) rep.floor_held += 1;

    double f0 = rt.points.front().exact_f;
    double kappa_low = f0;
    for (const TracePoint& pt : rt.points) kappa_low = std::min(kappa_low, pt.exact_f);
    double tau_s = 2.0 * (f0 - kappa_low) * (1.0 + cfg.kappa_g) /
                   ((cfg.eta1 - 2.0 * cfg.eta0) * theta) /
                   (rt.epsilon * rt.epsilon);
    double tau_tot = tau_s * (1.0 - log_g3 / log_g2) +
                     std::log(delta0 / (theta * rt.epsilon)) / std::fabs(log_g2);
    rep.budget_runs += 1;
    if (s_count <= tau_s) rep.budget_succ_held += 1;
    if (static_cast<double>(rt.points.size()) <= tau_tot) rep.budget_total_held += 1;
  }
  return rep;
}

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << "runs audited: " << runs << "\n";
  os << "monotone descent on accepted steps: " << mono_violations
     << " violations in " << mono_checks << " checks\n";
  os << "iteration partition identity: " << partition_violations
     << " violations in " << partition_checks << " checks\n";
  os << "radius growth chain: " << chain_violations << " violations in "
     << chain_checks << " checks\n";
  os << "radius floor (measured constants): held on " << floor_held << "/"
     << floor_runs << " measurable runs\n";
  os << "iteration budgets (measured constants): successful within bound on "
     << budget_succ_held << "/" << budget_runs << ", total within bound on "
     << budget_total_held << "/" << budget_runs << "\n";
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "measured kappa_H %.6g, kappa_grad %.6g\n", max_kappa_h,
                max_kappa_grad);
  os << buf;
  os << (failed() ? "AUDIT FAILED" : "audit clean") << "\n";
  return os.str();
}

}  // namespace trda
