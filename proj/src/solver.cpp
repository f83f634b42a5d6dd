#include "trda/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trda/lsr1.hpp"
#include "trda/subproblem.hpp"

namespace trda {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::LMQN: return "LMQN";
    case Variant::LMQN_S: return "LMQN-s";
    case Variant::LMQN_H: return "LMQN-h";
    case Variant::ILMQN_A: return "iLMQN-a";
    case Variant::ILMQN_B: return "iLMQN-b";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "lmqn") return Variant::LMQN;
  if (t == "lmqn-s") return Variant::LMQN_S;
  if (t == "lmqn-h") return Variant::LMQN_H;
  if (t == "ilmqn-a") return Variant::ILMQN_A;
  if (t == "ilmqn-b") return Variant::ILMQN_B;
  return std::nullopt;
}

bool variant_is_forced(Variant v) {
  return v == Variant::LMQN_S || v == Variant::LMQN_H;
}

Tier variant_forced_tier(Variant v) {
  return v == Variant::LMQN_S ? Tier::Single : Tier::Half;
}

void SolverConfig::validate() const {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (!(0.0 < eta1 && eta1 <= eta2 && eta2 < 1.0)) fail("need 0 < eta1 <= eta2 < 1");
  if (!(0.0 < gamma1 && gamma1 <= gamma2 && gamma2 < 1.0 && 1.0 <= gamma3))
    fail("need 0 < gamma1 <= gamma2 < 1 <= gamma3");
  if (!(0.0 < eta0 && eta0 < 0.5 * eta1)) fail("need 0 < eta0 < eta1/2");
  if (!(kappa_g >= 0.0)) fail("need kappa_g >= 0");
  if (!(eta0 + kappa_g < 0.5 * (1.0 - eta2))) fail("need eta0 + kappa_g < (1 - eta2)/2");
  if (!(grow >= 1.0 && grow < gamma3)) fail("grow factor outside [1, gamma3)");
  if (!(midrange >= gamma2 && midrange < 1.0)) fail("midrange factor outside [gamma2, 1)");
  if (!(shrink >= gamma1 && shrink <= gamma2)) fail("shrink factor outside [gamma1, gamma2]");
  if (!(delta0 > 0.0)) fail("need delta0 > 0");
  if (!(omega_f0 >= 0.0)) fail("need omega_f0 >= 0");
  if (!(epsilon > 0.0)) fail("need epsilon > 0");
  if (max_iters < 1) fail("need max_iters >= 1");
}

double policy_omega_f(Variant v, const SolverConfig& cfg, double pred) {
  switch (v) {
    case Variant::LMQN: return 0.0;
    case Variant::ILMQN_A:
    case Variant::ILMQN_B: return std::min(0.1, 0.04 * cfg.eta1 * pred);
    default: return 0.0;  // forced variants do not request accuracies
  }
}

double policy_omega_g(Variant v, const SolverConfig& cfg, double omega_f_current) {
  switch (v) {
    case Variant::LMQN: return 0.0;
    case Variant::ILMQN_A: return 0.5 * cfg.kappa_g;
    case Variant::ILMQN_B: return std::min(cfg.kappa_g, omega_f_current);
    default: return 0.0;
  }
}

double update_radius(const SolverConfig& cfg, double rho, double delta) {
  if (rho >= cfg.eta2) return cfg.grow * delta;
  if (rho >= cfg.eta1) return cfg.midrange * delta;
  return cfg.shrink * delta;
}

bool check_termination(const SolverConfig& cfg, double gbar_norm) {
  return gbar_norm <= cfg.epsilon / (1.0 + cfg.kappa_g);
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Converged: return "converged";
    case Status::IterLimit: return "iter_limit";
    case Status::EvalError: return "eval_error";
  }
  return "?";
}

void AuditCounters::merge(const AuditCounters& o) {
  cauchy_checks += o.cauchy_checks;
  cauchy_violations += o.cauchy_violations;
  mono_checks += o.mono_checks;
  mono_violations += o.mono_violations;
  omega_checks += o.omega_checks;
  omega_violations += o.omega_violations;
  radius_chain_checks += o.radius_chain_checks;
  radius_chain_violations += o.radius_chain_violations;
  partition_checks += o.partition_checks;
  partition_violations += o.partition_violations;
}

SolveResult solve(const Problem& p, Variant v, const SolverConfig& cfg,
                  std::uint64_t seed, bool with_trace) {
  cfg.validate();
  const int n = p.dim;
  const bool forced = variant_is_forced(v);
  const Tier forced_tier = forced ? variant_forced_tier(v) : Tier::Double;
  const double kInf = std::numeric_limits<double>::infinity();

  NoiseStream ns(seed);
  SolveResult out;
  Lsr1 H(n);
  auto applyH = [&H](const Vec& z) { return H.apply(z); };

  Vec x = p.x0;
  double delta = cfg.delta0;
  double omega_f = (v == Variant::LMQN) ? 0.0 : cfg.omega_f0;

  auto finish = [&](Status st, int iters) {
    out.status = st;
    out.iterations = iters;
    out.x_final = x;
    out.exact_grad_norm_final = nrm2(exact_g(p, x));
    out.exact_f_final = exact_f(p, x);
    return out;
  };

  FValue f0 = forced ? f_bar_forced(p, x, forced_tier, ns, out.ledger)
                     : f_bar(p, x, omega_f, ns, out.ledger);
  if (!f0.finite) return finish(Status::EvalError, 0);
  double f_curr = f0.value;

  // Exact objective along accepted iterates, tracked outside the oracle's
  // budget to audit monotonicity for the variants whose accuracy conditions
  // guarantee it. Slack covers floating-point rounding of f itself.
  const bool audit_mono = !forced;
  double exact_prev = exact_f(p, x);

  Vec gbar;
  double omega_g = 0.0;
  std::vector<Tier> g_tiers_this;

  bool have_pending = false;
  Vec pending_s, pending_g;

  int s_count = 0, u_count = 0;
  int k = 0;

  while (true) {
    g_tiers_this.clear();
    const bool need_g = (k == 0) || (have_pending);
    if (need_g) {
      omega_g = forced ? tier_noise_halfwidth(forced_tier)
                       : policy_omega_g(v, cfg, omega_f);
      GValue gv = forced ? g_bar_forced(p, x, forced_tier, ns, out.ledger)
                         : g_bar(p, x, omega_g, ns, out.ledger);
      if (!gv.finite) return finish(Status::EvalError, k);
      if (forced) {
        g_tiers_this.push_back(forced_tier);
      } else if (omega_g <= 0.0) {
        g_tiers_this.push_back(Tier::Double);
      } else {
        static const Tier order[3] = {Tier::Half, Tier::Single, Tier::Double};
        for (int a = 0; a < gv.attempts; ++a) g_tiers_this.push_back(order[a]);
      }
      if (have_pending) {
        Vec y = gv.grad;
        axpy(-1.0, pending_g, y);
        H.update(pending_s, y);
        have_pending = false;
      }
      gbar = std::move(gv.grad);
    }
    double gnorm = nrm2(gbar);

    if (check_termination(cfg, gnorm)) return finish(Status::Converged, k);
    if (k >= cfg.max_iters) return finish(Status::IterLimit, k);

    IterationRecord rec;
    if (with_trace) {
      rec.k = k;
      rec.x = x;
      rec.delta = delta;
      rec.gbar_norm = gnorm;
      rec.exact_f = exact_prev;
      rec.g_tiers = g_tiers_this;
    }

    // Radius chain audit: the radius a prefix of s successes and u failures can
    // reach is bounded by delta0 * gamma3^s * gamma2^u.
    out.audit.partition_checks += 1;
    if (s_count + u_count != k) out.audit.partition_violations += 1;
    out.audit.radius_chain_checks += 1;
    {
      double lhs = std::log(delta / cfg.delta0);
      double rhs = s_count * std::log(cfg.gamma3) + u_count * std::log(cfg.gamma2);
      if (lhs > rhs + 1e-9 * (1.0 + std::fabs(rhs))) out.audit.radius_chain_violations += 1;
    }

    double hnb = H.norm_lower_bound();
    if (hnb > out.kappa_h_observed) out.kappa_h_observed = hnb;
    if (with_trace) rec.hnorm_lb = hnb;

    TrStep step = solve_tr(gbar, applyH, delta);
    double pred = step.pred;

    bool step_ok = std::isfinite(pred) && pred > 0.0 && all_finite(step.s);
    if (step_ok) {
      // Model decrease must be at least the scaled Cauchy floor. The floor is
      // computed with an upper bound on |H| so it never exceeds the true
      // floor; a sound step can then only be flagged through FP rounding,
      // which the relative slack absorbs.
      out.audit.cauchy_checks += 1;
      double hub = H.norm_upper_bound();
      double floor = 0.5 * gnorm * std::min(gnorm / (1.0 + hub), delta);
      if (pred < floor * (1.0 - 1e-9) - 1e-15 * (1.0 + floor))
        out.audit.cauchy_violations += 1;
    }

    double rho = -kInf;
    bool accepted = false;
    double omega_plus = 0.0;

    if (step_ok) {
      Vec x_trial = add_scaled(x, 1.0, step.s);
      FValue ftrial;
      if (forced) {
        omega_plus = tier_noise_halfwidth(forced_tier);
        ftrial = f_bar_forced(p, x_trial, forced_tier, ns, out.ledger);
        if (with_trace) rec.f_tiers.push_back(forced_tier);
      } else {
        omega_plus = policy_omega_f(v, cfg, pred);
        out.audit.omega_checks += 1;
        if (omega_plus > cfg.eta0 * pred) out.audit.omega_violations += 1;
        ftrial = f_bar(p, x_trial, omega_plus, ns, out.ledger);
        if (with_trace) rec.f_tiers.push_back(ftrial.tier);
        if (ftrial.finite && omega_plus < omega_f) {
          // The stored value must be at least as accurate as the trial value
          // before the two are compared; the step is kept as computed.
          FValue fre = f_bar(p, x, omega_plus, ns, out.ledger);
          if (!fre.finite) return finish(Status::EvalError, k);
          f_curr = fre.value;
          omega_f = omega_plus;
          if (with_trace) rec.f_tiers.push_back(fre.tier);
        }
      }
      if (ftrial.finite) {
        rho = (f_curr - ftrial.value) / pred;
        accepted = rho >= cfg.eta1;
      }
      if (accepted) {
        pending_s = step.s;
        pending_g = gbar;
        have_pending = true;
        x = std::move(x_trial);
        f_curr = ftrial.value;
        if (!forced) omega_f = omega_plus;
        out.n_successful += 1;
        if (audit_mono) {
          double exact_now = exact_f(p, x);
          out.audit.mono_checks += 1;
          if (exact_now > exact_prev + 1e-10 * std::max(1.0, std::fabs(exact_prev)))
            out.audit.mono_violations += 1;
          exact_prev = exact_now;
        } else {
          exact_prev = exact_f(p, x);
        }
      }
    }

    if (accepted) s_count += 1; else u_count += 1;
    delta = update_radius(cfg, rho, delta);

    if (with_trace) {
      rec.omega_f = omega_f;
      rec.omega_g = omega_g;
      rec.pred = pred;
      rec.rho = rho;
      rec.accepted = accepted;
      out.trace.push_back(std::move(rec));
    }
    k += 1;
  }
}

}  // namespace trda
