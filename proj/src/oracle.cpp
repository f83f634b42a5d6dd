#include "trda/oracle.hpp"

#include <cmath>
#include <limits>

namespace trda {

double tier_noise_halfwidth(Tier t) {
  switch (t) {
    case Tier::Double: return 0.0;
    case Tier::Single: return 1e-8;
    case Tier::Half: return 1e-4;
  }
  return 0.0;
}

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::Double: return "double";
    case Tier::Single: return "single";
    case Tier::Half: return "half";
  }
  return "?";
}

std::uint64_t tier_cost_sixteenths(Tier t) {
  switch (t) {
    case Tier::Double: return 16;
    case Tier::Single: return 4;
    case Tier::Half: return 1;
  }
  return 16;
}

std::uint64_t NoiseStream::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double NoiseStream::unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double NoiseStream::symmetric(double halfwidth) {
  if (halfwidth == 0.0) return 0.0;
  return halfwidth * (2.0 * unit() - 1.0);
}

void EnergyLedger::charge_f(Tier t) {
  f_sixteenths += tier_cost_sixteenths(t);
  f_count[static_cast<int>(t)] += 1;
}

void EnergyLedger::charge_g(Tier t) {
  g_sixteenths += tier_cost_sixteenths(t);
  g_count[static_cast<int>(t)] += 1;
}

void EnergyLedger::merge(const EnergyLedger& other) {
  f_sixteenths += other.f_sixteenths;
  g_sixteenths += other.g_sixteenths;
  for (int i = 0; i < 3; ++i) {
    f_count[i] += other.f_count[i];
    g_count[i] += other.g_count[i];
  }
  contract_checks += other.contract_checks;
  contract_violations += other.contract_violations;
}

namespace {

Tier pick_f_tier(double omega_f) {
  if (omega_f >= 1e-4) return Tier::Half;
  if (omega_f >= 1e-8) return Tier::Single;
  return Tier::Double;
}

FValue eval_f_at(const Problem& p, const Vec& x, Tier t, NoiseStream& ns,
                 EnergyLedger& ledger, double omega_for_check) {
  ledger.charge_f(t);
  double exact = exact_f(p, x);
  double noisy = exact + ns.symmetric(tier_noise_halfwidth(t));
  FValue out{noisy, t, std::isfinite(noisy)};
  if (out.finite) {
    // Shadow check of the advertised absolute error bound. The injected draw
    // respects the bound exactly; rounding of exact + draw can overshoot by up
    // to half an ulp of the sum, so allow that much slack (matters only when
    // |exact| is so large that the bound sits below its ulp).
    ledger.contract_checks += 1;
    double bound = omega_for_check >= 0.0 ? omega_for_check : tier_noise_halfwidth(t);
    double slack = std::numeric_limits<double>::epsilon() * (std::fabs(exact) + bound);
    if (std::fabs(noisy - exact) > bound + slack) ledger.contract_violations += 1;
  }
  return out;
}

GValue eval_g_at(const Problem& p, const Vec& x, Tier t, NoiseStream& ns,
                 EnergyLedger& ledger) {
  ledger.charge_g(t);
  Vec grad = exact_g(p, x);
  double u = tier_noise_halfwidth(t);
  if (u > 0.0)
    for (double& v : grad) v += ns.symmetric(u);
  GValue out;
  out.grad = std::move(grad);
  out.tier = t;
  out.finite = all_finite(out.grad);
  return out;
}

}  // namespace

FValue f_bar(const Problem& p, const Vec& x, double omega_f, NoiseStream& ns,
             EnergyLedger& ledger) {
  Tier t = (omega_f <= 0.0) ? Tier::Double : pick_f_tier(omega_f);
  return eval_f_at(p, x, t, ns, ledger, omega_f > 0.0 ? omega_f : 0.0);
}

GValue g_bar(const Problem& p, const Vec& x, double omega_g, NoiseStream& ns,
             EnergyLedger& ledger) {
  if (omega_g <= 0.0) {
    // Exact request: straight to Double, no escalation.
    GValue out = eval_g_at(p, x, Tier::Double, ns, ledger);
    if (out.finite) ledger.contract_checks += 1;
    return out;
  }
  static const Tier order[3] = {Tier::Half, Tier::Single, Tier::Double};
  GValue out;
  for (int a = 0; a < 3; ++a) {
    out = eval_g_at(p, x, order[a], ns, ledger);
    out.attempts = a + 1;
    if (!out.finite) return out;
    double u = tier_noise_halfwidth(order[a]);
    double guaranteed = u * std::sqrt(static_cast<double>(p.dim));
    if (guaranteed <= omega_g * nrm2(out.grad)) break;
  }
  // The accepted tier's per-coordinate noise certifies the relative bound.
  ledger.contract_checks += 1;
  Vec exact = exact_g(p, x);
  Vec diff = out.grad;
  axpy(-1.0, exact, diff);
  if (nrm2(diff) > omega_g * nrm2(out.grad) + 1e-300) ledger.contract_violations += 1;
  return out;
}

FValue f_bar_forced(const Problem& p, const Vec& x, Tier t, NoiseStream& ns,
                    EnergyLedger& ledger) {
  return eval_f_at(p, x, t, ns, ledger, -1.0);
}

GValue g_bar_forced(const Problem& p, const Vec& x, Tier t, NoiseStream& ns,
                    EnergyLedger& ledger) {
  return eval_g_at(p, x, t, ns, ledger);
}

}  // namespace trda
