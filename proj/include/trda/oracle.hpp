#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "trda/problems.hpp"
#include "trda/vec.hpp"

namespace trda {

// Simulated arithmetic tiers. Single and Half evaluations perturb the exact
// result by independent uniform draws from [-u, u]; the noise halfwidths stand
// in for machine precision at the reduced formats. Costs are energy units per
// evaluation relative to Double.
enum class Tier { Double, Single, Half };

double tier_noise_halfwidth(Tier t);   // 0, 1e-8, 1e-4
const char* tier_name(Tier t);

// Cost in sixteenths of a Double evaluation: 16, 4, 1.
std::uint64_t tier_cost_sixteenths(Tier t);

// Deterministic splittable generator (splitmix64). Identical seed and call
// sequence give bit-identical draws on every platform.
class NoiseStream {
 public:
  explicit NoiseStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double unit();                        // [0, 1)
  double symmetric(double halfwidth);   // uniform in [-halfwidth, halfwidth]

 private:
  std::uint64_t state_;
};

// Exact energy accounting in units of 1/16 of a Double evaluation, split by
// evaluation kind and tier, plus counters for the oracle contract checks.
struct EnergyLedger {
  std::uint64_t f_sixteenths = 0;
  std::uint64_t g_sixteenths = 0;
  std::array<std::uint64_t, 3> f_count{};  // indexed by Tier
  std::array<std::uint64_t, 3> g_count{};
  std::uint64_t contract_checks = 0;
  std::uint64_t contract_violations = 0;

  double cost_f() const { return f_sixteenths / 16.0; }
  double cost_g() const { return g_sixteenths / 16.0; }
  void charge_f(Tier t);
  void charge_g(Tier t);
  void merge(const EnergyLedger& other);
};

struct FValue {
  double value = 0.0;
  Tier tier = Tier::Double;
  bool finite = true;
};

struct GValue {
  Vec grad;
  Tier tier = Tier::Double;            // tier that produced the returned vector
  int attempts = 1;                    // tiers tried, cheapest first
  bool finite = true;
};

// Objective value with absolute error at most omega_f. The tier is chosen
// a priori as the cheapest one whose noise halfwidth fits under omega_f;
// omega_f below the Single halfwidth (or zero) forces an exact Double
// evaluation. Every call charges the ledger for the tier used.
FValue f_bar(const Problem& p, const Vec& x, double omega_f, NoiseStream& ns,
             EnergyLedger& ledger);

// Gradient with relative error bound: the returned grad satisfies
// |grad - exact| <= omega_g * |grad|. Tiers are tried cheapest first; a tier
// is accepted when its guaranteed error u*sqrt(n) fits under omega_g times
// the norm of the perturbed gradient it produced. Every attempted tier is
// charged. omega_g = 0 requests an exact gradient (one Double evaluation).
GValue g_bar(const Problem& p, const Vec& x, double omega_g, NoiseStream& ns,
             EnergyLedger& ledger);

// Fixed-precision evaluations: no accuracy request, no escalation, single
// charge at the given tier.
FValue f_bar_forced(const Problem& p, const Vec& x, Tier t, NoiseStream& ns,
                    EnergyLedger& ledger);
GValue g_bar_forced(const Problem& p, const Vec& x, Tier t, NoiseStream& ns,
                    EnergyLedger& ledger);

}  // namespace trda
