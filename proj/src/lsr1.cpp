#include "trda/lsr1.hpp"

#include <cmath>
#include <cstdint>

namespace trda {

Lsr1::Lsr1(int n, int memory, double skip_tol)
    : n_(n), memory_(memory), skip_tol_(skip_tol) {}

Vec Lsr1::apply(const Vec& v) const {
  Vec r = v;
  scal(scale_, r);
  for (const Pair& p : pairs_) axpy(dot(p.u, v) / p.d, p.u, r);
  return r;
}

void Lsr1::rebuild() {
  // Recompute each correction against the operator formed by the pairs before
  // it. A pair can become degenerate under a new prefix; such pairs are
  // dropped to keep apply() well defined.
  std::vector<Pair> kept;
  kept.reserve(pairs_.size());
  for (Pair& p : pairs_) {
    Vec hs = p.s;
    scal(scale_, hs);
    for (const Pair& k : kept) axpy(dot(k.u, p.s) / k.d, k.u, hs);
    Vec u = p.y;
    axpy(-1.0, hs, u);
    double d = dot(p.s, u);
    if (std::fabs(d) <= skip_tol_ * nrm2(p.s) * nrm2(u)) continue;
    p.u = std::move(u);
    p.d = d;
    kept.push_back(std::move(p));
  }
  pairs_ = std::move(kept);
}

bool Lsr1::update(const Vec& s, const Vec& y) {
  Vec u = y;
  axpy(-1.0, apply(s), u);
  double d = dot(s, u);
  // <= rather than <: a zero correction (y == Hs exactly) makes both sides 0
  // and must be skipped, otherwise d == 0 reaches the rank-one division.
  if (std::fabs(d) <= skip_tol_ * nrm2(s) * nrm2(u)) return false;

  if (!seeded_) {
    // First accepted pair rescales the identity seed, then the correction is
    // recomputed against the rescaled operator.
    double yy = dot(y, y);
    double ys = dot(y, s);
    if (yy > 0.0 && ys > 0.0) scale_ = ys / yy;
    seeded_ = true;
    u = y;
    axpy(-1.0, apply(s), u);
    d = dot(s, u);
    // y consistent with the pure-scaling seed carries no extra information.
    if (std::fabs(d) <= skip_tol_ * nrm2(s) * nrm2(u)) return false;
  }

  if (static_cast<int>(pairs_.size()) >= memory_) {
    pairs_.erase(pairs_.begin());
    rebuild();
    u = y;
    axpy(-1.0, apply(s), u);
    d = dot(s, u);
    if (std::fabs(d) <= skip_tol_ * nrm2(s) * nrm2(u)) return false;
  }

  Pair p;
  p.s = s;
  p.y = y;
  p.u = std::move(u);
  p.d = d;
  pairs_.push_back(std::move(p));
  return true;
}

double Lsr1::norm_lower_bound() const {
  // Fixed pseudorandom start so runs are reproducible (splitmix64 sequence).
  Vec v(static_cast<std::size_t>(n_));
  std::uint64_t st = 0x9e3779b97f4a7c15ULL;
  for (double& vi : v) {
    st += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = st;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    vi = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
  }
  double nv = nrm2(v);
  if (nv == 0.0) return 0.0;
  scal(1.0 / nv, v);
  double best = 0.0;
  for (int it = 0; it < 10; ++it) {
    Vec hv = apply(v);
    double q = nrm2(hv);  // |Hv| with |v| = 1, a valid lower bound on |H|
    if (q > best) best = q;
    if (q == 0.0 || !std::isfinite(q)) break;
    scal(1.0 / q, hv);
    v = std::move(hv);
  }
  return best;
}

double Lsr1::norm_upper_bound() const {
  double b = std::fabs(scale_);
  for (const Pair& p : pairs_) {
    double uu = dot(p.u, p.u);
    b += uu / std::fabs(p.d);
  }
  return b;
}

}  // namespace trda
