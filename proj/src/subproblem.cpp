#include "trda/subproblem.hpp"

#include <algorithm>
#include <cmath>

namespace trda {
namespace {

double model_decrease(const Vec& g, const ApplyH& H, const Vec& s) {
  return -(dot(g, s) + 0.5 * dot(s, H(s)));
}

// Positive root tau of |s + tau d| = delta.
double boundary_tau(const Vec& s, const Vec& d, double delta) {
  double dd = dot(d, d);
  double sd = dot(s, d);
  double ss = dot(s, s);
  double disc = sd * sd + dd * (delta * delta - ss);
  if (disc < 0.0) disc = 0.0;
  // Stable formula: avoid cancellation when sd > 0.
  double root = std::sqrt(disc);
  if (sd >= 0.0) return (delta * delta - ss) / (sd + root);
  return (root - sd) / dd;
}

}  // namespace

TrStep cauchy_point(const Vec& g, const ApplyH& H, double delta) {
  TrStep out;
  double gg = dot(g, g);
  double gn = std::sqrt(gg);
  out.s.assign(g.size(), 0.0);
  if (gn == 0.0 || delta <= 0.0) return out;
  double ghg = dot(g, H(g));
  double tmax = delta / gn;
  double t;
  if (ghg <= 0.0) {
    t = tmax;
    out.boundary_hit = true;
  } else {
    t = gg / ghg;
    if (t >= tmax) {
      t = tmax;
      out.boundary_hit = true;
    }
  }
  axpy(-t, g, out.s);
  out.pred = model_decrease(g, H, out.s);
  return out;
}

TrStep solve_tr(const Vec& g, const ApplyH& H, double delta, int max_iters) {
  const int n = static_cast<int>(g.size());
  if (max_iters <= 0) max_iters = n;
  double gn = nrm2(g);
  TrStep out;
  out.s.assign(g.size(), 0.0);
  if (gn == 0.0 || delta <= 0.0) return out;

  const double rtol = std::min(0.1, std::sqrt(gn)) * gn;

  Vec s(g.size(), 0.0);
  Vec r = g;           // residual of Hs + g
  Vec d = g;
  scal(-1.0, d);
  double rr = dot(r, r);
  bool ok = true;

  for (int it = 0; it < max_iters; ++it) {
    Vec hd = H(d);
    double dhd = dot(d, hd);
    if (!std::isfinite(dhd)) {
      ok = false;
      break;
    }
    if (dhd <= 0.0) {
      // Nonpositive curvature: the model is unbounded along d, go to the wall.
      double tau = boundary_tau(s, d, delta);
      axpy(tau, d, s);
      out.boundary_hit = true;
      out.cg_iters = it + 1;
      break;
    }
    double alpha = rr / dhd;
    Vec s_next = s;
    axpy(alpha, d, s_next);
    if (nrm2(s_next) >= delta) {
      double tau = boundary_tau(s, d, delta);
      axpy(tau, d, s);
      out.boundary_hit = true;
      out.cg_iters = it + 1;
      break;
    }
    s = std::move(s_next);
    axpy(alpha, hd, r);
    double rr_next = dot(r, r);
    out.cg_iters = it + 1;
    if (!std::isfinite(rr_next)) {
      ok = false;
      break;
    }
    if (std::sqrt(rr_next) <= rtol) break;
    double beta = rr_next / rr;
    rr = rr_next;
    scal(beta, d);
    axpy(-1.0, r, d);
  }

  if (ok && all_finite(s)) {
    out.s = std::move(s);
    out.pred = model_decrease(g, H, out.s);
    if (std::isfinite(out.pred)) return out;
  }
  // Fallback when CG ran into non-finite arithmetic.
  return cauchy_point(g, H, delta);
}

}  // namespace trda
