#pragma once

#include <functional>

#include "trda/vec.hpp"

namespace trda {

// Result of an approximate minimization of the quadratic model
//   m(s) = g's + 0.5 s'Hs   subject to |s| <= delta.
// pred = m(0) - m(s) = -(g's + 0.5 s'Hs) is recomputed directly from the
// returned step so it is consistent with s to rounding error.
struct TrStep {
  Vec s;
  double pred = 0.0;
  bool boundary_hit = false;
  int cg_iters = 0;
};

using ApplyH = std::function<Vec(const Vec&)>;

// Exact minimizer of the model along -g within the radius.
TrStep cauchy_point(const Vec& g, const ApplyH& H, double delta);

// Truncated conjugate gradient (Steihaug) from s = 0: stops on the
// residual test |r| <= min(0.1, sqrt(|g|)) * |g|, on crossing the boundary,
// on nonpositive curvature (step to the boundary), or after max_iters
// iterations (dimension of g when max_iters <= 0). The decrease is at least
// that of the Cauchy point; non-finite arithmetic falls back to the Cauchy
// point.
TrStep solve_tr(const Vec& g, const ApplyH& H, double delta, int max_iters = 0);

}  // namespace trda
