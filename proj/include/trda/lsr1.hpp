#pragma once

#include <cstdint>
#include <vector>

#include "trda/vec.hpp"

namespace trda {

// Limited-memory symmetric rank-one Hessian approximation
//
//   H = scale * I + sum_j u_j u_j^T / d_j,   u_j = y_j - H_(j) s_j,
//
// built from secant pairs (s, y) in insertion order, oldest dropped first once
// the memory is full. A pair is kept only when |s^T u| >= skip_tol |s| |u|,
// the usual safeguard against an undefined or exploding update.
class Lsr1 {
 public:
  explicit Lsr1(int n, int memory = 15, double skip_tol = 1e-8);

  // Offers a secant pair; returns true when it was inserted. The very first
  // accepted pair also rescales the identity seed to y's/y'y.
  bool update(const Vec& s, const Vec& y);

  // H * v
  Vec apply(const Vec& v) const;

  // Lower bound on the spectral norm of H: 10 power-iteration steps from a
  // fixed pseudorandom start, returning the best norm quotient seen. Any
  // quotient |Hv|/|v| is a valid lower bound, so early iterates only make the
  // result more conservative.
  double norm_lower_bound() const;

  // Upper bound on the spectral norm via the triangle inequality,
  // |scale| + sum |u_j|^2 / |d_j|. Cheap and safe, if loose; suited to
  // checks that must never fire on a sound step.
  double norm_upper_bound() const;

  int size() const { return static_cast<int>(pairs_.size()); }
  int dim() const { return n_; }
  double scale() const { return scale_; }

 private:
  struct Pair {
    Vec s, y;  // raw data, kept so the cache can be rebuilt after eviction
    Vec u;
    double d = 0.0;
  };

  void rebuild();

  int n_;
  int memory_;
  double skip_tol_;
  double scale_ = 1.0;
  bool seeded_ = false;
  std::vector<Pair> pairs_;
};

}  // namespace trda
