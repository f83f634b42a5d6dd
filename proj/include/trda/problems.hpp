#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trda/vec.hpp"

namespace trda {

// A smooth unconstrained minimization problem with an analytic gradient.
//
// Objectives and gradients are plain callables so the catalog can mix
// fixed-dimension classics with variable-dimension families. fd_check_tol is
// the per-coordinate tolerance used by the finite-difference gradient tests;
// the badly scaled problems need a looser one because their function values
// reach 1e9 and beyond, which limits the accuracy of central differences.
struct Problem {
  std::string name;
  int dim = 0;
  Vec x0;
  std::function<double(const Vec&)> f;
  std::function<Vec(const Vec&)> g;
  std::optional<double> f_lower_hint;  // known optimal value, metadata only
  double fd_check_tol = 1e-5;
};

// Evaluation helpers with dimension checks. Throw std::invalid_argument on a
// size mismatch; non-finite results are returned as-is for the caller to
// handle.
double exact_f(const Problem& p, const Vec& x);
Vec exact_g(const Problem& p, const Vec& x);

// The built-in suite (42 problems, dimensions fixed by the benchmark).
const std::vector<Problem>& catalog();

// nullptr when no problem with that name exists.
const Problem* find_problem(const std::string& name);

}  // namespace trda
