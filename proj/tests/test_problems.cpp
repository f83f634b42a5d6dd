#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "trda/problems.hpp"

using namespace trda;

namespace {

Vec fd_gradient(const Problem& p, const Vec& x) {
  Vec g(x.size(), 0.0);
  Vec xp = x, xm = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double h = 1e-6 * (1.0 + std::fabs(x[i]));
    xp[i] = x[i] + h;
    xm[i] = x[i] - h;
    g[i] = (exact_f(p, xp) - exact_f(p, xm)) / (2.0 * h);
    xp[i] = x[i];
    xm[i] = x[i];
  }
  return g;
}

// Mixed absolute/relative coordinate error, so near-zero components do not
// blow up the quotient. With vector_scale the error is also measured against
// the largest gradient component: at displaced points some objectives reach
// 1e12 and beyond, where a central difference cannot resolve coordinates whose
// contribution sits below one ulp of f, so per-coordinate comparison is only
// meaningful relative to the gradient's overall magnitude.
double worst_coord_err(const Vec& analytic, const Vec& fd, bool vector_scale) {
  double floor_scale = 1.0;
  if (vector_scale)
    for (double v : analytic) floor_scale = std::max(floor_scale, std::fabs(v));
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    double scale = std::max(floor_scale, std::max(std::fabs(analytic[i]), std::fabs(fd[i])));
    worst = std::max(worst, std::fabs(analytic[i] - fd[i]) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("catalog lists the full suite with unique names") {
  const auto& cat = catalog();
  CHECK(cat.size() == 42);
  std::set<std::string> names;
  for (const Problem& p : cat) {
    CAPTURE(p.name);
    names.insert(p.name);
    CHECK(p.dim >= 2);
    CHECK(static_cast<int>(p.x0.size()) == p.dim);
  }
  CHECK(names.size() == cat.size());
}

TEST_CASE("catalog dimensions match the benchmark definitions") {
  struct { const char* name; int dim; } expected[] = {
      {"rosenbr", 2}, {"beale", 2},    {"helix", 3},    {"powellsg", 4},
      {"watson", 12}, {"penalty1", 10}, {"morebv", 12},  {"biggs6", 6},
      {"osborneb", 11}, {"woods", 12}, {"tridia", 10},  {"dixmaana", 12},
      {"cosine", 2},  {"arwhead", 10},
  };
  for (const auto& e : expected) {
    const Problem* p = find_problem(e.name);
    REQUIRE_MESSAGE(p != nullptr, e.name);
    CHECK_MESSAGE(p->dim == e.dim, e.name);
  }
  CHECK(find_problem("no-such-problem") == nullptr);
}

TEST_CASE("reference values at known points") {
  const Problem* r = find_problem("rosenbr");
  REQUIRE(r);
  CHECK(exact_f(*r, {1.0, 1.0}) == doctest::Approx(0.0));
  CHECK(exact_f(*r, {-1.2, 1.0}) == doctest::Approx(24.2));
  Vec gmin = exact_g(*r, {1.0, 1.0});
  CHECK(gmin[0] == doctest::Approx(0.0));
  CHECK(gmin[1] == doctest::Approx(0.0));

  const Problem* b = find_problem("beale");
  REQUIRE(b);
  CHECK(exact_f(*b, {3.0, 0.5}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dimension mismatches are usage errors") {
  const Problem* r = find_problem("rosenbr");
  REQUIRE(r);
  CHECK_THROWS_AS(exact_f(*r, Vec{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(exact_g(*r, Vec{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("every problem is finite at its start point") {
  for (const Problem& p : catalog()) {
    CAPTURE(p.name);
    CHECK(std::isfinite(exact_f(p, p.x0)));
    CHECK(all_finite(exact_g(p, p.x0)));
  }
}

TEST_CASE("analytic gradients agree with central differences") {
  std::mt19937_64 rng(9118);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);
  for (const Problem& p : catalog()) {
    CAPTURE(p.name);
    CHECK(worst_coord_err(exact_g(p, p.x0), fd_gradient(p, p.x0), false) <= p.fd_check_tol);
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = p.x0;
      for (double& v : x) v += offset(rng);
      CAPTURE(trial);
      CHECK(worst_coord_err(exact_g(p, x), fd_gradient(p, x), true) <= p.fd_check_tol);
    }
  }
}

TEST_CASE("quadratic problem has an affine gradient") {
  const Problem* t = find_problem("tridia");
  REQUIRE(t);
  Vec zero(static_cast<std::size_t>(t->dim), 0.0);
  Vec g0 = exact_g(*t, zero);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  Vec x(zero.size());
  for (double& v : x) v = val(rng);
  Vec gx = exact_g(*t, x);
  Vec x2 = x;
  scal(2.0, x2);
  Vec g2x = exact_g(*t, x2);
  // g(2x) - g(0) must equal 2 (g(x) - g(0)) when f is quadratic.
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(g2x[i] - g0[i] == doctest::Approx(2.0 * (gx[i] - g0[i])));
}
