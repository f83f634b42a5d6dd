#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trda/lsr1.hpp"
#include "trda/subproblem.hpp"

using namespace trda;

namespace {

ApplyH identity() {
  return [](const Vec& v) { return v; };
}

ApplyH diag(Vec d) {
  return [d = std::move(d)](const Vec& v) {
    Vec r = v;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= d[i];
    return r;
  };
}

ApplyH dense(std::vector<Vec> rows) {
  return [rows = std::move(rows)](const Vec& v) {
    Vec r(rows.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) r[i] = dot(rows[i], v);
    return r;
  };
}

double eval_pred(const Vec& g, const ApplyH& H, const Vec& s) {
  return -(dot(g, s) + 0.5 * dot(s, H(s)));
}

}  // namespace

TEST_CASE("cauchy point on an identity model") {
  Vec g{1.0, 0.0};
  TrStep st = cauchy_point(g, identity(), 10.0);
  CHECK(st.s[0] == doctest::Approx(-1.0));
  CHECK(st.s[1] == doctest::Approx(0.0));
  CHECK(st.pred == doctest::Approx(0.5));
  CHECK_FALSE(st.boundary_hit);
}

TEST_CASE("cauchy point with no curvature stops at the wall") {
  Vec g{1.0, 0.0};
  ApplyH zero = [](const Vec& v) { return Vec(v.size(), 0.0); };
  TrStep st = cauchy_point(g, zero, 0.5);
  CHECK(st.s[0] == doctest::Approx(-0.5));
  CHECK(st.s[1] == doctest::Approx(0.0));
  CHECK(st.pred == doctest::Approx(0.5));
  CHECK(st.boundary_hit);
}

TEST_CASE("cauchy point on a two-by-two quadratic") {
  Vec g{1.0, 1.0};
  TrStep st = cauchy_point(g, diag({1.0, 2.0}), 10.0);
  // line minimizer at t = g'g / g'Hg = 2/3
  CHECK(st.s[0] == doctest::Approx(-2.0 / 3.0));
  CHECK(st.s[1] == doctest::Approx(-2.0 / 3.0));
  CHECK(st.pred == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("cg reaches the interior model minimizer") {
  Vec g{1.0, 1.0};
  TrStep st = solve_tr(g, diag({1.0, 2.0}), 10.0);
  CHECK(st.s[0] == doctest::Approx(-1.0));
  CHECK(st.s[1] == doctest::Approx(-0.5));
  CHECK(st.pred == doctest::Approx(0.75));
  CHECK_FALSE(st.boundary_hit);
  CHECK(st.cg_iters <= 2);
}

TEST_CASE("tight radius turns the solution into a boundary step") {
  Vec g{1.0, 1.0};
  ApplyH H = diag({1.0, 2.0});
  TrStep st = solve_tr(g, H, 0.1);
  CHECK(nrm2(st.s) == doctest::Approx(0.1));
  CHECK(st.boundary_hit);
  TrStep cp = cauchy_point(g, H, 0.1);
  CHECK(st.pred >= cp.pred * (1.0 - 1e-12));
}

TEST_CASE("a single cg iteration is the cauchy point") {
  Vec g{0.3, -1.2, 0.8};
  ApplyH H = diag({2.0, 1.0, 4.0});
  TrStep one = solve_tr(g, H, 100.0, 1);
  TrStep cp = cauchy_point(g, H, 100.0);
  for (int i = 0; i < 3; ++i) CHECK(one.s[i] == doctest::Approx(cp.s[i]));
  CHECK(one.pred == doctest::Approx(cp.pred));
}

TEST_CASE("negative curvature pushes to the boundary") {
  Vec g{1.0, 0.0};
  TrStep st = solve_tr(g, diag({-1.0, 1.0}), 2.0);
  CHECK(st.boundary_hit);
  CHECK(nrm2(st.s) == doctest::Approx(2.0));
  // concave along -g: walking to the wall beats any interior point there
  CHECK(st.pred == doctest::Approx(2.0 + 2.0));
}

TEST_CASE("zero gradient yields a zero step") {
  Vec g{0.0, 0.0};
  TrStep st = solve_tr(g, identity(), 1.0);
  CHECK(nrm2(st.s) == 0.0);
  CHECK(st.pred == 0.0);
}

TEST_CASE("randomized models keep the decrease guarantees") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.05, 5.0);

  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    // random symmetric H, indefinite on purpose about half the time
    std::vector<Vec> rows(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        double v = 2.0 * u(rng);
        rows[i][j] = v;
        rows[j][i] = v;
      }
      if (trial % 2 == 0) rows[i][i] += n;  // diagonally dominant half
    }
    Vec g(n);
    for (double& v : g) v = u(rng) + 0.01;
    double delta = radius(rng);
    ApplyH H = dense(rows);

    CAPTURE(trial);
    TrStep cp = cauchy_point(g, H, delta);
    TrStep st = solve_tr(g, H, delta);

    CHECK(nrm2(st.s) <= delta * (1.0 + 1e-12));
    CHECK(nrm2(cp.s) <= delta * (1.0 + 1e-12));
    CHECK(st.pred >= cp.pred * (1.0 - 1e-10) - 1e-12);
    CHECK(cp.pred > 0.0);

    // reported decrease must match the model evaluated at the returned step
    double direct = eval_pred(g, H, st.s);
    double scale = std::max(1.0, std::fabs(direct));
    CHECK(std::fabs(st.pred - direct) / scale <= 1e-10);
  }
}
