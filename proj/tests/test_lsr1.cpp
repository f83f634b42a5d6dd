#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trda/lsr1.hpp"

using namespace trda;

namespace {

Vec e(int n, int i, double v = 1.0) {
  Vec r(static_cast<std::size_t>(n), 0.0);
  r[static_cast<std::size_t>(i)] = v;
  return r;
}

}  // namespace

TEST_CASE("fresh state is the identity") {
  Lsr1 H(3);
  CHECK(H.size() == 0);
  CHECK(H.dim() == 3);
  CHECK(H.scale() == 1.0);
  Vec v{1.5, -2.0, 0.25};
  Vec hv = H.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(hv[i] == v[i]);
  Vec z = H.apply(Vec(3, 0.0));
  for (double zi : z) CHECK(zi == 0.0);
  CHECK(H.norm_lower_bound() == doctest::Approx(1.0));
}

TEST_CASE("zero-correction pairs are skipped") {
  Lsr1 H(2);
  // y equals H*s for the current operator, so the pair carries nothing.
  CHECK_FALSE(H.update(e(2, 0), e(2, 0)));
  CHECK(H.size() == 0);
  Vec v{5.0, 7.0};
  Vec hv = H.apply(v);
  CHECK(hv[0] == 5.0);
  CHECK(hv[1] == 7.0);
}

TEST_CASE("two axis pairs reconstruct a diagonal matrix") {
  // Feed exact secant data of diag(1,2). The first accepted pair sets the
  // identity scale to y's/y'y = 1/2, so the unit-curvature pair has to come
  // second to contribute a correction.
  Lsr1 H(2);
  CHECK(H.update(e(2, 1), e(2, 1, 2.0)));
  CHECK(H.update(e(2, 0), e(2, 0)));
  CHECK(H.size() == 2);

  Vec h1 = H.apply(Vec{1.0, 1.0});
  CHECK(h1[0] == doctest::Approx(1.0));
  CHECK(h1[1] == doctest::Approx(2.0));
  Vec he0 = H.apply(e(2, 0));
  CHECK(he0[0] == doctest::Approx(1.0));
  CHECK(he0[1] == doctest::Approx(0.0));

  CHECK(H.norm_lower_bound() >= 1.9);
  CHECK(H.norm_lower_bound() <= 2.0 + 1e-12);
}

TEST_CASE("secant equation holds for the newest accepted pair") {
  // Quadratic with Hessian A: y = A s exactly.
  const int n = 5;
  const double A[n][n] = {{4.0, 1.0, 0.0, 0.5, 0.0},
                          {1.0, 3.0, 0.5, 0.0, 0.0},
                          {0.0, 0.5, 5.0, 1.0, 0.5},
                          {0.5, 0.0, 1.0, 2.0, 0.0},
                          {0.0, 0.0, 0.5, 0.0, 6.0}};
  auto Amul = [&](const Vec& v) {
    Vec r(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += A[i][j] * v[j];
    return r;
  };

  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Lsr1 H(n);
  int accepted = 0;
  for (int k = 0; k < 30; ++k) {
    Vec s(n);
    for (double& v : s) v = u(rng);
    Vec y = Amul(s);
    if (!H.update(s, y)) continue;
    ++accepted;
    Vec hs = H.apply(s);
    for (int i = 0; i < n; ++i)
      CHECK(hs[i] == doctest::Approx(y[i]).epsilon(1e-9));
  }
  CHECK(accepted >= 5);  // the quadratic keeps producing informative pairs
}

TEST_CASE("operator stays symmetric") {
  const int n = 6;
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Lsr1 H(n);
  for (int k = 0; k < 10; ++k) {
    Vec s(n), y(n);
    for (double& v : s) v = u(rng);
    for (double& v : y) v = u(rng);
    H.update(s, y);
  }
  REQUIRE(H.size() > 0);
  for (int rep = 0; rep < 20; ++rep) {
    Vec a(n), b(n);
    for (double& v : a) v = u(rng);
    for (double& v : b) v = u(rng);
    double left = dot(a, H.apply(b));
    double right = dot(b, H.apply(a));
    double scale = std::max({1.0, std::fabs(left), std::fabs(right)});
    CHECK(std::fabs(left - right) / scale <= 1e-10);
  }
}

TEST_CASE("norm bound tracks a dominant correction") {
  Lsr1 H(3);
  const double c = 1e6;
  CHECK(H.update(e(3, 0), e(3, 0, c)));
  Vec he0 = H.apply(e(3, 0));
  CHECK(he0[0] == doctest::Approx(c));
  CHECK(H.norm_lower_bound() >= 0.9 * c);
}

TEST_CASE("memory keeps the newest pairs") {
  // diag(2,3,4) data with memory for two pairs; after the third insertion the
  // first axis pair is gone and its curvature reverts to the seed scale.
  Lsr1 H(3, 2);
  CHECK(H.update(e(3, 0), e(3, 0, 2.0)));  // seeds scale to 1/2
  CHECK(H.scale() == doctest::Approx(0.5));
  CHECK(H.update(e(3, 1), e(3, 1, 3.0)));
  CHECK(H.size() == 2);
  CHECK(H.update(e(3, 2), e(3, 2, 4.0)));
  CHECK(H.size() == 2);

  Vec h0 = H.apply(e(3, 0));
  Vec h1 = H.apply(e(3, 1));
  Vec h2 = H.apply(e(3, 2));
  CHECK(h0[0] == doctest::Approx(0.5));  // evicted direction, seed only
  CHECK(h1[1] == doctest::Approx(3.0));
  CHECK(h2[2] == doctest::Approx(4.0));
}
