#include "trda/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trda {
namespace {

constexpr double kPi = 3.14159265358979323846;

Vec ones(int n, double v = 1.0) { return Vec(static_cast<std::size_t>(n), v); }

// Accumulates f = sum r_i^2 and g = 2 J^T r one residual at a time.
struct LeastSquares {
  double f = 0.0;
  Vec g;
  explicit LeastSquares(int n) : g(static_cast<std::size_t>(n), 0.0) {}
  void add(double r, const Vec& jrow) {
    f += r * r;
    axpy(2.0 * r, jrow, g);
  }
};

Problem rosenbr() {
  Problem p;
  p.name = "rosenbr";
  p.dim = 2;
  p.x0 = {-1.2, 1.0};
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double a = x[1] - x[0] * x[0];
    double b = 1.0 - x[0];
    return 100.0 * a * a + b * b;
  };
  p.g = [](const Vec& x) {
    double a = x[1] - x[0] * x[0];
    return Vec{-400.0 * x[0] * a - 2.0 * (1.0 - x[0]), 200.0 * a};
  };
  return p;
}

Problem beale() {
  Problem p;
  p.name = "beale";
  p.dim = 2;
  p.x0 = {1.0, 1.0};
  p.f_lower_hint = 0.0;
  static const double c[3] = {1.5, 2.25, 2.625};
  p.f = [](const Vec& x) {
    double f = 0.0;
    double pw = 1.0;
    for (int i = 0; i < 3; ++i) {
      pw *= x[1];
      double r = c[i] - x[0] * (1.0 - pw);
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(2, 0.0);
    double pw = 1.0;
    for (int i = 0; i < 3; ++i) {
      double prev = pw;  // x2^i before this power, i.e. x2^(i)
      pw *= x[1];
      double r = c[i] - x[0] * (1.0 - pw);
      g[0] += 2.0 * r * (-(1.0 - pw));
      g[1] += 2.0 * r * (x[0] * (i + 1) * prev);
    }
    return g;
  };
  return p;
}

Problem helix() {
  Problem p;
  p.name = "helix";
  p.dim = 3;
  p.x0 = {-1.0, 0.0, 0.0};
  p.f_lower_hint = 0.0;
  // Branch chosen so the discontinuity lies on {x1 == 0, x2 < 0}, away from
  // the start point (-1, 0) and the minimizer (1, 0). atan2 would cut through
  // the start point instead.
  auto theta = [](double x1, double x2) {
    if (x1 == 0.0) return x2 >= 0.0 ? 0.25 : -0.25;
    double t = std::atan(x2 / x1) / (2.0 * kPi);
    return x1 < 0.0 ? t + 0.5 : t;
  };
  p.f = [theta](const Vec& x) {
    double r1 = 10.0 * (x[2] - 10.0 * theta(x[0], x[1]));
    double r2 = 10.0 * (std::sqrt(x[0] * x[0] + x[1] * x[1]) - 1.0);
    double r3 = x[2];
    return r1 * r1 + r2 * r2 + r3 * r3;
  };
  p.g = [theta](const Vec& x) {
    double rho2 = x[0] * x[0] + x[1] * x[1];
    double rho = std::sqrt(rho2);
    double r1 = 10.0 * (x[2] - 10.0 * theta(x[0], x[1]));
    double r2 = 10.0 * (rho - 1.0);
    double dth1 = -x[1] / (2.0 * kPi * rho2);
    double dth2 = x[0] / (2.0 * kPi * rho2);
    Vec g(3, 0.0);
    g[0] = 2.0 * (r1 * (-100.0 * dth1) + r2 * 10.0 * x[0] / rho);
    g[1] = 2.0 * (r1 * (-100.0 * dth2) + r2 * 10.0 * x[1] / rho);
    g[2] = 2.0 * (r1 * 10.0 + x[2]);
    return g;
  };
  return p;
}

Problem powellsg() {
  Problem p;
  p.name = "powellsg";
  p.dim = 4;
  p.x0 = {3.0, -1.0, 0.0, 1.0};
  p.f_lower_hint = 0.0;
  const double s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
  p.f = [s5, s10](const Vec& x) {
    double r1 = x[0] + 10.0 * x[1];
    double r2 = s5 * (x[2] - x[3]);
    double r3 = (x[1] - 2.0 * x[2]) * (x[1] - 2.0 * x[2]);
    double r4 = s10 * (x[0] - x[3]) * (x[0] - x[3]);
    return r1 * r1 + r2 * r2 + r3 * r3 + r4 * r4;
  };
  p.g = [s5, s10](const Vec& x) {
    double r1 = x[0] + 10.0 * x[1];
    double r2 = s5 * (x[2] - x[3]);
    double u = x[1] - 2.0 * x[2];
    double v = x[0] - x[3];
    double r3 = u * u;
    double r4 = s10 * v * v;
    Vec g(4, 0.0);
    g[0] = 2.0 * (r1 + r4 * 2.0 * s10 * v);
    g[1] = 2.0 * (r1 * 10.0 + r3 * 2.0 * u);
    g[2] = 2.0 * (r2 * s5 + r3 * (-4.0 * u));
    g[3] = 2.0 * (r2 * (-s5) + r4 * (-2.0 * s10 * v));
    return g;
  };
  return p;
}

Problem powellbs() {
  Problem p;
  p.name = "powellbs";
  p.dim = 2;
  p.x0 = {0.0, 1.0};
  p.f_lower_hint = 0.0;
  p.fd_check_tol = 1e-4;
  p.f = [](const Vec& x) {
    double r1 = 1e4 * x[0] * x[1] - 1.0;
    double r2 = std::exp(-x[0]) + std::exp(-x[1]) - 1.0001;
    return r1 * r1 + r2 * r2;
  };
  p.g = [](const Vec& x) {
    double r1 = 1e4 * x[0] * x[1] - 1.0;
    double r2 = std::exp(-x[0]) + std::exp(-x[1]) - 1.0001;
    return Vec{2.0 * (r1 * 1e4 * x[1] - r2 * std::exp(-x[0])),
               2.0 * (r1 * 1e4 * x[0] - r2 * std::exp(-x[1]))};
  };
  return p;
}

Problem brownbs() {
  Problem p;
  p.name = "brownbs";
  p.dim = 2;
  p.x0 = {1.0, 1.0};
  p.f_lower_hint = 0.0;
  p.fd_check_tol = 1e-4;
  p.f = [](const Vec& x) {
    double r1 = x[0] - 1e6;
    double r2 = x[1] - 2e-6;
    double r3 = x[0] * x[1] - 2.0;
    return r1 * r1 + r2 * r2 + r3 * r3;
  };
  p.g = [](const Vec& x) {
    double r3 = x[0] * x[1] - 2.0;
    return Vec{2.0 * (x[0] - 1e6) + 2.0 * r3 * x[1],
               2.0 * (x[1] - 2e-6) + 2.0 * r3 * x[0]};
  };
  return p;
}

Problem brownden() {
  Problem p;
  p.name = "brownden";
  p.dim = 4;
  p.x0 = {25.0, 5.0, -5.0, -1.0};
  p.f_lower_hint = 85822.2;
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 20; ++i) {
      double t = i / 5.0;
      double a = x[0] + t * x[1] - std::exp(t);
      double b = x[2] + x[3] * std::sin(t) - std::cos(t);
      double q = a * a + b * b;
      f += q * q;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(4, 0.0);
    for (int i = 1; i <= 20; ++i) {
      double t = i / 5.0;
      double a = x[0] + t * x[1] - std::exp(t);
      double b = x[2] + x[3] * std::sin(t) - std::cos(t);
      double q = a * a + b * b;
      g[0] += 4.0 * q * a;
      g[1] += 4.0 * q * a * t;
      g[2] += 4.0 * q * b;
      g[3] += 4.0 * q * b * std::sin(t);
    }
    return g;
  };
  return p;
}

Problem bard() {
  Problem p;
  p.name = "bard";
  p.dim = 3;
  p.x0 = {1.0, 1.0, 1.0};
  p.f_lower_hint = 8.21487e-3;
  static const double y[15] = {0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39,
                               0.37, 0.58, 0.73, 0.96, 1.34, 2.10, 4.39};
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 15; ++i) {
      double u = i, v = 16.0 - i, w = std::min(u, v);
      double d = v * x[1] + w * x[2];
      double r = y[i - 1] - (x[0] + u / d);
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(3, 0.0);
    for (int i = 1; i <= 15; ++i) {
      double u = i, v = 16.0 - i, w = std::min(u, v);
      double d = v * x[1] + w * x[2];
      double r = y[i - 1] - (x[0] + u / d);
      g[0] += 2.0 * r * (-1.0);
      g[1] += 2.0 * r * (u * v / (d * d));
      g[2] += 2.0 * r * (u * w / (d * d));
    }
    return g;
  };
  return p;
}

// Classic three-parameter fit; the catalog carries it at dimension 4 with the
// fourth coordinate inactive.
Problem gulf() {
  Problem p;
  p.name = "gulf";
  p.dim = 4;
  p.x0 = {5.0, 2.5, 0.15, 0.0};
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 99; ++i) {
      double t = i / 100.0;
      double yi = 25.0 + std::pow(-50.0 * std::log(t), 2.0 / 3.0);
      double a = std::fabs(yi - x[1]);
      double r = std::exp(-std::pow(a, x[2]) / x[0]) - t;
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(4, 0.0);
    for (int i = 1; i <= 99; ++i) {
      double t = i / 100.0;
      double yi = 25.0 + std::pow(-50.0 * std::log(t), 2.0 / 3.0);
      double diff = yi - x[1];
      double a = std::fabs(diff);
      double sgn = diff >= 0.0 ? 1.0 : -1.0;
      double e = std::pow(a, x[2]);
      double phi = std::exp(-e / x[0]);
      double r = phi - t;
      g[0] += 2.0 * r * phi * e / (x[0] * x[0]);
      g[1] += 2.0 * r * phi * x[2] * std::pow(a, x[2] - 1.0) * sgn / x[0];
      g[2] += 2.0 * r * phi * (-e * std::log(a) / x[0]);
    }
    return g;
  };
  return p;
}

Problem kowosb() {
  Problem p;
  p.name = "kowosb";
  p.dim = 4;
  p.x0 = {0.25, 0.39, 0.415, 0.39};
  p.f_lower_hint = 3.07505e-4;
  static const double y[11] = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                               0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
  static const double u[11] = {4.0000, 2.0000, 1.0000, 0.5000, 0.2500, 0.1670,
                               0.1250, 0.1000, 0.0833, 0.0714, 0.0625};
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < 11; ++i) {
      double num = u[i] * (u[i] + x[1]);
      double den = u[i] * (u[i] + x[2]) + x[3];
      double r = y[i] - x[0] * num / den;
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(4, 0.0);
    for (int i = 0; i < 11; ++i) {
      double num = u[i] * (u[i] + x[1]);
      double den = u[i] * (u[i] + x[2]) + x[3];
      double r = y[i] - x[0] * num / den;
      g[0] += 2.0 * r * (-num / den);
      g[1] += 2.0 * r * (-x[0] * u[i] / den);
      g[2] += 2.0 * r * (x[0] * num * u[i] / (den * den));
      g[3] += 2.0 * r * (x[0] * num / (den * den));
    }
    return g;
  };
  return p;
}

Problem box3d() {
  Problem p;
  p.name = "box";
  p.dim = 3;
  p.x0 = {0.0, 10.0, 20.0};
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 10; ++i) {
      double t = 0.1 * i;
      double r = std::exp(-t * x[0]) - std::exp(-t * x[1]) -
                 x[2] * (std::exp(-t) - std::exp(-10.0 * t));
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(3, 0.0);
    for (int i = 1; i <= 10; ++i) {
      double t = 0.1 * i;
      double e1 = std::exp(-t * x[0]);
      double e2 = std::exp(-t * x[1]);
      double c = std::exp(-t) - std::exp(-10.0 * t);
      double r = e1 - e2 - x[2] * c;
      g[0] += 2.0 * r * (-t * e1);
      g[1] += 2.0 * r * (t * e2);
      g[2] += 2.0 * r * (-c);
    }
    return g;
  };
  return p;
}

// Chained Freudenstein-Roth.
Problem freuroth(int n) {
  Problem p;
  p.name = "freuroth";
  p.dim = n;
  p.x0 = Vec(static_cast<std::size_t>(n), 0.0);
  p.x0[0] = 0.5;
  p.x0[1] = -2.0;
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      double z = x[i + 1];
      double a = -13.0 + x[i] + ((5.0 - z) * z - 2.0) * z;
      double b = -29.0 + x[i] + ((z + 1.0) * z - 14.0) * z;
      f += a * a + b * b;
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
      double z = x[i + 1];
      double a = -13.0 + x[i] + ((5.0 - z) * z - 2.0) * z;
      double b = -29.0 + x[i] + ((z + 1.0) * z - 14.0) * z;
      g[i] += 2.0 * a + 2.0 * b;
      g[i + 1] += 2.0 * a * (10.0 * z - 3.0 * z * z - 2.0) +
                  2.0 * b * (3.0 * z * z + 2.0 * z - 14.0);
    }
    return g;
  };
  return p;
}

Problem watson(int n) {
  Problem p;
  p.name = "watson";
  p.dim = n;
  p.x0 = Vec(static_cast<std::size_t>(n), 0.0);
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 29; ++i) {
      double t = i / 29.0;
      double p0 = 0.0, p1 = 0.0, tw = 1.0;
      for (int j = 0; j < n; ++j) {
        p0 += x[j] * tw;           // sum x_j t^(j)
        if (j >= 1) p1 += j * x[j] * tw / t;  // sum j x_j t^(j-1)
        tw *= t;
      }
      double r = p1 - p0 * p0 - 1.0;
      f += r * r;
    }
    double r30 = x[0];
    double r31 = x[1] - x[0] * x[0] - 1.0;
    return f + r30 * r30 + r31 * r31;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i <= 29; ++i) {
      double t = i / 29.0;
      double p0 = 0.0, p1 = 0.0, tw = 1.0;
      std::vector<double> tpow(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        tpow[j] = tw;
        p0 += x[j] * tw;
        if (j >= 1) p1 += j * x[j] * tw / t;
        tw *= t;
      }
      double r = p1 - p0 * p0 - 1.0;
      for (int j = 0; j < n; ++j) {
        double dj = (j >= 1 ? j * tpow[j] / t : 0.0) - 2.0 * p0 * tpow[j];
        g[j] += 2.0 * r * dj;
      }
    }
    g[0] += 2.0 * x[0] + 2.0 * (x[1] - x[0] * x[0] - 1.0) * (-2.0 * x[0]);
    g[1] += 2.0 * (x[1] - x[0] * x[0] - 1.0);
    return g;
  };
  return p;
}

Problem penalty1(int n) {
  Problem p;
  p.name = "penalty1";
  p.dim = n;
  p.x0.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p.x0[j] = j + 1.0;
  const double a = 1e-5;
  p.f = [n, a](const Vec& x) {
    double f = 0.0, s = 0.0;
    for (int j = 0; j < n; ++j) {
      f += a * (x[j] - 1.0) * (x[j] - 1.0);
      s += x[j] * x[j];
    }
    double r = s - 0.25;
    return f + r * r;
  };
  p.g = [n, a](const Vec& x) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += x[j] * x[j];
    double r = s - 0.25;
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) g[j] = 2.0 * a * (x[j] - 1.0) + 4.0 * r * x[j];
    return g;
  };
  return p;
}

Problem penalty2(int n) {
  Problem p;
  p.name = "penalty2";
  p.dim = n;
  p.x0 = ones(n, 0.5);
  const double a = 1e-5;
  p.f = [n, a](const Vec& x) {
    double f = 0.0;
    double r1 = x[0] - 0.2;
    f += r1 * r1;
    for (int i = 2; i <= n; ++i) {
      double yi = std::exp(i / 10.0) + std::exp((i - 1) / 10.0);
      double r = std::exp(x[i - 1] / 10.0) + std::exp(x[i - 2] / 10.0) - yi;
      f += a * r * r;
    }
    for (int i = n + 1; i < 2 * n; ++i) {
      double r = std::exp(x[i - n] / 10.0) - std::exp(-0.1);
      f += a * r * r;
    }
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += (n - j) * x[j] * x[j];
    double rl = s - 1.0;
    return f + rl * rl;
  };
  p.g = [n, a](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    g[0] += 2.0 * (x[0] - 0.2);
    for (int i = 2; i <= n; ++i) {
      double yi = std::exp(i / 10.0) + std::exp((i - 1) / 10.0);
      double ei = std::exp(x[i - 1] / 10.0);
      double ej = std::exp(x[i - 2] / 10.0);
      double r = ei + ej - yi;
      g[i - 1] += 2.0 * a * r * ei / 10.0;
      g[i - 2] += 2.0 * a * r * ej / 10.0;
    }
    for (int i = n + 1; i < 2 * n; ++i) {
      double ei = std::exp(x[i - n] / 10.0);
      double r = ei - std::exp(-0.1);
      g[i - n] += 2.0 * a * r * ei / 10.0;
    }
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += (n - j) * x[j] * x[j];
    double rl = s - 1.0;
    for (int j = 0; j < n; ++j) g[j] += 4.0 * rl * (n - j) * x[j];
    return g;
  };
  return p;
}

Problem vardim(int n) {
  Problem p;
  p.name = "vardim";
  p.dim = n;
  p.x0.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p.x0[j] = 1.0 - (j + 1.0) / n;
  p.f_lower_hint = 0.0;
  p.f = [n](const Vec& x) {
    double f = 0.0, s = 0.0;
    for (int j = 0; j < n; ++j) {
      double d = x[j] - 1.0;
      f += d * d;
      s += (j + 1.0) * d;
    }
    return f + s * s + s * s * s * s;
  };
  p.g = [n](const Vec& x) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += (j + 1.0) * (x[j] - 1.0);
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
      g[j] = 2.0 * (x[j] - 1.0) + 2.0 * s * (j + 1.0) + 4.0 * s * s * s * (j + 1.0);
    return g;
  };
  return p;
}

Problem broyden3d(int n) {
  Problem p;
  p.name = "broyden3d";
  p.dim = n;
  p.x0 = ones(n, -1.0);
  p.f_lower_hint = 0.0;
  auto res = [n](const Vec& x, int i) {
    double xm = i > 0 ? x[i - 1] : 0.0;
    double xp = i + 1 < n ? x[i + 1] : 0.0;
    return (3.0 - 2.0 * x[i]) * x[i] - xm - 2.0 * xp + 1.0;
  };
  p.f = [n, res](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = res(x, i);
      f += r * r;
    }
    return f;
  };
  p.g = [n, res](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      double r = res(x, i);
      g[i] += 2.0 * r * (3.0 - 4.0 * x[i]);
      if (i > 0) g[i - 1] += 2.0 * r * (-1.0);
      if (i + 1 < n) g[i + 1] += 2.0 * r * (-2.0);
    }
    return g;
  };
  return p;
}

Problem broydenbd(int n) {
  Problem p;
  p.name = "broydenbd";
  p.dim = n;
  p.x0 = ones(n, -1.0);
  p.f_lower_hint = 0.0;
  auto res = [n](const Vec& x, int i) {
    double s = 0.0;
    int lo = std::max(0, i - 5), hi = std::min(n - 1, i + 1);
    for (int j = lo; j <= hi; ++j)
      if (j != i) s += x[j] * (1.0 + x[j]);
    return x[i] * (2.0 + 5.0 * x[i] * x[i]) + 1.0 - s;
  };
  p.f = [n, res](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = res(x, i);
      f += r * r;
    }
    return f;
  };
  p.g = [n, res](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      double r = res(x, i);
      g[i] += 2.0 * r * (2.0 + 15.0 * x[i] * x[i]);
      int lo = std::max(0, i - 5), hi = std::min(n - 1, i + 1);
      for (int j = lo; j <= hi; ++j)
        if (j != i) g[j] += 2.0 * r * (-(1.0 + 2.0 * x[j]));
    }
    return g;
  };
  return p;
}

Problem arglina(int n) {
  Problem p;
  p.name = "arglina";
  p.dim = n;
  p.x0 = ones(n);
  const int m = 2 * n;
  p.f_lower_hint = static_cast<double>(m - n);
  p.f = [n, m](const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v;
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = x[i] - 2.0 * s / m - 1.0;
      f += r * r;
    }
    double r2 = -2.0 * s / m - 1.0;
    f += (m - n) * r2 * r2;
    return f;
  };
  p.g = [n, m](const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v;
    double rsum = 0.0;
    for (int i = 0; i < n; ++i) rsum += x[i] - 2.0 * s / m - 1.0;
    rsum += (m - n) * (-2.0 * s / m - 1.0);
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
      g[j] = 2.0 * ((x[j] - 2.0 * s / m - 1.0) - 2.0 / m * rsum);
    return g;
  };
  return p;
}

Problem arglinb(int n) {
  Problem p;
  p.name = "arglinb";
  p.dim = n;
  p.x0 = ones(n);
  const int m = 2 * n;
  p.f_lower_hint = m * (m - 1.0) / (2.0 * (2.0 * m + 1.0));
  p.f = [n, m](const Vec& x) {
    double t = 0.0;
    for (int j = 0; j < n; ++j) t += (j + 1.0) * x[j];
    double f = 0.0;
    for (int i = 1; i <= m; ++i) {
      double r = i * t - 1.0;
      f += r * r;
    }
    return f;
  };
  p.g = [n, m](const Vec& x) {
    double t = 0.0;
    for (int j = 0; j < n; ++j) t += (j + 1.0) * x[j];
    double acc = 0.0;
    for (int i = 1; i <= m; ++i) acc += (i * t - 1.0) * i;
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) g[j] = 2.0 * acc * (j + 1.0);
    return g;
  };
  return p;
}

Problem arglinc(int n) {
  Problem p;
  p.name = "arglinc";
  p.dim = n;
  p.x0 = ones(n);
  const int m = 2 * n;
  p.f_lower_hint = (m * m + 3.0 * m - 6.0) / (2.0 * (2.0 * m - 3.0));
  p.f = [n, m](const Vec& x) {
    double u = 0.0;
    for (int j = 2; j <= n - 1; ++j) u += j * x[j - 1];
    double f = 2.0;  // r_1 = r_m = -1
    for (int i = 2; i <= m - 1; ++i) {
      double r = (i - 1.0) * u - 1.0;
      f += r * r;
    }
    return f;
  };
  p.g = [n, m](const Vec& x) {
    double u = 0.0;
    for (int j = 2; j <= n - 1; ++j) u += j * x[j - 1];
    double acc = 0.0;
    for (int i = 2; i <= m - 1; ++i) acc += ((i - 1.0) * u - 1.0) * (i - 1.0);
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 2; j <= n - 1; ++j) g[j - 1] = 2.0 * acc * j;
    return g;
  };
  return p;
}

Problem chebyqad(int n) {
  Problem p;
  p.name = "chebyqad";
  p.dim = n;
  p.x0.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p.x0[j] = (j + 1.0) / (n + 1.0);
  if (n == 10) p.f_lower_hint = 6.50395e-3;
  // Shifted Chebyshev polynomials on [0,1] by recurrence; integrals of T_i
  // over [0,1] are 0 for odd i and -1/(i^2-1) for even i.
  auto tvals = [n](double xj, std::vector<double>& t, std::vector<double>& d) {
    double u = 2.0 * xj - 1.0;
    t.assign(static_cast<std::size_t>(n) + 1, 0.0);
    d.assign(static_cast<std::size_t>(n) + 1, 0.0);
    t[0] = 1.0;
    d[0] = 0.0;
    if (n >= 1) {
      t[1] = u;
      d[1] = 2.0;
    }
    for (int k = 2; k <= n; ++k) {
      t[k] = 2.0 * u * t[k - 1] - t[k - 2];
      d[k] = 4.0 * t[k - 1] + 2.0 * u * d[k - 1] - d[k - 2];
    }
  };
  p.f = [n, tvals](const Vec& x) {
    std::vector<double> sum(static_cast<std::size_t>(n) + 1, 0.0), t, d;
    for (int j = 0; j < n; ++j) {
      tvals(x[j], t, d);
      for (int i = 1; i <= n; ++i) sum[i] += t[i];
    }
    double f = 0.0;
    for (int i = 1; i <= n; ++i) {
      double integ = (i % 2 == 0) ? -1.0 / (i * i - 1.0) : 0.0;
      double r = sum[i] / n - integ;
      f += r * r;
    }
    return f;
  };
  p.g = [n, tvals](const Vec& x) {
    std::vector<double> sum(static_cast<std::size_t>(n) + 1, 0.0), t, d;
    std::vector<std::vector<double>> dall(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      tvals(x[j], t, d);
      for (int i = 1; i <= n; ++i) sum[i] += t[i];
      dall[j] = d;
    }
    std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i) {
      double integ = (i % 2 == 0) ? -1.0 / (i * i - 1.0) : 0.0;
      r[i] = sum[i] / n - integ;
    }
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 1; i <= n; ++i) g[j] += 2.0 * r[i] * dall[j][i] / n;
    return g;
  };
  return p;
}

Problem morebv(int n) {
  Problem p;
  p.name = "morebv";
  p.dim = n;
  const double h = 1.0 / (n + 1.0);
  p.x0.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double t = (j + 1.0) * h;
    p.x0[j] = t * (t - 1.0);
  }
  p.f_lower_hint = 0.0;
  auto res = [n, h](const Vec& x, int i) {
    double xm = i > 0 ? x[i - 1] : 0.0;
    double xp = i + 1 < n ? x[i + 1] : 0.0;
    double t = (i + 1.0) * h;
    double c = x[i] + t + 1.0;
    return 2.0 * x[i] - xm - xp + h * h * c * c * c / 2.0;
  };
  p.f = [n, res](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = res(x, i);
      f += r * r;
    }
    return f;
  };
  p.g = [n, h, res](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      double r = res(x, i);
      double t = (i + 1.0) * h;
      double c = x[i] + t + 1.0;
      g[i] += 2.0 * r * (2.0 + 1.5 * h * h * c * c);
      if (i > 0) g[i - 1] += 2.0 * r * (-1.0);
      if (i + 1 < n) g[i + 1] += 2.0 * r * (-1.0);
    }
    return g;
  };
  return p;
}

Problem biggs6() {
  Problem p;
  p.name = "biggs6";
  p.dim = 6;
  p.x0 = {1.0, 2.0, 1.0, 1.0, 1.0, 1.0};
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 13; ++i) {
      double t = 0.1 * i;
      double y = std::exp(-t) - 5.0 * std::exp(-10.0 * t) + 3.0 * std::exp(-4.0 * t);
      double r = x[2] * std::exp(-t * x[0]) - x[3] * std::exp(-t * x[1]) +
                 x[5] * std::exp(-t * x[4]) - y;
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(6, 0.0);
    for (int i = 1; i <= 13; ++i) {
      double t = 0.1 * i;
      double y = std::exp(-t) - 5.0 * std::exp(-10.0 * t) + 3.0 * std::exp(-4.0 * t);
      double e1 = std::exp(-t * x[0]);
      double e2 = std::exp(-t * x[1]);
      double e3 = std::exp(-t * x[4]);
      double r = x[2] * e1 - x[3] * e2 + x[5] * e3 - y;
      g[0] += 2.0 * r * (-t * x[2] * e1);
      g[1] += 2.0 * r * (t * x[3] * e2);
      g[2] += 2.0 * r * e1;
      g[3] += 2.0 * r * (-e2);
      g[4] += 2.0 * r * (-t * x[5] * e3);
      g[5] += 2.0 * r * e3;
    }
    return g;
  };
  return p;
}

Problem osbornea() {
  Problem p;
  p.name = "osbornea";
  p.dim = 5;
  p.x0 = {0.5, 1.5, 1.0, 0.01, 0.02};
  p.f_lower_hint = 5.46489e-5;
  static const double y[33] = {
      0.844, 0.908, 0.932, 0.936, 0.925, 0.908, 0.881, 0.850, 0.818, 0.784, 0.751,
      0.718, 0.685, 0.658, 0.628, 0.603, 0.580, 0.558, 0.538, 0.522, 0.506, 0.490,
      0.478, 0.467, 0.457, 0.448, 0.438, 0.431, 0.424, 0.420, 0.414, 0.411, 0.406};
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < 33; ++i) {
      double t = 10.0 * i;
      double r = y[i] - (x[0] + x[1] * std::exp(-t * x[3]) + x[2] * std::exp(-t * x[4]));
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(5, 0.0);
    for (int i = 0; i < 33; ++i) {
      double t = 10.0 * i;
      double e1 = std::exp(-t * x[3]);
      double e2 = std::exp(-t * x[4]);
      double r = y[i] - (x[0] + x[1] * e1 + x[2] * e2);
      g[0] += 2.0 * r * (-1.0);
      g[1] += 2.0 * r * (-e1);
      g[2] += 2.0 * r * (-e2);
      g[3] += 2.0 * r * (x[1] * t * e1);
      g[4] += 2.0 * r * (x[2] * t * e2);
    }
    return g;
  };
  return p;
}

Problem osborneb() {
  Problem p;
  p.name = "osborneb";
  p.dim = 11;
  p.x0 = {1.3, 0.65, 0.65, 0.7, 0.6, 3.0, 5.0, 7.0, 2.0, 4.5, 5.5};
  p.f_lower_hint = 4.01377e-2;
  static const double y[65] = {
      1.366, 1.191, 1.112, 1.013, 0.991, 0.885, 0.831, 0.847, 0.786, 0.725, 0.746,
      0.679, 0.608, 0.655, 0.616, 0.606, 0.602, 0.626, 0.651, 0.724, 0.649, 0.649,
      0.694, 0.644, 0.624, 0.661, 0.612, 0.558, 0.533, 0.495, 0.500, 0.423, 0.395,
      0.375, 0.372, 0.391, 0.396, 0.405, 0.428, 0.429, 0.523, 0.562, 0.607, 0.653,
      0.672, 0.708, 0.633, 0.668, 0.645, 0.632, 0.591, 0.559, 0.597, 0.625, 0.739,
      0.710, 0.729, 0.720, 0.636, 0.581, 0.428, 0.292, 0.162, 0.098, 0.054};
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < 65; ++i) {
      double t = i / 10.0;
      double m = x[0] * std::exp(-t * x[4]) +
                 x[1] * std::exp(-(t - x[8]) * (t - x[8]) * x[5]) +
                 x[2] * std::exp(-(t - x[9]) * (t - x[9]) * x[6]) +
                 x[3] * std::exp(-(t - x[10]) * (t - x[10]) * x[7]);
      double r = y[i] - m;
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(11, 0.0);
    for (int i = 0; i < 65; ++i) {
      double t = i / 10.0;
      double e1 = std::exp(-t * x[4]);
      double d2 = t - x[8], d3 = t - x[9], d4 = t - x[10];
      double e2 = std::exp(-d2 * d2 * x[5]);
      double e3 = std::exp(-d3 * d3 * x[6]);
      double e4 = std::exp(-d4 * d4 * x[7]);
      double r = y[i] - (x[0] * e1 + x[1] * e2 + x[2] * e3 + x[3] * e4);
      g[0] += 2.0 * r * (-e1);
      g[1] += 2.0 * r * (-e2);
      g[2] += 2.0 * r * (-e3);
      g[3] += 2.0 * r * (-e4);
      g[4] += 2.0 * r * (x[0] * t * e1);
      g[5] += 2.0 * r * (x[1] * d2 * d2 * e2);
      g[6] += 2.0 * r * (x[2] * d3 * d3 * e3);
      g[7] += 2.0 * r * (x[3] * d4 * d4 * e4);
      g[8] += 2.0 * r * (-x[1] * 2.0 * d2 * x[5] * e2);
      g[9] += 2.0 * r * (-x[2] * 2.0 * d3 * x[6] * e3);
      g[10] += 2.0 * r * (-x[3] * 2.0 * d4 * x[7] * e4);
    }
    return g;
  };
  return p;
}

Problem meyer3() {
  Problem p;
  p.name = "meyer3";
  p.dim = 3;
  p.x0 = {0.02, 4000.0, 250.0};
  p.f_lower_hint = 87.9458;
  p.fd_check_tol = 1e-4;
  static const double y[16] = {34780.0, 28610.0, 23650.0, 19630.0, 16370.0, 13720.0,
                               11540.0, 9744.0,  8261.0,  7030.0,  6005.0,  5147.0,
                               4427.0,  3820.0,  3307.0,  2872.0};
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 16; ++i) {
      double t = 45.0 + 5.0 * i;
      double r = x[0] * std::exp(x[1] / (t + x[2])) - y[i - 1];
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(3, 0.0);
    for (int i = 1; i <= 16; ++i) {
      double t = 45.0 + 5.0 * i;
      double d = t + x[2];
      double e = std::exp(x[1] / d);
      double r = x[0] * e - y[i - 1];
      g[0] += 2.0 * r * e;
      g[1] += 2.0 * r * (x[0] * e / d);
      g[2] += 2.0 * r * (-x[0] * e * x[1] / (d * d));
    }
    return g;
  };
  return p;
}

Problem jensmp() {
  Problem p;
  p.name = "jensmp";
  p.dim = 2;
  p.x0 = {0.3, 0.4};
  p.f_lower_hint = 124.362;
  p.f = [](const Vec& x) {
    double f = 0.0;
    for (int i = 1; i <= 10; ++i) {
      double r = 2.0 + 2.0 * i - (std::exp(i * x[0]) + std::exp(i * x[1]));
      f += r * r;
    }
    return f;
  };
  p.g = [](const Vec& x) {
    Vec g(2, 0.0);
    for (int i = 1; i <= 10; ++i) {
      double e1 = std::exp(i * x[0]);
      double e2 = std::exp(i * x[1]);
      double r = 2.0 + 2.0 * i - (e1 + e2);
      g[0] += 2.0 * r * (-i * e1);
      g[1] += 2.0 * r * (-i * e2);
    }
    return g;
  };
  return p;
}

Problem brownal(int n) {
  Problem p;
  p.name = "brownal";
  p.dim = n;
  p.x0 = ones(n, 0.5);
  p.f_lower_hint = 0.0;
  p.f = [n](const Vec& x) {
    double s = 0.0, prod = 1.0;
    for (double v : x) {
      s += v;
      prod *= v;
    }
    double f = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      double r = x[i] + s - (n + 1.0);
      f += r * r;
    }
    double rn = prod - 1.0;
    return f + rn * rn;
  };
  p.g = [n](const Vec& x) {
    double s = 0.0, prod = 1.0;
    for (double v : x) {
      s += v;
      prod *= v;
    }
    double rsum = 0.0;
    for (int i = 0; i + 1 < n; ++i) rsum += x[i] + s - (n + 1.0);
    double rn = prod - 1.0;
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
      double rj = (j + 1 < n) ? x[j] + s - (n + 1.0) : 0.0;
      double pj = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != j) pj *= x[k];
      g[j] = 2.0 * (rj + rsum) + 2.0 * rn * pj;
    }
    return g;
  };
  return p;
}

Problem engval1(int n) {
  Problem p;
  p.name = "engval1";
  p.dim = n;
  p.x0 = ones(n, 2.0);
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      double q = x[i] * x[i] + x[i + 1] * x[i + 1];
      f += q * q - 4.0 * x[i] + 3.0;
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
      double q = x[i] * x[i] + x[i + 1] * x[i + 1];
      g[i] += 4.0 * q * x[i] - 4.0;
      g[i + 1] += 4.0 * q * x[i + 1];
    }
    return g;
  };
  return p;
}

// Three active coordinates; catalogued at dimension 10 with the rest inactive.
Problem engval2(int n) {
  Problem p;
  p.name = "engval2";
  p.dim = n;
  p.x0 = Vec(static_cast<std::size_t>(n), 0.0);
  p.x0[0] = 1.0;
  p.x0[1] = 2.0;
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double r1 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1.0;
    double r2 = x[0] * x[0] + x[1] * x[1] + (x[2] - 2.0) * (x[2] - 2.0) - 1.0;
    double r3 = x[0] + x[1] + x[2] - 1.0;
    double r4 = x[0] + x[1] - x[2] + 1.0;
    double w = 5.0 * x[2] - x[0] + 1.0;
    double r5 = x[0] * x[0] * x[0] + 3.0 * x[1] * x[1] + w * w - 36.0;
    return r1 * r1 + r2 * r2 + r3 * r3 + r4 * r4 + r5 * r5;
  };
  p.g = [n](const Vec& x) {
    double r1 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1.0;
    double r2 = x[0] * x[0] + x[1] * x[1] + (x[2] - 2.0) * (x[2] - 2.0) - 1.0;
    double r3 = x[0] + x[1] + x[2] - 1.0;
    double r4 = x[0] + x[1] - x[2] + 1.0;
    double w = 5.0 * x[2] - x[0] + 1.0;
    double r5 = x[0] * x[0] * x[0] + 3.0 * x[1] * x[1] + w * w - 36.0;
    Vec g(static_cast<std::size_t>(n), 0.0);
    g[0] = 2.0 * (r1 * 2.0 * x[0] + r2 * 2.0 * x[0] + r3 + r4 +
                  r5 * (3.0 * x[0] * x[0] - 2.0 * w));
    g[1] = 2.0 * (r1 * 2.0 * x[1] + r2 * 2.0 * x[1] + r3 + r4 + r5 * 6.0 * x[1]);
    g[2] = 2.0 * (r1 * 2.0 * x[2] + r2 * 2.0 * (x[2] - 2.0) + r3 - r4 + r5 * 10.0 * w);
    return g;
  };
  return p;
}

Problem cliff() {
  Problem p;
  p.name = "cliff";
  p.dim = 2;
  p.x0 = {0.0, -1.0};
  p.f_lower_hint = 0.199786613;
  p.f = [](const Vec& x) {
    double a = (x[0] - 3.0) / 100.0;
    return a * a - (x[0] - x[1]) + std::exp(20.0 * (x[0] - x[1]));
  };
  p.g = [](const Vec& x) {
    double e = std::exp(20.0 * (x[0] - x[1]));
    return Vec{2.0 * (x[0] - 3.0) / 1e4 - 1.0 + 20.0 * e, 1.0 - 20.0 * e};
  };
  return p;
}

Problem cube() {
  Problem p;
  p.name = "cube";
  p.dim = 2;
  p.x0 = {-1.2, 1.0};
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double a = x[1] - x[0] * x[0] * x[0];
    double b = 1.0 - x[0];
    return 100.0 * a * a + b * b;
  };
  p.g = [](const Vec& x) {
    double a = x[1] - x[0] * x[0] * x[0];
    return Vec{-600.0 * x[0] * x[0] * a - 2.0 * (1.0 - x[0]), 200.0 * a};
  };
  return p;
}

Problem sisser() {
  Problem p;
  p.name = "sisser";
  p.dim = 2;
  p.x0 = {1.0, 0.1};
  p.f_lower_hint = 0.0;
  p.f = [](const Vec& x) {
    double a = x[0] * x[0], b = x[1] * x[1];
    return 3.0 * a * a - 2.0 * a * b + 3.0 * b * b;
  };
  p.g = [](const Vec& x) {
    return Vec{12.0 * x[0] * x[0] * x[0] - 4.0 * x[0] * x[1] * x[1],
               -4.0 * x[0] * x[0] * x[1] + 12.0 * x[1] * x[1] * x[1]};
  };
  return p;
}

Problem woods(int n) {
  Problem p;
  p.name = "woods";
  p.dim = n;
  p.x0.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; j += 2) p.x0[j] = -3.0;
  for (int j = 1; j < n; j += 2) p.x0[j] = -1.0;
  p.f_lower_hint = 0.0;
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int b = 0; b + 3 < n; b += 4) {
      double x1 = x[b], x2 = x[b + 1], x3 = x[b + 2], x4 = x[b + 3];
      double a = x2 - x1 * x1, c = x4 - x3 * x3;
      f += 100.0 * a * a + (1.0 - x1) * (1.0 - x1) + 90.0 * c * c +
           (1.0 - x3) * (1.0 - x3) + 10.0 * (x2 + x4 - 2.0) * (x2 + x4 - 2.0) +
           0.1 * (x2 - x4) * (x2 - x4);
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int b = 0; b + 3 < n; b += 4) {
      double x1 = x[b], x2 = x[b + 1], x3 = x[b + 2], x4 = x[b + 3];
      double a = x2 - x1 * x1, c = x4 - x3 * x3;
      g[b] = -400.0 * x1 * a - 2.0 * (1.0 - x1);
      g[b + 1] = 200.0 * a + 20.0 * (x2 + x4 - 2.0) + 0.2 * (x2 - x4);
      g[b + 2] = -360.0 * x3 * c - 2.0 * (1.0 - x3);
      g[b + 3] = 180.0 * c + 20.0 * (x2 + x4 - 2.0) - 0.2 * (x2 - x4);
    }
    return g;
  };
  return p;
}

Problem tridia(int n) {
  Problem p;
  p.name = "tridia";
  p.dim = n;
  p.x0 = ones(n);
  p.f_lower_hint = 0.0;
  p.f = [n](const Vec& x) {
    double f = (x[0] - 1.0) * (x[0] - 1.0);
    for (int i = 2; i <= n; ++i) {
      double r = 2.0 * x[i - 1] - x[i - 2];
      f += i * r * r;
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    g[0] = 2.0 * (x[0] - 1.0);
    for (int i = 2; i <= n; ++i) {
      double r = 2.0 * x[i - 1] - x[i - 2];
      g[i - 1] += 4.0 * i * r;
      g[i - 2] += -2.0 * i * r;
    }
    return g;
  };
  return p;
}

Problem dqrtic(int n) {
  Problem p;
  p.name = "dqrtic";
  p.dim = n;
  p.x0 = ones(n, 2.0);
  p.f_lower_hint = 0.0;
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = x[i] - (i + 1.0);
      f += d * d * d * d;
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      double d = x[i] - (i + 1.0);
      g[i] = 4.0 * d * d * d;
    }
    return g;
  };
  return p;
}

Problem dixmaan(const std::string& name, int n, double alpha, double beta,
                double gamma, double delta, int k1, int k2, int k3, int k4) {
  Problem p;
  p.name = name;
  p.dim = n;
  p.x0 = ones(n, 2.0);
  p.f_lower_hint = 1.0;
  const int m = n / 3;
  auto cpow = [n](int i, int k) {  // (i/n)^k with 1-based i
    double c = 1.0;
    for (int q = 0; q < k; ++q) c *= static_cast<double>(i) / n;
    return c;
  };
  p.f = [=](const Vec& x) {
    double f = 1.0;
    for (int i = 1; i <= n; ++i) f += alpha * x[i - 1] * x[i - 1] * cpow(i, k1);
    for (int i = 1; i <= n - 1; ++i) {
      double w = x[i] + x[i] * x[i];
      f += beta * x[i - 1] * x[i - 1] * w * w * cpow(i, k2);
    }
    for (int i = 1; i <= 2 * m; ++i) {
      double z = x[i + m - 1];
      f += gamma * x[i - 1] * x[i - 1] * z * z * z * z * cpow(i, k3);
    }
    for (int i = 1; i <= m; ++i) f += delta * x[i - 1] * x[i + 2 * m - 1] * cpow(i, k4);
    return f;
  };
  p.g = [=](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i <= n; ++i) g[i - 1] += 2.0 * alpha * x[i - 1] * cpow(i, k1);
    for (int i = 1; i <= n - 1; ++i) {
      double w = x[i] + x[i] * x[i];
      double c = beta * cpow(i, k2);
      g[i - 1] += 2.0 * c * x[i - 1] * w * w;
      g[i] += c * x[i - 1] * x[i - 1] * 2.0 * w * (1.0 + 2.0 * x[i]);
    }
    for (int i = 1; i <= 2 * m; ++i) {
      double z = x[i + m - 1];
      double c = gamma * cpow(i, k3);
      g[i - 1] += 2.0 * c * x[i - 1] * z * z * z * z;
      g[i + m - 1] += 4.0 * c * x[i - 1] * x[i - 1] * z * z * z;
    }
    for (int i = 1; i <= m; ++i) {
      double c = delta * cpow(i, k4);
      g[i - 1] += c * x[i + 2 * m - 1];
      g[i + 2 * m - 1] += c * x[i - 1];
    }
    return g;
  };
  return p;
}

Problem edensch(int n) {
  Problem p;
  p.name = "edensch";
  p.dim = n;
  p.x0 = Vec(static_cast<std::size_t>(n), 0.0);
  p.f = [n](const Vec& x) {
    double f = 16.0;
    for (int i = 0; i + 1 < n; ++i) {
      double a = x[i] - 2.0;
      double b = x[i] * x[i + 1] - 2.0 * x[i + 1];
      double c = x[i + 1] + 1.0;
      f += a * a * a * a + b * b + c * c;
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
      double a = x[i] - 2.0;
      double b = x[i + 1] * (x[i] - 2.0);
      g[i] += 4.0 * a * a * a + 2.0 * b * x[i + 1];
      g[i + 1] += 2.0 * b * (x[i] - 2.0) + 2.0 * (x[i + 1] + 1.0);
    }
    return g;
  };
  return p;
}

Problem cosine(int n) {
  Problem p;
  p.name = "cosine";
  p.dim = n;
  p.x0 = ones(n);
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i + 1 < n; ++i) f += std::cos(x[i] * x[i] - 0.5 * x[i + 1]);
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
      double s = std::sin(x[i] * x[i] - 0.5 * x[i + 1]);
      g[i] += -s * 2.0 * x[i];
      g[i + 1] += s * 0.5;
    }
    return g;
  };
  return p;
}

Problem arwhead(int n) {
  Problem p;
  p.name = "arwhead";
  p.dim = n;
  p.x0 = ones(n);
  p.f_lower_hint = 0.0;
  p.f = [n](const Vec& x) {
    double f = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      double q = x[i] * x[i] + x[n - 1] * x[n - 1];
      f += q * q - 4.0 * x[i] + 3.0;
    }
    return f;
  };
  p.g = [n](const Vec& x) {
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
      double q = x[i] * x[i] + x[n - 1] * x[n - 1];
      g[i] += 4.0 * q * x[i] - 4.0;
      g[n - 1] += 4.0 * q * x[n - 1];
    }
    return g;
  };
  return p;
}

std::vector<Problem> build_catalog() {
  std::vector<Problem> c;
  c.push_back(rosenbr());
  c.push_back(beale());
  c.push_back(helix());
  c.push_back(powellsg());
  c.push_back(powellbs());
  c.push_back(brownbs());
  c.push_back(brownden());
  c.push_back(bard());
  c.push_back(gulf());
  c.push_back(kowosb());
  c.push_back(box3d());
  c.push_back(freuroth(4));
  c.push_back(watson(12));
  c.push_back(penalty1(10));
  c.push_back(penalty2(10));
  c.push_back(vardim(10));
  c.push_back(broyden3d(10));
  c.push_back(broydenbd(10));
  c.push_back(arglina(10));
  c.push_back(arglinb(10));
  c.push_back(arglinc(10));
  c.push_back(chebyqad(10));
  c.push_back(morebv(12));
  c.push_back(biggs6());
  c.push_back(osbornea());
  c.push_back(osborneb());
  c.push_back(meyer3());
  c.push_back(jensmp());
  c.push_back(brownal(10));
  c.push_back(engval1(10));
  c.push_back(engval2(10));
  c.push_back(cliff());
  c.push_back(cube());
  c.push_back(sisser());
  c.push_back(woods(12));
  c.push_back(tridia(10));
  c.push_back(dqrtic(10));
  c.push_back(dixmaan("dixmaana", 12, 1.0, 0.0, 0.125, 0.125, 0, 0, 0, 0));
  c.push_back(dixmaan("dixmaanj", 12, 1.0, 0.0625, 0.0625, 0.0625, 2, 0, 0, 2));
  c.push_back(edensch(5));
  c.push_back(cosine(2));
  c.push_back(arwhead(10));
  return c;
}

}  // namespace

double exact_f(const Problem& p, const Vec& x) {
  if (static_cast<int>(x.size()) != p.dim)
    throw std::invalid_argument("exact_f: dimension mismatch for " + p.name);
  return p.f(x);
}

Vec exact_g(const Problem& p, const Vec& x) {
  if (static_cast<int>(x.size()) != p.dim)
    throw std::invalid_argument("exact_g: dimension mismatch for " + p.name);
  return p.g(x);
}

const std::vector<Problem>& catalog() {
  static const std::vector<Problem> c = build_catalog();
  return c;
}

const Problem* find_problem(const std::string& name) {
  for (const Problem& p : catalog())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace trda
