#include "hfid/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace hfid::roots {
namespace {

using numkit::kPi;

// Monic real polynomial, coefficients from the leading term down.
using Poly = std::vector<double>;

Complex horner(const Poly& c, Complex x) {
  Complex r = c.front();
  for (std::size_t i = 1; i < c.size(); ++i) r = r * x + c[i];
  return r;
}

// p and p' together.
std::pair<Complex, Complex> horner_with_derivative(const Poly& c, Complex x) {
  Complex p = c.front();
  Complex dp = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp};
}

double cauchy_bound(const Poly& c) {
  double m = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) m = std::max(m, std::fabs(c[i]));
  return 1.0 + m;
}

Complex damped_newton(const Poly& c, Complex x) {
  auto [p, dp] = horner_with_derivative(c, x);
  for (int iter = 0; iter < 200 && std::abs(p) > 0.0; ++iter) {
    if (dp == Complex(0.0, 0.0)) break;
    const Complex step = p / dp;
    double lambda = 1.0;
    Complex trial = x - step;
    Complex tp = horner(c, trial);
    while (std::abs(tp) >= std::abs(p) && lambda > 1e-4) {
      lambda *= 0.5;
      trial = x - lambda * step;
      tp = horner(c, trial);
    }
    if (std::abs(tp) >= std::abs(p)) break;
    const double moved = std::abs(trial - x);
    x = trial;
    std::tie(p, dp) = horner_with_derivative(c, x);
    if (moved <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

// Seeds on two circles inside the Cauchy bound, fixed angles.
Complex find_one_root(const Poly& c) {
  const double bound = cauchy_bound(c);
  Complex best = 0.0;
  double best_residual = std::numeric_limits<double>::infinity();
  for (double radius : {0.5 * bound, 0.9 * bound}) {
    for (int j = 0; j < 8; ++j) {
      const double angle = (2.0 * j + 1.0) * kPi / 8.0;
      const Complex seed = std::polar(radius, angle);
      const Complex root = damped_newton(c, seed);
      const double r = std::abs(horner(c, root));
      if (r < best_residual) {
        best_residual = r;
        best = root;
      }
    }
  }
  return best;
}

// Synthetic division by (x - r), r real.
Poly deflate_linear(const Poly& c, double r) {
  Poly q(c.size() - 1);
  double carry = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    carry = carry * r + c[i];
    q[i] = carry;
  }
  return q;
}

// Division by x^2 + b x + e.
Poly deflate_quadratic(const Poly& c, double b, double e) {
  Poly q(c.size() - 2, 0.0);
  Poly rem(c);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = rem[i];
    rem[i + 1] -= b * q[i];
    rem[i + 2] -= e * q[i];
  }
  return q;
}

void solve_quadratic(double b, double e, std::vector<Complex>& out) {
  // x^2 + b x + e
  const double disc = b * b - 4.0 * e;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(s, b));
    if (q == 0.0) {
      out.emplace_back(0.0, 0.0);
      out.emplace_back(0.0, 0.0);
      return;
    }
    out.emplace_back(q, 0.0);
    out.emplace_back(e / q, 0.0);
  } else {
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    out.emplace_back(re, -im);
    out.emplace_back(re, im);
  }
}

void solve_real(const Poly& c, std::vector<Complex>& out) {
  const std::size_t degree = c.size() - 1;
  if (degree == 1) {
    out.emplace_back(-c[1], 0.0);
    return;
  }
  if (degree == 2) {
    solve_quadratic(c[1], c[2], out);
    return;
  }
  const Complex r = find_one_root(c);
  if (std::fabs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r))) {
    const double x = damped_newton(c, Complex(r.real(), 0.0)).real();
    out.emplace_back(x, 0.0);
    solve_real(deflate_linear(c, x), out);
  } else {
    out.push_back(r);
    out.push_back(std::conj(r));
    solve_real(deflate_quadratic(c, -2.0 * r.real(), std::norm(r)), out);
  }
}

void polish(const Poly& c, std::vector<Complex>& roots) {
  for (Complex& r : roots) {
    auto [p, dp] = horner_with_derivative(c, r);
    if (dp != Complex(0.0, 0.0)) {
      const Complex candidate = r - p / dp;
      if (std::abs(horner(c, candidate)) <= std::abs(p)) r = candidate;
    }
  }
}

// Real roots get Im = 0, complex ones are replaced by an exact (w, conj w).
void enforce_conjugacy(std::vector<Complex>& roots) {
  const double scale = 1e-9;
  std::vector<bool> done(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    const double tol = scale * std::max(1.0, std::abs(roots[i]));
    if (std::fabs(roots[i].imag()) <= tol) {
      roots[i].imag(0.0);
      done[i] = true;
      continue;
    }
    std::size_t partner = roots.size();
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || done[j]) continue;
      const double d = std::abs(roots[j] - std::conj(roots[i]));
      if (d < closest) {
        closest = d;
        partner = j;
      }
    }
    if (partner == roots.size()) continue;
    const Complex w = 0.5 * (roots[i] + std::conj(roots[partner]));
    roots[i] = w;
    roots[partner] = std::conj(w);
    done[i] = done[partner] = true;
  }
}

RootSet solve(int degree, double z) {
  if (z == 0.0 || !std::isfinite(z)) {
    throw DegenerateError("polynomial is constant for z = 0");
  }
  const double critical = degree == 3 ? 27.0 / 4.0 : 256.0 / 27.0;
  if (std::fabs(z - critical) <= 1e-12 * critical) {
    throw DegenerateError("z = " + std::to_string(z) +
                          " is a discriminant zero (repeated root)");
  }
  Poly monic(degree + 1, 0.0);
  monic[0] = 1.0;
  monic[1] = -1.0;
  monic[degree] = 1.0 / z;

  RootSet set;
  set.degree = degree;
  set.z = z;
  solve_real(monic, set.roots);
  polish(monic, set.roots);
  enforce_conjugacy(set.roots);
  std::sort(set.roots.begin(), set.roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (Complex r : set.roots) {
    set.residual = std::max(set.residual, std::abs(evaluate(degree, z, r)));
  }
  return set;
}

}  // namespace

Complex evaluate(int degree, double z, Complex x) {
  if (degree == 3) return 1.0 + z * x * x * (x - 1.0);
  if (degree == 4) return 1.0 + z * x * x * x * (x - 1.0);
  throw DomainError("evaluate: degree must be 3 or 4");
}

RootSet solve_cubic_pz(double z) { return solve(3, z); }

RootSet solve_quartic_qz(double z) { return solve(4, z); }

double thai_z(double m) {
  if (!(m > 0.0)) throw DomainError("thai_z requires m > 0");
  return 1.0 / (m * m + m * m * m);
}

double quartic_z(double m) {
  if (!(m > 0.0)) throw DomainError("quartic_z requires m > 0");
  return -1.0 / (m * m * m + m * m * m * m);
}

}  // namespace hfid::roots
