#include "hfid/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace hfid::roots {
namespace {

using hfid::Complex;

struct Symmetric {
  Complex e1, e2, e3, e4;
};

Symmetric elementary(const std::vector<Complex>& r) {
  // coefficients of prod (x - r_i), built up one factor at a time
  std::vector<Complex> c{1.0};
  for (const Complex& x : r) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= x * c[i];
    }
    c = next;
  }
  Symmetric s{-c[1], c[2], -c[3], c.size() > 4 ? c[4] : Complex{}};
  return s;
}

void expect_vieta(const RootSet& rs, double tol = 1e-10) {
  const Symmetric s = elementary(rs.roots);
  const double z = rs.z;
  EXPECT_LE(std::abs(s.e1 - 1.0), tol) << "z = " << z;
  EXPECT_LE(std::abs(s.e2), tol) << "z = " << z;
  if (rs.degree == 3) {
    EXPECT_LE(std::abs(s.e3 + 1.0 / z), tol * std::max(1.0, 1.0 / std::fabs(z))) << "z = " << z;
  } else {
    EXPECT_LE(std::abs(s.e3), tol) << "z = " << z;
    EXPECT_LE(std::abs(s.e4 - 1.0 / z), tol * std::max(1.0, 1.0 / std::fabs(z))) << "z = " << z;
  }
}

void expect_invariants(const RootSet& rs) {
  ASSERT_EQ(rs.roots.size(), static_cast<std::size_t>(rs.degree));
  EXPECT_LE(rs.residual, 1e-11 * (1.0 + std::fabs(rs.z)));
  for (const Complex& r : rs.roots) {
    EXPECT_LE(std::abs(evaluate(rs.degree, rs.z, r)), rs.residual);
    // conjugates are exact, not merely close
    if (r.imag() != 0.0) {
      const auto hit = std::find(rs.roots.begin(), rs.roots.end(), std::conj(r));
      EXPECT_NE(hit, rs.roots.end());
    }
  }
  for (std::size_t i = 1; i < rs.roots.size(); ++i) {
    const Complex a = rs.roots[i - 1];
    const Complex b = rs.roots[i];
    EXPECT_TRUE(a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag()));
  }
  expect_vieta(rs);
}

void expect_root(const Complex& got, const Complex& want, double tol = 1e-12) {
  EXPECT_LE(std::abs(got - want), tol) << got << " vs " << want;
}

TEST(Cubic, OneHalf) {
  const RootSet rs = solve_cubic_pz(0.5);
  expect_invariants(rs);
  expect_root(rs.roots[0], {-1.0, 0.0});
  expect_root(rs.roots[1], {1.0, -1.0});
  expect_root(rs.roots[2], {1.0, 1.0});
  EXPECT_EQ(rs.roots[0].imag(), 0.0);
}

TEST(Cubic, OneTwelfth) {
  const RootSet rs = solve_cubic_pz(1.0 / 12.0);
  expect_invariants(rs);
  const double s15 = std::sqrt(15.0);
  expect_root(rs.roots[0], {-2.0, 0.0});
  expect_root(rs.roots[1], {1.5, -s15 / 2});
  expect_root(rs.roots[2], {1.5, s15 / 2});
}

TEST(Cubic, ThaiParameterThree) {
  const RootSet rs = solve_cubic_pz(thai_z(3.0));
  expect_invariants(rs);
  expect_root(rs.roots[0], {-3.0, 0.0}, 1e-10);
}

TEST(Cubic, RealRootCountAcrossDiscriminant) {
  // three real roots past 27/4, one real root otherwise
  for (double z : {7.0, 100.0}) {
    const RootSet rs = solve_cubic_pz(z);
    expect_invariants(rs);
    for (const Complex& r : rs.roots) EXPECT_EQ(r.imag(), 0.0) << z;
  }
  for (double z : {-1.0, -50.0, 1.0, 6.0}) {
    const RootSet rs = solve_cubic_pz(z);
    expect_invariants(rs);
    const auto real = std::count_if(rs.roots.begin(), rs.roots.end(),
                                    [](const Complex& r) { return r.imag() == 0.0; });
    EXPECT_EQ(real, 1) << z;
  }
}

TEST(Cubic, Degenerate) {
  EXPECT_THROW(solve_cubic_pz(0.0), DegenerateError);
  EXPECT_THROW(solve_cubic_pz(27.0 / 4.0), DegenerateError);
  EXPECT_THROW(solve_cubic_pz(27.0 / 4.0 * (1 + 1e-13)), DegenerateError);
  EXPECT_NO_THROW(solve_cubic_pz(6.7));
}

TEST(Cubic, RandomArgumentsInsideRadius) {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> dist(0.0, 27.0 / 4.0);
  for (int i = 0; i < 100; ++i) {
    double z = dist(gen);
    if (z == 0.0) z = 1e-3;
    const RootSet rs = solve_cubic_pz(z);
    expect_invariants(rs);
  }
}

TEST(Cubic, ContinuityAwayFromDiscriminant) {
  for (double z : {0.3, 0.5, 1.0 / 12.0, 1.7, 4.0, 6.0, -2.0, thai_z(0.6), thai_z(10.0)}) {
    const RootSet a = solve_cubic_pz(z);
    const RootSet b = solve_cubic_pz(z + 1e-8);
    for (int i = 0; i < 3; ++i) {
      EXPECT_LE(std::fabs(a.roots[i].real() - b.roots[i].real()), 1e-4) << z;
      EXPECT_LE(std::fabs(a.roots[i].imag() - b.roots[i].imag()), 1e-4) << z;
    }
  }
}

TEST(Cubic, ThaiSweepHasRootMinusM) {
  for (double m : {0.6, 1.0, 2.0, 5.0}) {
    const RootSet rs = solve_cubic_pz(thai_z(m));
    expect_invariants(rs);
    int hits = 0;
    for (const Complex& r : rs.roots) hits += std::abs(r + m) <= 1e-10;
    EXPECT_EQ(hits, 1) << m;
    std::vector<Complex> others;
    for (const Complex& r : rs.roots)
      if (std::abs(r + m) > 1e-10) others.push_back(r);
    ASSERT_EQ(others.size(), 2u);
    EXPECT_GT(std::fabs(others[0].imag()), 0.0);
    EXPECT_EQ(others[0], std::conj(others[1]));
  }
}

TEST(Quartic, MinusOneHalfContainsMinusOne) {
  const RootSet rs = solve_quartic_qz(quartic_z(1.0));
  expect_invariants(rs);
  EXPECT_DOUBLE_EQ(rs.z, -0.5);
  expect_root(rs.roots[0], {-1.0, 0.0});
}

TEST(Quartic, OneHalfVieta) {
  const RootSet rs = solve_quartic_qz(0.5);
  expect_invariants(rs);
  const Symmetric s = elementary(rs.roots);
  EXPECT_NEAR(s.e4.real(), 2.0, 1e-10);
  EXPECT_NEAR(s.e1.real(), 1.0, 1e-10);
  // x^4 - x^3 + 2 has no real roots
  for (const Complex& r : rs.roots) EXPECT_NE(r.imag(), 0.0);
}

TEST(Quartic, Degenerate) {
  EXPECT_THROW(solve_quartic_qz(0.0), DegenerateError);
  EXPECT_THROW(solve_quartic_qz(256.0 / 27.0), DegenerateError);
  EXPECT_NO_THROW(solve_quartic_qz(-256.0 / 27.0));
}

TEST(Quartic, QuarticSweep) {
  for (double m : {0.5, 1.0, 2.0, 3.0}) {
    const RootSet rs = solve_quartic_qz(quartic_z(m));
    expect_invariants(rs);
    expect_root(rs.roots[0], {-m, 0.0}, 1e-10);
  }
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> dist(-256.0 / 27.0, 256.0 / 27.0);
  for (int i = 0; i < 100; ++i) {
    const double z = dist(gen);
    if (std::fabs(z) < 1e-6) continue;
    expect_invariants(solve_quartic_qz(z));
  }
}

// Durand-Kerner on a monic complex polynomial, used only as an oracle.
std::vector<Complex> durand_kerner(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  auto eval = [&](Complex x) {
    Complex v = c[0];
    for (std::size_t i = 1; i <= n; ++i) v = v * x + c[i];
    return v;
  };
  std::vector<Complex> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i));
  for (int it = 0; it < 500; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex d = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) d *= r[i] - r[j];
      r[i] -= eval(r[i]) / d;
    }
  }
  return r;
}

TEST(Quartic, DeflationSelfConsistency) {
  for (double z : {0.5, -0.5, 1.0, 3.0, -7.0, 9.0}) {
    const RootSet rs = solve_quartic_qz(z);
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      // synthetic division of x^4 - x^3 + 1/z by (x - root_k)
      const Complex r = rs.roots[k];
      const Complex b0 = 1.0;
      const Complex b1 = -1.0 + r * b0;
      const Complex b2 = r * b1;
      const Complex b3 = r * b2;
      const std::vector<Complex> cubic = durand_kerner({b0, b1, b2, b3});
      for (std::size_t j = 0; j < rs.roots.size(); ++j) {
        if (j == k) continue;
        double best = INFINITY;
        for (const Complex& c : cubic) best = std::min(best, std::abs(c - rs.roots[j]));
        EXPECT_LE(best, 1e-9) << "z = " << z << " k = " << k << " j = " << j;
      }
    }
  }
}

TEST(Parameterizations, Values) {
  EXPECT_DOUBLE_EQ(thai_z(1.0), 0.5);
  EXPECT_DOUBLE_EQ(thai_z(2.0), 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(quartic_z(1.0), -0.5);
  EXPECT_THROW(thai_z(0.0), DomainError);
  EXPECT_THROW(thai_z(-1.0), DomainError);
  EXPECT_THROW(quartic_z(0.0), DomainError);
  // -m really is a root
  for (double m : {0.25, 0.6, 1.3, 7.0}) {
    EXPECT_LE(std::abs(evaluate(3, thai_z(m), -m)), 1e-14);
    EXPECT_LE(std::abs(evaluate(4, quartic_z(m), -m)), 1e-14);
  }
}

}  // namespace
}  // namespace hfid::roots
