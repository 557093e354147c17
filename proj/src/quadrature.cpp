#include "hfid/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace hfid::quadrature {
namespace {

using numkit::kPi;
using numkit::PrecisionConfig;

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kRuleCost = 15;
constexpr double kMaxZ = 27.0 / 4.0;

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

void check_radius(double z, const char* name) {
  if (!std::isfinite(z) || std::fabs(z) >= kMaxZ) {
    throw DomainError(std::string(name) + ": |z| must be below 27/4");
  }
}

}  // namespace

double u_cos2_over_sin(double u) {
  if (std::fabs(u) < 1e-8) return 1.0;
  const double c = std::cos(u);
  return u * c * c / std::sin(u);
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const PrecisionConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: endpoints must be finite");
  }
  if (a == b) return {0.0, 0.0, 0, true};
  if (cfg.quad_budget < kRuleCost) {
    return {0.0, std::numeric_limits<double>::infinity(), 0, false};
  }

  std::vector<Segment> segments{gauss_kronrod(f, a, b)};
  std::size_t evaluations = kRuleCost;
  auto total_error = [&] {
    numkit::CompensatedSum e;
    for (const Segment& s : segments) e.add(s.error);
    return e.value();
  };
  double error = segments.front().error;
  bool converged = error <= cfg.abs_tol;
  while (!converged && evaluations + 2 * kRuleCost <= cfg.quad_budget) {
    // Largest error first; ties go to the lowest index.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].error > segments[worst].error) worst = i;
    }
    const Segment s = segments[worst];
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) break;  // interval exhausted in doubles
    segments[worst] = gauss_kronrod(f, s.a, mid);
    segments.push_back(gauss_kronrod(f, mid, s.b));
    evaluations += 2 * kRuleCost;
    error = total_error();
    converged = error <= cfg.abs_tol;
  }

  numkit::CompensatedSum value;
  for (const Segment& s : segments) value.add(s.value);
  return {value.value(), error, evaluations, converged};
}

QuadratureResult eq5_double_integral(const PrecisionConfig& cfg) {
  cfg.validate();
  const PrecisionConfig inner_base = cfg.with_tolerance(
      std::max(cfg.abs_tol / kPi, PrecisionConfig::kMinTolerance));
  std::size_t used = 0;
  double worst_inner = 0.0;
  bool inner_ok = true;

  const Integrand inner = [&](double theta) {
    PrecisionConfig c = inner_base;
    if (used >= cfg.quad_budget) {
      inner_ok = false;
      return 0.0;
    }
    c.quad_budget = cfg.quad_budget - used;
    const QuadratureResult r = integrate(u_cos2_over_sin, 0.0, theta, c);
    used += r.evaluations;
    worst_inner = std::max(worst_inner, r.err_estimate);
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  const QuadratureResult outer =
      integrate(inner, 0.0, 0.5 * kPi, cfg.with_tolerance(
          std::max(0.5 * cfg.abs_tol, PrecisionConfig::kMinTolerance)));
  const double err = outer.err_estimate + 0.5 * kPi * worst_inner;
  return {outer.value, err, used,
          outer.converged && inner_ok && err <= cfg.abs_tol};
}

QuadratureResult f32_integral(double z, const PrecisionConfig& cfg) {
  check_radius(z, "f32_integral");
  const PrecisionConfig inner = cfg.with_tolerance(
      std::max(1.5 * cfg.abs_tol, PrecisionConfig::kMinTolerance));
  QuadratureResult r = integrate(
      [z](double x) { return x * z / (1.0 - z * (1.0 - x) * x * x); }, 0.0,
      1.0, inner);
  r.value *= 2.0 / 3.0;
  r.err_estimate *= 2.0 / 3.0;
  return r;
}

QuadratureResult log_integral_repr(double z, const PrecisionConfig& cfg) {
  check_radius(z, "log_integral_repr");
  const PrecisionConfig inner = cfg.with_tolerance(
      std::max(1.5 * cfg.abs_tol, PrecisionConfig::kMinTolerance));
  // log p_z(x) = log1p(-z x^2 (1-x)), log p_z(1-x) = log1p(-z x (1-x)^2)
  const Integrand f = [z](double x) {
    if (x < 1e-12) return z;
    const double y = 1.0 - x;
    return -(std::log1p(-z * x * x * y) + std::log1p(-z * x * y * y)) / x;
  };
  QuadratureResult r = integrate(f, 0.0, 1.0, inner);
  r.value *= 2.0 / 3.0;
  r.err_estimate *= 2.0 / 3.0;
  return r;
}

}  // namespace hfid::quadrature
