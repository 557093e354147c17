#include "hfid/closedform.hpp"

#include <cmath>
#include <string>

#include "hfid/polylog.hpp"
#include "hfid/roots.hpp"

namespace hfid::closedform {
namespace {

using numkit::kConstants;
using numkit::kPi;
using numkit::PrecisionConfig;

ClosedFormValue sum_log_squares(const roots::RootSet& set, double scale) {
  numkit::CompensatedComplexSum acc;
  for (Complex xi : set.roots) {
    const Complex w = 1.0 - 1.0 / xi;
    if (w.imag() == 0.0 && w.real() <= 0.0) {
      throw BranchError("1 - 1/xi = " + std::to_string(w.real()) +
                        " lies on the log branch cut");
    }
    const Complex l = numkit::principal_log(w);
    acc.add(l * l);
  }
  const Complex total = scale * acc.value();
  return {total.real(), std::fabs(total.imag())};
}

void check_unit_interval(double x, const char* name) {
  if (!std::isfinite(x) || std::fabs(x) > 1.0) {
    throw DomainError(std::string(name) + ": |x| must not exceed 1");
  }
}

}  // namespace

ClosedFormValue s3_closed(double z) {
  return sum_log_squares(roots::solve_cubic_pz(z), -1.0 / 3.0);
}

ClosedFormValue s4_closed(double z) {
  if (std::fabs(z) >= 256.0 / 27.0) {
    throw DomainError("s4_closed: |z| must be below 256/27");
  }
  return sum_log_squares(roots::solve_quartic_qz(z), kQuarticCoefficient);
}

double thai_rhs(double m) {
  if (!(m >= 0.5)) throw DomainError("thai_rhs requires m >= 1/2");
  const double log_term = std::log1p(1.0 / m);
  if (m == 0.5) return kConstants.zeta2 - 0.5 * log_term * log_term;
  const double q = 2.0 * m - 1.0;
  const double at = std::atan(std::sqrt((3.0 * m - 1.0) / ((m + 1.0) * q * q)));
  return 2.0 / 3.0 * at * at - 0.5 * log_term * log_term;
}

double thm1_rhs() {
  return 13.5 * (7.0 * kConstants.zeta3 +
                 (3.0 - 2.0 * kConstants.catalan_G) * kPi - 12.0);
}

double thm2_rhs() { return thai_rhs(1.0); }

double thm3_rhs() {
  const double at = std::atan(std::sqrt(15.0) / 9.0);
  const double l = std::log(1.5);
  return 2.0 / 3.0 * at * at - 0.5 * l * l;
}

double thm5_rhs() { return kPi / 10.0 - std::log(2.0) / 5.0; }

double e8_rhs() { return thai_rhs(0.5); }

ClosedFormValue usinu_antiderivative(double u, const PrecisionConfig& cfg) {
  if (!(u > 0.0 && u < kPi)) {
    throw DomainError("usinu_antiderivative requires 0 < u < pi");
  }
  const Complex s = std::polar(1.0, u);
  const Complex logs =
      numkit::principal_log(1.0 - s) - numkit::principal_log(1.0 + s);
  const Complex dilogs =
      polylog::li2(-s, cfg).value - polylog::li2(s, cfg).value;
  const Complex limit_at_zero(0.0, -kPi * kPi / 4.0);
  const Complex f = u * logs + Complex(0.0, 1.0) * dilogs - limit_at_zero;
  return {f.real(), std::fabs(f.imag())};
}

double wallis_rhs(unsigned n) {
  double g = 1.0;  // 4^k / C(2k, k)
  for (unsigned k = 0; k < n; ++k) g *= 2.0 * (k + 1.0) / (2.0 * k + 1.0);
  const double dn = n;
  return g * (2.0 * dn + 2.0) / ((2.0 * dn + 3.0) * (2.0 * dn + 1.0));
}

double eq2_lhs(double x) {
  check_unit_interval(x, "eq2_lhs");
  const double a = std::asin(x);
  return a * a;
}

double eq3_lhs(double x) {
  check_unit_interval(x, "eq3_lhs");
  const double a = std::asin(x);
  return -2.0 * x + 2.0 * std::sqrt(1.0 - x * x) * a + x * a * a;
}

quadrature::QuadratureResult eq4_lhs(double x, const PrecisionConfig& cfg) {
  check_unit_interval(x, "eq4_lhs");
  const double a = std::asin(x);
  const PrecisionConfig inner = cfg.with_tolerance(
      std::max(0.5 * cfg.abs_tol, PrecisionConfig::kMinTolerance));
  quadrature::QuadratureResult r =
      quadrature::integrate(quadrature::u_cos2_over_sin, 0.0, a, inner);
  r.value = -4.0 * x + 2.0 * std::sqrt(1.0 - x * x) * a + x * a * a +
            2.0 * r.value;
  r.err_estimate *= 2.0;
  return r;
}

}  // namespace hfid::closedform
