#include "hfid/polylog.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace hfid::polylog {
namespace {

using numkit::kConstants;
using numkit::kPi;
using numkit::PrecisionConfig;
using numkit::principal_log;

constexpr double kCutWidth = 1e-14;
constexpr std::size_t kBernoulliTerms = 30;

// c_k = B_{2k} / (2k+1)!, k = 1..kBernoulliTerms, from exact rationals.
const std::array<double, kBernoulliTerms + 1>& bernoulli_coefficients() {
  static const auto table = [] {
    using Rational = boost::multiprecision::cpp_rational;
    constexpr std::size_t kMax = 2 * kBernoulliTerms;
    std::array<Rational, kMax + 1> b{};
    b[0] = 1;
    for (std::size_t m = 1; m <= kMax; ++m) {
      Rational acc = 0;
      for (std::size_t j = 0; j < m; ++j) {
        acc += Rational(numkit::binomial_exact(static_cast<unsigned>(m + 1),
                                               static_cast<unsigned>(j))) *
               b[j];
      }
      b[m] = -acc / Rational(m + 1);
    }
    std::array<double, kBernoulliTerms + 1> c{};
    numkit::BigInt factorial = 1;  // (2k+1)!
    for (std::size_t k = 1; k <= kBernoulliTerms; ++k) {
      factorial *= (2 * k) * (2 * k + 1);
      c[k] = static_cast<double>(b[2 * k] / Rational(factorial));
    }
    return c;
  }();
  return table;
}

bool on_cut(Complex z) {
  return z.real() > 1.0 && std::fabs(z.imag()) <= kCutWidth;
}

DilogValue direct_series(Complex z, const PrecisionConfig& cfg) {
  const double r = std::abs(z);
  numkit::CompensatedComplexSum acc;
  Complex power = z;
  for (std::size_t n = 1; n <= cfg.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    acc.add(power / (dn * dn));
    power *= z;
    const double next = static_cast<double>(n + 1);
    const double tail = std::pow(r, next) / (next * next) / (1.0 - r);
    if (tail <= 0.5 * cfg.abs_tol) return {acc.value(), tail};
  }
  throw ConvergenceError("li2: power series budget exhausted",
                         std::pow(r, static_cast<double>(cfg.max_terms + 1)),
                         cfg.max_terms);
}

DilogValue bernoulli_series(Complex z, const PrecisionConfig& cfg) {
  const auto& c = bernoulli_coefficients();
  const Complex u = -principal_log(1.0 - z);
  const double au = std::abs(u);
  const double ratio = au / (2.0 * kPi);
  const double ratio2 = ratio * ratio;
  const Complex u2 = u * u;

  numkit::CompensatedComplexSum acc;
  acc.add(u);
  acc.add(-0.25 * u2);
  Complex power = u;  // u^(2k+1)
  // |B_2k|/(2k+1)! <= 2 zeta(2)/((2k+1)(2 pi)^2k)
  double ratio_pow = 1.0;
  const std::size_t limit = std::min(kBernoulliTerms, cfg.max_terms);
  for (std::size_t k = 1; k <= limit; ++k) {
    power *= u2;
    acc.add(c[k] * power);
    ratio_pow *= ratio2;
    const double tail = (kPi * kPi / 3.0) * au * ratio_pow * ratio2 /
                        ((2.0 * k + 3.0) * (1.0 - ratio2));
    if (tail <= 0.5 * cfg.abs_tol) return {acc.value(), tail};
  }
  throw ConvergenceError("li2: Bernoulli series budget exhausted",
                         (kPi * kPi / 3.0) * au * ratio_pow, limit);
}

// |z| <= 1 here.
DilogValue unit_disk(Complex z, const PrecisionConfig& cfg) {
  if (std::abs(z) <= 0.5) return direct_series(z, cfg);
  if (z.real() > 0.5) {
    const Complex w = 1.0 - z;
    const DilogValue reflected =
        std::abs(w) <= 0.5 ? direct_series(w, cfg) : bernoulli_series(w, cfg);
    const Complex value = kConstants.zeta2 -
                          principal_log(z) * principal_log(w) -
                          reflected.value;
    return {value, reflected.est_error};
  }
  return bernoulli_series(z, cfg);
}

}  // namespace

DilogValue li2(Complex z, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("li2: non-finite argument");
  }
  if (on_cut(z)) throw DomainError("li2: argument on the branch cut [1, inf)");
  if (z == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), 0.0};
  if (z == Complex(1.0, 0.0)) return {Complex(kConstants.zeta2, 0.0), 0.0};

  if (std::abs(z) > 1.0) {
    const DilogValue inner = unit_disk(1.0 / z, cfg);
    const Complex l = principal_log(-z);
    return {-kConstants.zeta2 - 0.5 * l * l - inner.value, inner.est_error};
  }
  return unit_disk(z, cfg);
}

double reflection_zagier_residual(Complex w, const PrecisionConfig& cfg) {
  if (w == Complex(0.0, 0.0) || w == Complex(1.0, 0.0)) {
    throw DomainError("reflection_zagier_residual: w must avoid 0 and 1");
  }
  const Complex lhs = li2(1.0 / w, cfg).value + li2(1.0 / (1.0 - w), cfg).value;
  const Complex l = principal_log((w - 1.0) / w);
  return std::abs(lhs + 0.5 * l * l);
}

double reflection_euler_residual(Complex z, const PrecisionConfig& cfg) {
  if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0)) {
    throw DomainError("reflection_euler_residual: z must avoid 0 and 1");
  }
  const Complex w = 1.0 - z;
  const Complex lhs = li2(z, cfg).value + li2(w, cfg).value;
  const Complex rhs = kConstants.zeta2 - principal_log(z) * principal_log(w);
  return std::abs(lhs - rhs);
}

}  // namespace hfid::polylog
