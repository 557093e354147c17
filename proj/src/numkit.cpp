#include "hfid/numkit.hpp"

#include <cmath>
#include <string>

namespace hfid::numkit {

PrecisionConfig PrecisionConfig::make(double abs_tol, std::size_t max_terms,
                                      std::size_t quad_budget) {
  PrecisionConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.max_terms = max_terms;
  cfg.quad_budget = quad_budget;
  cfg.validate();
  return cfg;
}

PrecisionConfig PrecisionConfig::with_tolerance(double tol) const {
  return make(tol, max_terms, quad_budget);
}

void PrecisionConfig::validate() const {
  if (!(abs_tol >= kMinTolerance) || !std::isfinite(abs_tol)) {
    throw DomainError("abs_tol " + std::to_string(abs_tol) +
                      " is below the certifiable floor 2^-48");
  }
  if (max_terms == 0) throw DomainError("max_terms must be positive");
  if (quad_budget == 0) throw DomainError("quad_budget must be positive");
}

Complex principal_log(Complex z) {
  if (z == Complex(0.0, 0.0)) throw DomainError("log(0) is undefined");
  Complex result = std::log(z);
  // std::log returns -pi for arguments just below the cut (signed zero).
  if (result.imag() <= -kPi) result.imag(kPi);
  return result;
}

void CompensatedSum::add(double term) noexcept {
  const double t = sum_ + term;
  if (std::fabs(sum_) >= std::fabs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> terms) {
  CompensatedSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

BigInt binomial_exact(unsigned N, unsigned k) {
  if (k > N) {
    throw DomainError("binomial_exact: k = " + std::to_string(k) +
                      " exceeds N = " + std::to_string(N));
  }
  if (k > N - k) k = N - k;
  BigInt result = 1;
  // Each partial product C(N - k + i, i) is an integer, so the division is exact.
  for (unsigned i = 1; i <= k; ++i) {
    result *= N - k + i;
    result /= i;
  }
  return result;
}

CatalanCheck validate_catalan(const PrecisionConfig& cfg) {
  cfg.validate();
  CompensatedSum acc;
  std::size_t n = 0;
  double next = 1.0;  // 1/(2n+1)^2 for the first omitted n
  while (n < cfg.max_terms && next > cfg.abs_tol) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    acc.add(sign * next);
    ++n;
    const double odd = 2.0 * static_cast<double>(n) + 1.0;
    next = 1.0 / (odd * odd);
  }
  return {std::fabs(kConstants.catalan_G - acc.value()), next, n};
}

}  // namespace hfid::numkit
