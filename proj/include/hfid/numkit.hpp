#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "hfid/errors.hpp"

namespace hfid {

using Complex = std::complex<double>;

namespace numkit {

/// Tolerance and budget shared by every series, dilogarithm and quadrature
/// routine. Construct through make() so the invariants are checked once.
struct PrecisionConfig {
  // Smallest tolerance the double-precision kernels can certify.
  static constexpr double kMinTolerance = 0x1p-48;

  double abs_tol = 1e-12;
  std::size_t max_terms = 200000;
  std::size_t quad_budget = 500000;

  static PrecisionConfig make(double abs_tol, std::size_t max_terms,
                              std::size_t quad_budget);
  PrecisionConfig with_tolerance(double tol) const;
  void validate() const;
};

// 30-digit literals; checked against their defining series in the tests.
struct Constants {
  double pi;
  double catalan_G;
  double zeta3;
  double zeta2;
};

inline constexpr Constants kConstants{
    3.14159265358979323846264338328,
    0.915965594177219015054603514932,
    1.20205690315959428539973816151,
    1.64493406684822643647241516665,
};

inline constexpr double kPi = kConstants.pi;

/// Principal logarithm, cut on the negative real axis, Im in (-pi, pi].
/// Throws DomainError for z = 0.
Complex principal_log(Complex z);

/// Neumaier (Kahan-Babuska) running sum.
class CompensatedSum {
 public:
  void add(double term) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(Complex term) noexcept {
    re_.add(term.real());
    im_.add(term.imag());
  }
  Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

double compensated_sum(std::span<const double> terms);

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(N, k). Throws DomainError for k > N.
BigInt binomial_exact(unsigned N, unsigned k);

struct CatalanCheck {
  double residual;    // |G - partial sum|
  double tail_bound;  // first omitted term of the alternating series
  std::size_t terms;
};

/// Sums the alternating series for Catalan's constant until its remainder
/// bound drops to abs_tol or max_terms is reached, whichever comes first.
CatalanCheck validate_catalan(const PrecisionConfig& cfg);

}  // namespace numkit
}  // namespace hfid
