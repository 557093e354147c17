#pragma once

#include "hfid/numkit.hpp"

namespace hfid::polylog {

struct DilogValue {
  Complex value;
  double est_error;  // truncation bound of the series that produced value
};

/// Principal branch of the dilogarithm, cut on [1, inf).
///
/// Evaluation cascade:
///   |z| > 1              Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
///   Re z > 1/2, |z| <= 1 Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
///   |z| <= 1/2           sum z^n / n^2
///   otherwise            sum B_n u^(n+1)/(n+1)!, u = -log(1-z)
/// Each transformation is applied at most once, so every input reaches one
/// of the two series after at most two steps.
///
/// Inputs with Re z > 1 and |Im z| <= 1e-14 are rejected with DomainError;
/// z = 1 itself returns pi^2/6. ConvergenceError if cfg.max_terms is too
/// small for the series to reach abs_tol.
DilogValue li2(Complex z, const numkit::PrecisionConfig& cfg);

/// |Li2(1/w) + Li2(1/(1-w)) + log^2((w-1)/w)/2|. Throws DomainError for
/// w in {0, 1} or when 1/w or 1/(1-w) lies on the cut.
double reflection_zagier_residual(Complex w,
                                  const numkit::PrecisionConfig& cfg);

/// |Li2(z) + Li2(1-z) - (pi^2/6 - log(z) log(1-z))|. Throws DomainError for
/// z in {0, 1} or when z or 1-z lies on the cut.
double reflection_euler_residual(Complex z,
                                 const numkit::PrecisionConfig& cfg);

}  // namespace hfid::polylog
