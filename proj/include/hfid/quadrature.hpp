#pragma once

#include <cstddef>
#include <functional>

#include "hfid/numkit.hpp"

namespace hfid::quadrature {

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. The interval with the
/// largest |K15 - G7| is bisected until the summed estimate is <= abs_tol.
/// Only interior nodes are sampled. When quad_budget runs out the best
/// estimate is returned with converged = false.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const numkit::PrecisionConfig& cfg);

/// int_0^{pi/2} int_0^theta u cos^2(u) / sin(u) du dtheta.
/// evaluations counts inner integrand calls against quad_budget.
QuadratureResult eq5_double_integral(const numkit::PrecisionConfig& cfg);

/// (2/3) int_0^1 x z / (1 - z (1-x) x^2) dx; DomainError for |z| >= 27/4.
QuadratureResult f32_integral(double z, const numkit::PrecisionConfig& cfg);

/// (2/3) int_0^1 (-log p_z(x) - log p_z(1-x)) / x dx with
/// p_z(x) = 1 - z x^2 + z x^3. DomainError unless |z| < 27/4.
QuadratureResult log_integral_repr(double z,
                                   const numkit::PrecisionConfig& cfg);

/// u cos^2(u) / sin(u), with the limit 1 inside |u| < 1e-8.
double u_cos2_over_sin(double u);

}  // namespace hfid::quadrature
