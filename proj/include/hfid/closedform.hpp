#pragma once

#include "hfid/numkit.hpp"
#include "hfid/quadrature.hpp"

namespace hfid::closedform {

struct ClosedFormValue {
  double value = 0.0;
  double imag_leak = 0.0;  // |Im| discarded after summing conjugate terms
};

// Coefficient of sum log^2(1 - 1/xi) over the roots of q_z in the closed
// form of sum z^n/(n^2 C(4n,n)). Fixed by the direct-summation oracle.
inline constexpr double kQuarticCoefficient = -3.0 / 8.0;

/// -(1/3) sum over roots xi of p_z of log^2(1 - 1/xi) = sum z^n/(n^2 C(3n,n)).
/// BranchError if some 1 - 1/xi lies on the negative real axis.
ClosedFormValue s3_closed(double z);

/// kQuarticCoefficient * sum over roots of q_z of log^2(1 - 1/xi).
ClosedFormValue s4_closed(double z);

/// (2/3) arctan^2 sqrt((3m-1)/((m+1)(2m-1)^2)) - (1/2) log^2(1 + 1/m),
/// with the exact limit pi^2/6 - log^2(3)/2 at m = 1/2.
/// DomainError for m < 1/2.
double thai_rhs(double m);

double thm1_rhs();  // (27/2)(7 zeta(3) + (3 - 2G) pi - 12)
double thm2_rhs();  // pi^2/24 - log^2(2)/2
double thm3_rhs();  // (2/3) arctan^2(sqrt(15)/9) - log^2(3/2)/2
double thm5_rhs();  // pi/10 - log(2)/5
double e8_rhs();    // pi^2/6 - log^2(3)/2

/// int_0^u t/sin(t) dt for 0 < u < pi, assembled from
///   u (log(1 - e^{iu}) - log(1 + e^{iu})) + i (Li2(-e^{iu}) - Li2(e^{iu}))
/// minus its u -> 0+ limit, which is -i pi^2/4.
ClosedFormValue usinu_antiderivative(double u,
                                     const numkit::PrecisionConfig& cfg);

/// int_0^{pi/2} sin^(2n+3) x dx = 4^n (2n+2) / ((2n+3)(2n+1) C(2n,n))
double wallis_rhs(unsigned n);

double eq2_lhs(double x);  // arcsin^2 x
double eq3_lhs(double x);  // -2x + 2 sqrt(1-x^2) arcsin x + x arcsin^2 x

/// -4x + 2 sqrt(1-x^2) arcsin x + x arcsin^2 x + 2 int_0^{arcsin x} u cos^2 u / sin u du.
/// The quadrature error estimate is carried in the result.
quadrature::QuadratureResult eq4_lhs(double x,
                                     const numkit::PrecisionConfig& cfg);

}  // namespace hfid::closedform
