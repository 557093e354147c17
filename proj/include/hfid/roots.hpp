#pragma once

#include <vector>

#include "hfid/numkit.hpp"

namespace hfid::roots {

// Roots of p_z(x) = 1 - z x^2 + z x^3 (degree 3) or
// q_z(x) = 1 - z x^3 + z x^4 (degree 4).
struct RootSet {
  int degree = 0;
  std::vector<Complex> roots;  // ascending real part, then imaginary part
  double residual = 0.0;       // max |p_z(root)|
  double z = 0.0;
};

/// p_z at x (degree 3) or q_z at x (degree 4).
Complex evaluate(int degree, double z, Complex x);

/// Damped Newton for one root, real deflation, closed-form quadratic, then
/// one Newton polish per root on the undeflated polynomial. Conjugate pairs
/// are made exact and real roots get a zero imaginary part.
/// DegenerateError for z = 0 or z at a discriminant zero (z = 27/4).
RootSet solve_cubic_pz(double z);

/// As above for q_z; DegenerateError for z = 0 or z = 256/27.
RootSet solve_quartic_qz(double z);

/// 1/(m^2 + m^3): the z for which -m is a root of p_z. DomainError if m <= 0.
double thai_z(double m);

/// -1/(m^3 + m^4): the z for which -m is a root of q_z. DomainError if m <= 0.
double quartic_z(double m);

}  // namespace hfid::roots
