#pragma once

#include <cstddef>
#include <vector>

#include "hfid/numkit.hpp"

namespace hfid::series {

struct SeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;  // proven majorant of the omitted remainder
};

// sum_{n>=1} z^n / (n^a C(kn, n))
struct BinomFamilyParams {
  int k;  // 2, 3 or 4
  int a;  // 1 or 2
  double z;
};

/// Radius of convergence k^k / (k-1)^(k-1).
double family_radius(int k);

/// Terms are advanced by the ratio t_{n+1}/t_n, never through C(kn, n)
/// itself; the tail bound is geometric with the supremum of the remaining
/// ratios. Stops at the first n whose tail bound is <= abs_tol / 2.
/// DomainError if |z| >= radius, ConvergenceError if max_terms runs out.
SeriesValue sum_binom_family(const BinomFamilyParams& p,
                             const numkit::PrecisionConfig& cfg);

/// First `count` terms t_1..t_count of the family, by the same recurrence.
std::vector<double> binom_family_terms(const BinomFamilyParams& p,
                                       std::size_t count);

// sum_{n>=start} 16^n / (D_n (2n+1)^odd_exp C(2n,n)^2) with
// D_n = (2n+3)^shifted_exp, or D_n = n^2 when n_squared is set (shifted_exp
// is then ignored).
struct CentralSquaredParams {
  int shifted_exp;
  int odd_exp;
  int start;  // 0 or 1
  bool n_squared = false;
};

/// Polynomially decaying; the tail bound is the integral comparison
/// sum_{n>N} t_n <= C N^(1-d) / (d-1) from t_n <= C n^-d, where
/// 16^n / C(2n,n)^2 <= pi (n + 1/2) supplies C = pi / 2^(exponent sum).
SeriesValue sum_central_squared(const CentralSquaredParams& p,
                                const numkit::PrecisionConfig& cfg);

std::vector<double> central_squared_terms(const CentralSquaredParams& p,
                                          std::size_t count);

/// sum_{n>=1} (1 - 1/C(3n,n)) / (n^2 2^n)
SeriesValue sum_e6(const numkit::PrecisionConfig& cfg);

/// sum_{n>=1} 2^n / ((n+1) n^2 C(2n,n))
SeriesValue sum_e7(const numkit::PrecisionConfig& cfg);

/// (1/2) sum_{n>=0} 4^(n+1) x^(2n+2) / ((2n+2)(2n+1) C(2n,n)) = arcsin^2 x.
/// The tail bound is the smaller of the geometric bound (ratio < x^2) and
/// the p-series bound sqrt(pi/N), so x = +-1 still certifies.
SeriesValue arcsin_sq_series(double x, const numkit::PrecisionConfig& cfg);

/// Termwise integral of the arcsin^2 series, one extra 1/(2n+3).
SeriesValue eq3_series(double x, const numkit::PrecisionConfig& cfg);

/// Same with (2n+3)^2.
SeriesValue eq4_series(double x, const numkit::PrecisionConfig& cfg);

}  // namespace hfid::series
