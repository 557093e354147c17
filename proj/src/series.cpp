#include "hfid/series.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hfid::series {
namespace {

using numkit::kPi;
using numkit::PrecisionConfig;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Step {
  double term;
  double tail;  // majorant of |sum of all later terms|
};

template <class Generator>
SeriesValue accumulate(Generator&& next, const PrecisionConfig& cfg,
                       const char* name) {
  cfg.validate();
  numkit::CompensatedSum acc;
  double best = kInf;
  for (std::size_t used = 1; used <= cfg.max_terms; ++used) {
    const Step s = next();
    acc.add(s.term);
    best = s.tail;
    if (s.tail <= 0.5 * cfg.abs_tol) return {acc.value(), used, s.tail};
  }
  throw ConvergenceError(std::string(name) + ": max_terms reached before the "
                         "tail bound met abs_tol",
                         best, cfg.max_terms);
}

void check_family(const BinomFamilyParams& p) {
  if (p.k < 2 || p.k > 4) throw DomainError("binomial family needs k in {2,3,4}");
  if (p.a < 1 || p.a > 2) throw DomainError("binomial family needs a in {1,2}");
  if (!std::isfinite(p.z) || std::fabs(p.z) >= family_radius(p.k)) {
    throw DomainError("binomial family: |z| must be below the radius " +
                      std::to_string(family_radius(p.k)));
  }
}

// (z^(n+1)/C(k(n+1),n+1)) / (z^n/C(kn,n))
double binom_ratio(int k, double z, double n) {
  double num = n + 1.0;
  for (int j = 1; j < k; ++j) num *= (k - 1) * n + j;
  double den = 1.0;
  for (int j = 1; j <= k; ++j) den *= k * n + j;
  return z * num / den;
}

double power_int(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Generates t_n of the binomial family for n = 1, 2, ...
class BinomTerms {
 public:
  explicit BinomTerms(const BinomFamilyParams& p)
      : p_(p), h_(p.z / p.k) {}

  double n() const { return n_; }
  double term() const { return h_ / power_int(n_, p_.a); }
  double ratio(double m) const {
    return binom_ratio(p_.k, p_.z, m) * power_int(m / (m + 1.0), p_.a);
  }
  void advance() {
    h_ *= binom_ratio(p_.k, p_.z, n_);
    n_ += 1.0;
  }

 private:
  BinomFamilyParams p_;
  double n_ = 1.0;
  double h_;  // z^n / C(kn, n)
};

// 16^n / C(2n,n)^2 for n = 0, 1, ...
class CentralTerms {
 public:
  explicit CentralTerms(const CentralSquaredParams& p) : p_(p) {}

  double n() const { return n_; }
  double term() const {
    const double odd = power_int(2.0 * n_ + 1.0, p_.odd_exp);
    const double other =
        p_.n_squared ? n_ * n_ : power_int(2.0 * n_ + 3.0, p_.shifted_exp);
    return g_ / (odd * other);
  }
  void advance() {
    const double r = (n_ + 1.0) / (2.0 * n_ + 1.0);
    g_ *= 4.0 * r * r;
    n_ += 1.0;
  }

 private:
  CentralSquaredParams p_;
  double n_ = 0.0;
  double g_ = 1.0;
};

struct CentralBound {
  double constant;  // C in t_n <= C n^-d
  int decay;        // d
};

CentralBound central_bound(const CentralSquaredParams& p) {
  if (p.start != 0 && p.start != 1) {
    throw DomainError("central-squared series: start must be 0 or 1");
  }
  if (p.odd_exp < 0 || p.shifted_exp < 0) {
    throw DomainError("central-squared series: exponents must be nonnegative");
  }
  if (p.n_squared) {
    if (p.start == 0) throw DomainError("n^2 variant must start at n = 1");
    if (p.odd_exp < 1) throw DomainError("n^2 variant needs odd_exp >= 1");
    // pi (n+1/2) / (n^2 (2n+1)^q) <= (pi/2^q) n^-(q+1)
    return {kPi / std::ldexp(1.0, p.odd_exp), p.odd_exp + 1};
  }
  const int d = p.shifted_exp + p.odd_exp - 1;
  if (d < 2 || p.shifted_exp < 1) {
    throw DomainError("central-squared series: terms must decay like n^-2 or faster");
  }
  // pi (n+1/2) / ((2n+3)^p (2n+1)^q) <= (pi/2^(p+q)) n^-(p+q-1)
  return {kPi / std::ldexp(1.0, p.shifted_exp + p.odd_exp), d};
}

void check_unit_interval(double x, const char* name) {
  if (!std::isfinite(x) || std::fabs(x) > 1.0) {
    throw DomainError(std::string(name) + ": |x| must not exceed 1");
  }
}

// Terms of the arcsin^2 series, with tail majorants after each index.
class ArcsinTerms {
 public:
  explicit ArcsinTerms(double x) : x2_(x * x), t_(x * x) {}

  double n() const { return n_; }
  double term() const { return t_; }
  // Majorant of sum_{m > n} t_m.
  double tail() const {
    const double next = t_ * x2_ * 2.0 * (n_ + 1.0) * (n_ + 1.0) /
                        ((n_ + 2.0) * (2.0 * n_ + 3.0));
    const double geometric = x2_ < 1.0 ? next / (1.0 - x2_) : kInf;
    // t_m <= (sqrt(pi)/2) m^-3/2 for m >= 1
    const double pseries = n_ >= 1.0 ? std::sqrt(kPi / n_) : kInf;
    return std::min(geometric, pseries);
  }
  void advance() {
    t_ *= x2_ * 2.0 * (n_ + 1.0) * (n_ + 1.0) / ((n_ + 2.0) * (2.0 * n_ + 3.0));
    n_ += 1.0;
  }

 private:
  double x2_;
  double t_;
  double n_ = 0.0;
};

SeriesValue integrated_arcsin(double x, int extra_power,
                              const PrecisionConfig& cfg, const char* name) {
  check_unit_interval(x, name);
  ArcsinTerms gen(x);
  const double ax = std::fabs(x);
  return accumulate(
      [&] {
        const double n = gen.n();
        const double shift = power_int(2.0 * n + 3.0, extra_power);
        const double later = power_int(2.0 * n + 5.0, extra_power);
        const Step s{gen.term() * x / shift, gen.tail() * ax / later};
        gen.advance();
        return s;
      },
      cfg, name);
}

}  // namespace

double family_radius(int k) {
  switch (k) {
    case 2: return 4.0;
    case 3: return 27.0 / 4.0;
    case 4: return 256.0 / 27.0;
    default: throw DomainError("binomial family needs k in {2,3,4}");
  }
}

SeriesValue sum_binom_family(const BinomFamilyParams& p,
                             const PrecisionConfig& cfg) {
  check_family(p);
  const double limit_ratio = std::fabs(p.z) / family_radius(p.k);
  BinomTerms gen(p);
  return accumulate(
      [&] {
        const double term = gen.term();
        gen.advance();
        // The ratio increases monotonically towards |z|/radius; the max
        // keeps the bound valid either way.
        const double r = std::max(std::fabs(gen.ratio(gen.n())), limit_ratio);
        const double tail =
            r < 1.0 ? std::fabs(gen.term()) / (1.0 - r) : kInf;
        return Step{term, tail};
      },
      cfg, "sum_binom_family");
}

std::vector<double> binom_family_terms(const BinomFamilyParams& p,
                                       std::size_t count) {
  check_family(p);
  std::vector<double> out;
  out.reserve(count);
  BinomTerms gen(p);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(gen.term());
    gen.advance();
  }
  return out;
}

SeriesValue sum_central_squared(const CentralSquaredParams& p,
                                const PrecisionConfig& cfg) {
  cfg.validate();
  const CentralBound bound = central_bound(p);
  const double dm1 = bound.decay - 1.0;
  auto tail_at = [&](double last) {
    return bound.constant * std::pow(last, -dm1) / dm1;
  };
  const double target = 0.5 * cfg.abs_tol;
  double last = std::ceil(std::pow(bound.constant / (dm1 * target), 1.0 / dm1));
  last = std::max(last, 1.0);
  while (last > 1.0 && tail_at(last - 1.0) <= target) last -= 1.0;
  while (tail_at(last) > target) last += 1.0;

  const double available = static_cast<double>(cfg.max_terms) + p.start - 1.0;
  if (last > available) {
    throw ConvergenceError("sum_central_squared: max_terms too small",
                           tail_at(std::max(available, 1.0)), cfg.max_terms);
  }

  CentralTerms gen(p);
  numkit::CompensatedSum acc;
  while (gen.n() < p.start) gen.advance();
  std::size_t used = 0;
  for (; gen.n() <= last; gen.advance(), ++used) acc.add(gen.term());
  return {acc.value(), used, tail_at(last)};
}

std::vector<double> central_squared_terms(const CentralSquaredParams& p,
                                          std::size_t count) {
  central_bound(p);
  CentralTerms gen(p);
  while (gen.n() < p.start) gen.advance();
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i, gen.advance()) {
    out.push_back(gen.term());
  }
  return out;
}

SeriesValue sum_e6(const PrecisionConfig& cfg) {
  double n = 1.0;
  double u = 0.5;             // 2^-n
  double v = 1.0 / 3.0;       // 1/C(3n, n)
  return accumulate(
      [&] {
        const double term = u / (n * n) * (1.0 - v);
        v *= (n + 1.0) * (2.0 * n + 1.0) * (2.0 * n + 2.0) /
             ((3.0 * n + 1.0) * (3.0 * n + 2.0) * (3.0 * n + 3.0));
        u *= 0.5;
        n += 1.0;
        // terms are majorized by 2^-m / m^2, ratio <= 1/2
        return Step{term, 2.0 * u / (n * n)};
      },
      cfg, "sum_e6");
}

SeriesValue sum_e7(const PrecisionConfig& cfg) {
  double n = 1.0;
  double t = 0.5;
  return accumulate(
      [&] {
        const double term = t;
        // t_{n+1}/t_n = n^2/((n+2)(2n+1)) < 1/2
        t *= n * n / ((n + 2.0) * (2.0 * n + 1.0));
        n += 1.0;
        return Step{term, 2.0 * t};
      },
      cfg, "sum_e7");
}

SeriesValue arcsin_sq_series(double x, const PrecisionConfig& cfg) {
  check_unit_interval(x, "arcsin_sq_series");
  ArcsinTerms gen(x);
  return accumulate(
      [&] {
        const Step s{gen.term(), gen.tail()};
        gen.advance();
        return s;
      },
      cfg, "arcsin_sq_series");
}

SeriesValue eq3_series(double x, const PrecisionConfig& cfg) {
  return integrated_arcsin(x, 1, cfg, "eq3_series");
}

SeriesValue eq4_series(double x, const PrecisionConfig& cfg) {
  return integrated_arcsin(x, 2, cfg, "eq4_series");
}

}  // namespace hfid::series
