#include "hfid/hyper.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hfid::hyper {
namespace {

using numkit::PrecisionConfig;
using series::SeriesValue;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return v;
}

bool nonpositive_integer(double b) { return b <= 0.0 && b == std::floor(b); }

double sum_values(const std::vector<Rational>& v) {
  double s = 0.0;
  for (const Rational& r : v) s += r.value();
  return s;
}

double max_abs(const std::vector<Rational>& v) {
  double m = 0.0;
  for (const Rational& r : v) m = std::max(m, std::fabs(r.value()));
  return m;
}

struct Prepared {
  std::vector<double> upper;
  std::vector<double> lower;  // includes the 1 from n!
  double z;
  bool unit;
  double excess;  // sum(lower) - sum(upper), n! excluded
  double settle;  // index beyond which every factor is monotone
};

Prepared prepare(const PfqSpec& spec) {
  Prepared p;
  for (const Rational& r : spec.upper) p.upper.push_back(r.value());
  p.lower.push_back(1.0);
  for (const Rational& r : spec.lower) {
    if (nonpositive_integer(r.value())) {
      throw DomainError("pfq: lower parameter " + std::to_string(r.value()) +
                        " is a nonpositive integer");
    }
    p.lower.push_back(r.value());
  }
  p.z = spec.z;
  p.excess = sum_values(spec.lower) - sum_values(spec.upper);
  p.settle = std::max(max_abs(spec.upper), max_abs(spec.lower)) + 1.0;
  const double az = std::fabs(spec.z);
  const bool terminating = std::any_of(
      p.upper.begin(), p.upper.end(), [](double a) { return nonpositive_integer(a); });
  if (!std::isfinite(spec.z)) throw DomainError("pfq: z must be finite");
  if (spec.z == 0.0 || terminating) {
    p.unit = false;
    return p;
  }
  if (p.upper.size() > p.lower.size()) {
    throw DomainError("pfq: p > q + 1 diverges for z != 0");
  }
  if (az > 1.0 && p.upper.size() == p.lower.size()) {
    throw DomainError("pfq: |z| > 1 is outside the disk of convergence");
  }
  p.unit = az == 1.0 && p.upper.size() == p.lower.size();
  if (p.unit && !(p.excess > 0.0)) {
    throw DomainError("pfq: |z| = 1 requires sum(lower) - sum(upper) > 0");
  }
  return p;
}

double ratio(const Prepared& p, double n) {
  double r = p.z;
  for (double a : p.upper) r *= a + n;
  for (double b : p.lower) r /= b + n;
  return r;
}

// sup_{m >= n} |t_{m+1}/t_m|, valid once n exceeds p.settle.
double ratio_sup(const Prepared& p, double n) {
  if (n < p.settle) return kInf;
  double r = std::fabs(p.z);
  const std::size_t paired = std::min(p.upper.size(), p.lower.size());
  for (std::size_t i = 0; i < paired; ++i) {
    r *= std::max(std::fabs((p.upper[i] + n) / (p.lower[i] + n)), 1.0);
  }
  for (std::size_t j = paired; j < p.lower.size(); ++j) r /= p.lower[j] + n;
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Rational r{0, 1};
  if (slash == std::string_view::npos) {
    r.num = parse_int(text);
  } else {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  }
  if (r.den == 0) throw DomainError("rational with zero denominator");
  return r;
}

SeriesValue pfq(const PfqSpec& spec, const PrecisionConfig& cfg) {
  cfg.validate();
  const Prepared p = prepare(spec);
  numkit::CompensatedSum acc;
  double t = 1.0;
  double best = kInf;
  for (std::size_t used = 1; used <= cfg.max_terms; ++used) {
    const double n = static_cast<double>(used - 1);
    acc.add(t);
    const double next = t * ratio(p, n);
    double tail;
    if (next == 0.0) {
      tail = 0.0;  // terminated (z = 0 or a nonpositive-integer upper parameter)
    } else if (p.unit) {
      // t_m ~ C m^-(s+1) with C <= 2 t_N N^(s+1); integral comparison
      tail = n >= p.settle ? 2.0 * std::fabs(t) * n / p.excess : kInf;
    } else {
      const double r = ratio_sup(p, n + 1.0);
      tail = r < 1.0 ? std::fabs(next) / (1.0 - r) : kInf;
    }
    best = tail;
    if (tail <= 0.5 * cfg.abs_tol) return {acc.value(), used, tail};
    t = next;
  }
  throw ConvergenceError("pfq: max_terms reached before the tail bound met "
                         "abs_tol",
                         best, cfg.max_terms);
}

std::vector<double> pfq_terms(const PfqSpec& spec, std::size_t count) {
  const Prepared p = prepare(spec);
  std::vector<double> out;
  out.reserve(count);
  double t = 1.0;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(t);
    t *= ratio(p, static_cast<double>(i));
  }
  return out;
}

PfqSpec mapping_spec(MappingFamily family, double z) {
  switch (family) {
    case MappingFamily::map3F2:
      return {{{1}, {1}, {3, 2}}, {{4, 3}, {5, 3}}, 4.0 * z / 27.0};
    case MappingFamily::map4F3:
      return {{{1}, {1}, {1}, {3, 2}}, {{4, 3}, {5, 3}, {2}}, 4.0 * z / 27.0};
    case MappingFamily::map5F4:
      return {{{1}, {1}, {1}, {4, 3}, {5, 3}},
              {{5, 4}, {3, 2}, {7, 4}, {2}},
              27.0 * z / 256.0};
  }
  throw DomainError("unknown mapping family");
}

series::BinomFamilyParams mapping_family(MappingFamily family, double z) {
  switch (family) {
    case MappingFamily::map3F2: return {3, 1, z};
    case MappingFamily::map4F3: return {3, 2, z};
    case MappingFamily::map5F4: return {4, 2, z};
  }
  throw DomainError("unknown mapping family");
}

MappingSides mapping_sides(MappingFamily family, double z,
                           const PrecisionConfig& cfg) {
  const series::BinomFamilyParams fam = mapping_family(family, z);
  MappingSides sides;
  sides.binomial_sum = series::sum_binom_family(fam, cfg);
  sides.prefactor = z / fam.k;
  // the pFq side is scaled by |z|/k, so it can run at a looser tolerance
  const double scale = std::max(std::fabs(sides.prefactor), 1e-300);
  const PrecisionConfig hcfg = cfg.with_tolerance(
      std::max(std::min(cfg.abs_tol / scale, 1e-2),
               PrecisionConfig::kMinTolerance));
  sides.hypergeometric = pfq(mapping_spec(family, z), hcfg);
  return sides;
}

double mapping_residual(MappingFamily family, double z,
                        const PrecisionConfig& cfg) {
  const MappingSides s = mapping_sides(family, z, cfg);
  return std::fabs(s.binomial_sum.value - s.mapped());
}

}  // namespace hfid::hyper
