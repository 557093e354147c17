#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hfid/numkit.hpp"
#include "hfid/series.hpp"

namespace hfid::hyper {

struct Rational {
  std::int64_t num;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// "3/2", "-1", "5". DomainError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);
};

struct PfqSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  double z = 0.0;
};

/// sum_n prod (upper)_n / (n! prod (lower)_n) z^n by incremental ratio
/// updates. |z| < 1 uses a geometric tail bound built from the sup of every
/// paired factor (a+m)/(b+m); |z| = 1 with sum(lower) - sum(upper) = s > 0
/// uses 2 t_N N / s, which assumes the terms are eventually monotone.
/// DomainError for nonpositive-integer lower parameters or divergent parameters.
series::SeriesValue pfq(const PfqSpec& spec,
                        const numkit::PrecisionConfig& cfg);

/// Terms t_0..t_{count-1}.
std::vector<double> pfq_terms(const PfqSpec& spec, std::size_t count);

enum class MappingFamily { map3F2, map4F3, map5F4 };

struct MappingSides {
  series::SeriesValue binomial_sum;  // sum z^n/(n^a C(kn,n))
  double prefactor;                  // z/k
  series::SeriesValue hypergeometric;
  double mapped() const { return prefactor * hypergeometric.value; }
};

/// Parameters of the pFq paired with each binomial family at argument z.
PfqSpec mapping_spec(MappingFamily family, double z);
series::BinomFamilyParams mapping_family(MappingFamily family, double z);

MappingSides mapping_sides(MappingFamily family, double z,
                           const numkit::PrecisionConfig& cfg);

/// |binomial sum - prefactor * pFq(mapped argument)|.
double mapping_residual(MappingFamily family, double z,
                        const numkit::PrecisionConfig& cfg);

}  // namespace hfid::hyper
