#include "hfid/hyper.hpp"

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "hfid/closedform.hpp"

namespace hfid::hyper {
namespace {

using boost::multiprecision::cpp_rational;
using numkit::kPi;
using numkit::PrecisionConfig;

const PrecisionConfig kCfg = PrecisionConfig::make(1e-13, 200000, 1000);

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational{n, d}; }

cpp_rational exact(const Rational& r) { return cpp_rational(r.num, r.den); }

// t_n from products of full Pochhammer symbols in exact arithmetic
std::vector<double> exact_terms(const std::vector<Rational>& upper,
                                const std::vector<Rational>& lower,
                                const cpp_rational& z, int count) {
  std::vector<double> out;
  for (int n = 0; n < count; ++n) {
    cpp_rational t = 1;
    for (const Rational& a : upper)
      for (int m = 0; m < n; ++m) t *= exact(a) + m;
    for (const Rational& b : lower)
      for (int m = 0; m < n; ++m) t /= exact(b) + m;
    for (int m = 1; m <= n; ++m) t /= m;
    for (int m = 0; m < n; ++m) t *= z;
    out.push_back(static_cast<double>(t));
  }
  return out;
}

TEST(Pfq, CentralSquaredProductAtUnitArgument) {
  const PfqSpec spec{{q(1), q(1), q(1), q(3, 2)}, {q(5, 2), q(5, 2), q(5, 2)}, 1.0};
  const series::SeriesValue v = pfq(spec, PrecisionConfig::make(1e-9, 1000000, 1));
  EXPECT_LE(v.tail_bound, 0.5e-9);
  EXPECT_NEAR(v.value, closedform::thm1_rhs(), 1e-7);
  EXPECT_NEAR(v.value, 1.1339287155479350300, v.tail_bound + 1e-14);
}

TEST(Pfq, UnitArgumentPartialSumsBounded) {
  const PfqSpec spec{{q(1), q(1), q(1), q(3, 2)}, {q(5, 2), q(5, 2), q(5, 2)}, 1.0};
  const series::SeriesValue v = pfq(spec, PrecisionConfig::make(1e-8, 1000000, 1));
  numkit::CompensatedSum s;
  double prev = 0.0;
  for (double t : pfq_terms(spec, 3000)) {
    s.add(t);
    EXPECT_GT(s.value(), prev);
    EXPECT_LE(s.value(), closedform::thm1_rhs() + v.tail_bound);
    prev = s.value();
  }
}

TEST(Pfq, GeometricSeries) {
  const series::SeriesValue v = pfq({{q(1)}, {}, 0.5}, kCfg);
  EXPECT_NEAR(v.value, 2.0, v.tail_bound + 1e-15);
  EXPECT_NEAR(pfq({{q(1)}, {}, -0.5}, kCfg).value, 2.0 / 3, 1e-12);
}

TEST(Pfq, RationalIntegralArgument) {
  const PfqSpec spec{{q(1), q(1), q(3, 2)}, {q(4, 3), q(5, 3)}, 2.0 / 27};
  const series::SeriesValue v = pfq(spec, kCfg);
  EXPECT_NEAR(v.value / 6, kPi / 10 - std::log(2.0) / 5, 1e-13);
}

TEST(Pfq, ExponentialAndTermination) {
  // 0F0 is exp, allowed only inside the unit disk here
  EXPECT_NEAR(pfq({{}, {}, 0.7}, kCfg).value, std::exp(0.7), 1e-12);
  // 2F1(-3, 1; 1; z) = (1 - z)^3
  const series::SeriesValue p = pfq({{q(-3), q(1)}, {q(1)}, 0.5}, kCfg);
  EXPECT_DOUBLE_EQ(p.value, 0.125);
  EXPECT_EQ(p.tail_bound, 0.0);
  EXPECT_EQ(p.terms_used, 4u);
  const series::SeriesValue zero = pfq({{q(1), q(2)}, {q(3)}, 0.0}, kCfg);
  EXPECT_EQ(zero.value, 1.0);
  EXPECT_EQ(zero.terms_used, 1u);
}

TEST(Pfq, TermsMatchExactPochhammerProducts) {
  struct Case {
    std::vector<Rational> upper, lower;
    std::int64_t zn, zd;
  };
  const std::vector<Case> cases = {
      {{q(1), q(1), q(1), q(3, 2)}, {q(5, 2), q(5, 2), q(5, 2)}, 1, 1},
      {{q(1), q(1), q(3, 2)}, {q(4, 3), q(5, 3)}, 2, 27},
      {{q(1), q(1), q(1), q(3, 2)}, {q(4, 3), q(5, 3), q(2)}, 4, 54},
      {{q(1), q(1), q(1), q(4, 3), q(5, 3)}, {q(5, 4), q(3, 2), q(7, 4), q(2)}, -27, 512},
      {{q(-7, 3), q(1, 5)}, {q(-1, 2)}, 3, 4},
  };
  for (const Case& c : cases) {
    const PfqSpec spec{c.upper, c.lower, static_cast<double>(c.zn) / c.zd};
    const std::vector<double> got = pfq_terms(spec, 51);
    const std::vector<double> want = exact_terms(c.upper, c.lower, cpp_rational(c.zn, c.zd), 51);
    for (std::size_t n = 0; n < got.size(); ++n) {
      if (want[n] == 0.0) {
        EXPECT_EQ(got[n], 0.0);
        continue;
      }
      EXPECT_NEAR(got[n] / want[n], 1.0, 1e-13) << "n = " << n;
    }
  }
}

TEST(Pfq, RejectsDivergentSpecs) {
  EXPECT_THROW(pfq({{q(1)}, {}, 1.0}, kCfg), DomainError);
  EXPECT_THROW(pfq({{q(1)}, {}, 1.5}, kCfg), DomainError);
  EXPECT_THROW(pfq({{q(1), q(1), q(1)}, {q(2)}, 0.1}, kCfg), DomainError);
  EXPECT_THROW(pfq({{q(1), q(1)}, {q(2)}, 1.0}, kCfg), DomainError);
  EXPECT_THROW(pfq({{q(1)}, {q(-2)}, 0.5}, kCfg), DomainError);
  EXPECT_THROW(pfq({{q(1)}, {q(0)}, 0.5}, kCfg), DomainError);
  EXPECT_THROW(pfq({{q(1)}, {}, std::nan("")}, kCfg), DomainError);
}

TEST(Pfq, BudgetExhaustion) {
  const PfqSpec spec{{q(1), q(1), q(1), q(3, 2)}, {q(5, 2), q(5, 2), q(5, 2)}, 1.0};
  try {
    pfq(spec, PrecisionConfig::make(1e-12, 50, 1));
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.terms_used(), 50u);
  }
}

TEST(Mapping, ResidualsSmall) {
  const std::vector<MappingFamily> families = {MappingFamily::map3F2, MappingFamily::map4F3,
                                               MappingFamily::map5F4};
  for (MappingFamily f : families) {
    for (double z : {1.0 / 12, 0.25, 0.5, 2.0, -0.5}) {
      EXPECT_LE(mapping_residual(f, z, kCfg), 1e-10) << static_cast<int>(f) << ' ' << z;
    }
    EXPECT_LE(mapping_residual(f, 0.5, kCfg), 1e-11);
  }
  EXPECT_EQ(mapping_residual(MappingFamily::map3F2, 0.0, kCfg), 0.0);
}

TEST(Mapping, ArgumentsAndPrefactors) {
  EXPECT_DOUBLE_EQ(mapping_spec(MappingFamily::map3F2, 0.5).z, 4 * 0.5 / 27);
  EXPECT_DOUBLE_EQ(mapping_spec(MappingFamily::map4F3, 0.5).z, 4 * 0.5 / 27);
  EXPECT_DOUBLE_EQ(mapping_spec(MappingFamily::map5F4, 0.5).z, 27 * 0.5 / 256);
  const MappingSides s = mapping_sides(MappingFamily::map5F4, 0.5, kCfg);
  EXPECT_DOUBLE_EQ(s.prefactor, 0.125);
  EXPECT_NEAR(s.mapped(), s.binomial_sum.value, 1e-12);
  EXPECT_NEAR(s.binomial_sum.value, 0.12729750445123620541, 1e-12);
  const series::BinomFamilyParams p = mapping_family(MappingFamily::map3F2, 0.5);
  EXPECT_EQ(p.k, 3);
  EXPECT_EQ(p.a, 1);
  EXPECT_THROW(mapping_residual(MappingFamily::map4F3, 7.0, kCfg), DomainError);
}

TEST(Rational, Parse) {
  const Rational a = Rational::parse("3/2");
  EXPECT_EQ(a.num, 3);
  EXPECT_EQ(a.den, 2);
  EXPECT_DOUBLE_EQ(a.value(), 1.5);
  EXPECT_EQ(Rational::parse("-1").num, -1);
  EXPECT_EQ(Rational::parse("5").den, 1);
  EXPECT_DOUBLE_EQ(Rational::parse("-7/3").value(), -7.0 / 3);
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse(""), DomainError);
  EXPECT_THROW(Rational::parse("x"), DomainError);
  EXPECT_THROW(Rational::parse("1/2/3"), DomainError);
  EXPECT_THROW(Rational::parse("1.5"), DomainError);
}

}  // namespace
}  // namespace hfid::hyper
