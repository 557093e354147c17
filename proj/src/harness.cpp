#include "hfid/harness.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hfid/closedform.hpp"
#include "hfid/hyper.hpp"
#include "hfid/polylog.hpp"
#include "hfid/quadrature.hpp"
#include "hfid/roots.hpp"
#include "hfid/series.hpp"

namespace hfid::harness {
namespace {

using numkit::kConstants;
using numkit::kPi;
using numkit::PrecisionConfig;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kImagLeakLimit = 1e-11;

// Geometric-convergence entries vs the slower polynomial/nested ones.
constexpr double kGeometricTol = 1e-10;
constexpr double kSlowTol = 1e-8;

PrecisionConfig scaled(const PrecisionConfig& cfg, double factor) {
  return cfg.with_tolerance(
      std::max(cfg.abs_tol / factor, PrecisionConfig::kMinTolerance));
}

Evaluation from_series(const series::SeriesValue& s, double scale = 1.0) {
  return {scale * s.value, std::fabs(scale) * s.tail_bound, s.terms_used};
}

Evaluation from_quadrature(const quadrature::QuadratureResult& q) {
  if (!q.converged) {
    throw ConvergenceError("quadrature did not reach abs_tol within quad_budget",
                           q.err_estimate, q.evaluations);
  }
  return {q.value, q.err_estimate, q.evaluations};
}

Evaluation from_closed(const closedform::ClosedFormValue& c) {
  if (c.imag_leak > kImagLeakLimit) {
    throw DomainError("closed form left an imaginary residue of " +
                      std::to_string(c.imag_leak));
  }
  return {c.value, 0.0, 0};
}

Evaluation exact(double v) { return {v, 0.0, 0}; }

template <class F>
Side one(F f) {
  return [f](const PrecisionConfig& cfg) {
    return std::vector<Evaluation>{f(cfg)};
  };
}

template <class T, class F>
Side sweep(std::vector<T> points, F f) {
  return [points, f](const PrecisionConfig& cfg) {
    std::vector<Evaluation> out;
    out.reserve(points.size());
    for (const T& p : points) out.push_back(f(p, cfg));
    return out;
  };
}

Side constant(double v) {
  return [v](const PrecisionConfig&) { return std::vector<Evaluation>{exact(v)}; };
}

Side binom_side(int k, int a, double z) {
  return one([=](const PrecisionConfig& cfg) {
    return from_series(series::sum_binom_family({k, a, z}, cfg));
  });
}

const std::vector<double> kThaiSweep = {0.6, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
const std::vector<double> kSampleX = {0.3, 0.5, 0.8414709848078965};  // sin 1
const std::vector<double> kQuarticZ = {0.5, -0.5, 0.25, -1.0 / 24.0};
const std::vector<double> kMappingZ = {1.0 / 12.0, 0.25, 0.5, 2.0};
const std::vector<double> kGenericZ = {0.3, 1.7, 4.0, 6.0, -2.0};

Side mapping_lhs(hyper::MappingFamily family) {
  return sweep(kMappingZ, [family](double z, const PrecisionConfig& cfg) {
    return from_series(
        series::sum_binom_family(hyper::mapping_family(family, z), cfg));
  });
}

Side mapping_rhs(hyper::MappingFamily family) {
  return sweep(kMappingZ, [family](double z, const PrecisionConfig& cfg) {
    const double prefactor = z / hyper::mapping_family(family, z).k;
    const PrecisionConfig hcfg = scaled(cfg, std::max(std::fabs(prefactor), 1.0));
    return from_series(hyper::pfq(hyper::mapping_spec(family, z), hcfg),
                       prefactor);
  });
}

std::vector<IdentityRecord> build_registry() {
  using hyper::MappingFamily;
  using hyper::PfqSpec;
  std::vector<IdentityRecord> r;

  r.push_back({"E0", "3 sum 1/(n^2 C(2n,n)) = zeta(2)",
               one([](const PrecisionConfig& cfg) {
                 return from_series(
                     series::sum_binom_family({2, 2, 1.0}, scaled(cfg, 3.0)), 3.0);
               }),
               constant(kConstants.zeta2), {}, kGeometricTol});

  std::vector<unsigned> wallis_n(11);
  for (unsigned n = 0; n <= 10; ++n) wallis_n[n] = n;
  r.push_back({"E1", "int_0^{pi/2} sin^(2n+3) = 4^n (2n+2)/((2n+3)(2n+1) C(2n,n)), n = 0..10",
               sweep(wallis_n, [](unsigned n, const PrecisionConfig& cfg) {
                 const double e = 2.0 * n + 3.0;
                 return from_quadrature(quadrature::integrate(
                     [e](double x) { return std::pow(std::sin(x), e); }, 0.0,
                     0.5 * kPi, cfg));
               }),
               sweep(wallis_n, [](unsigned n, const PrecisionConfig&) {
                 return exact(closedform::wallis_rhs(n));
               }),
               {}, kGeometricTol});

  r.push_back({"E2", "arcsin^2 x = (1/2) sum 4^(n+1) x^(2n+2)/((2n+2)(2n+1) C(2n,n))",
               sweep(kSampleX, [](double x, const PrecisionConfig& cfg) {
                 return from_series(series::arcsin_sq_series(x, cfg));
               }),
               sweep(kSampleX, [](double x, const PrecisionConfig&) {
                 return exact(closedform::eq2_lhs(x));
               }),
               {}, kGeometricTol});

  r.push_back({"E3", "-2x + 2 sqrt(1-x^2) arcsin x + x arcsin^2 x = integrated arcsin^2 series",
               sweep(kSampleX, [](double x, const PrecisionConfig& cfg) {
                 return from_series(series::eq3_series(x, cfg));
               }),
               sweep(kSampleX, [](double x, const PrecisionConfig&) {
                 return exact(closedform::eq3_lhs(x));
               }),
               {}, kGeometricTol});

  const std::vector<double> eq4_x = {0.3, 0.5, 0.8};
  r.push_back({"E4", "twice-integrated arcsin^2 series = elementary part + 2 int u cos^2 u/sin u",
               sweep(eq4_x, [](double x, const PrecisionConfig& cfg) {
                 return from_series(series::eq4_series(x, cfg));
               }),
               sweep(eq4_x, [](double x, const PrecisionConfig& cfg) {
                 return from_quadrature(closedform::eq4_lhs(x, cfg));
               }),
               {}, kGeometricTol});

  const series::CentralSquaredParams thm1_series{3, 2, 0, false};
  r.push_back({"E5", "sum 16^n/((2n+3)^3 (2n+1)^2 C(2n,n)^2) = (pi-4) + int int u cos^2 u/sin u",
               one([thm1_series](const PrecisionConfig& cfg) {
                 return from_series(series::sum_central_squared(thm1_series, cfg));
               }),
               one([](const PrecisionConfig& cfg) {
                 Evaluation e = from_quadrature(quadrature::eq5_double_integral(cfg));
                 e.value += kPi - 4.0;
                 return e;
               }),
               {{"closed double integral",
                 constant((kPi - 4.0) - kPi * kConstants.catalan_G +
                          3.5 * kConstants.zeta3 - (2.0 - 0.5 * kPi))}},
               kSlowTol});

  r.push_back({"E6", "sum (1 - 1/C(3n,n))/(n^2 2^n) = pi^2/24",
               one([](const PrecisionConfig& cfg) { return from_series(series::sum_e6(cfg)); }),
               constant(kPi * kPi / 24.0),
               {{"Li2(1/2) - sum 1/(n^2 2^n C(3n,n))",
                 one([](const PrecisionConfig& cfg) {
                   const PrecisionConfig half = scaled(cfg, 2.0);
                   const auto d = polylog::li2(0.5, half);
                   const auto s = series::sum_binom_family({3, 2, 0.5}, half);
                   return Evaluation{d.value.real() - s.value,
                                     d.est_error + s.tail_bound, s.terms_used};
                 })}},
               kGeometricTol});

  r.push_back({"E7", "sum 2^n/((n+1) n^2 C(2n,n)) = pi/2 - 1",
               one([](const PrecisionConfig& cfg) { return from_series(series::sum_e7(cfg)); }),
               constant(0.5 * kPi - 1.0), {}, kGeometricTol});

  r.push_back({"E8", "sum 8^n/(n^2 3^n C(3n,n)) = pi^2/6 - log^2(3)/2",
               binom_side(3, 2, 8.0 / 3.0), constant(closedform::e8_rhs()),
               {{"root form S3(8/3)",
                 one([](const PrecisionConfig&) { return from_closed(closedform::s3_closed(8.0 / 3.0)); })}},
               kGeometricTol});

  r.push_back({"T1", "4F3(1,1,1,3/2; 5/2,5/2,5/2; 1) = (27/2)(7 zeta(3) + (3-2G) pi - 12)",
               one([thm1_series](const PrecisionConfig& cfg) {
                 return from_series(
                     series::sum_central_squared(thm1_series, scaled(cfg, 27.0)), 27.0);
               }),
               constant(closedform::thm1_rhs()),
               {{"4F3 at unit argument",
                 one([](const PrecisionConfig& cfg) {
                   const PfqSpec spec{{{1}, {1}, {1}, {3, 2}}, {{5, 2}, {5, 2}, {5, 2}}, 1.0};
                   return from_series(hyper::pfq(spec, cfg));
                 })}},
               kSlowTol});

  r.push_back({"T2", "sum 1/(n^2 2^n C(3n,n)) = pi^2/24 - log^2(2)/2",
               binom_side(3, 2, 0.5), constant(closedform::thm2_rhs()),
               {{"root form S3(1/2)",
                 one([](const PrecisionConfig&) { return from_closed(closedform::s3_closed(0.5)); })},
                {"log-integral quadrature",
                 one([](const PrecisionConfig& cfg) {
                   return from_quadrature(quadrature::log_integral_repr(0.5, cfg));
                 })},
                {"(1/6) 4F3(1,1,1,3/2; 4/3,5/3,2; 2/27)",
                 one([](const PrecisionConfig& cfg) {
                   return from_series(
                       hyper::pfq(hyper::mapping_spec(MappingFamily::map4F3, 0.5), cfg),
                       1.0 / 6.0);
                 })}},
               kGeometricTol});

  r.push_back({"T3", "sum 1/(n^2 12^n C(3n,n)) = (2/3) arctan^2(sqrt(15)/9) - log^2(3/2)/2",
               binom_side(3, 2, 1.0 / 12.0), constant(closedform::thm3_rhs()),
               {{"root form S3(1/12)",
                 one([](const PrecisionConfig&) { return from_closed(closedform::s3_closed(1.0 / 12.0)); })},
                {"parametric form at m = 2", constant(closedform::thai_rhs(2.0))}},
               kGeometricTol});

  r.push_back({"T4", "sum 1/(n^2 (m^2+m^3)^n C(3n,n)) = arctan/log form, m-sweep",
               sweep(kThaiSweep, [](double m, const PrecisionConfig& cfg) {
                 return from_series(series::sum_binom_family({3, 2, roots::thai_z(m)}, cfg));
               }),
               sweep(kThaiSweep, [](double m, const PrecisionConfig&) {
                 return exact(closedform::thai_rhs(m));
               }),
               {{"root form S3(thai_z(m))",
                 sweep(kThaiSweep, [](double m, const PrecisionConfig&) {
                   return from_closed(closedform::s3_closed(roots::thai_z(m)));
                 })}},
               kGeometricTol});

  r.push_back({"T5", "sum 1/(n 2^n C(3n,n)) = pi/10 - log(2)/5",
               binom_side(3, 1, 0.5), constant(closedform::thm5_rhs()),
               {{"(2/3) int_0^1 x z/(1 - z(1-x)x^2) at z = 1/2",
                 one([](const PrecisionConfig& cfg) {
                   return from_quadrature(quadrature::f32_integral(0.5, cfg));
                 })},
                {"(1/6) 3F2(1,1,3/2; 4/3,5/3; 2/27)",
                 one([](const PrecisionConfig& cfg) {
                   return from_series(
                       hyper::pfq(hyper::mapping_spec(MappingFamily::map3F2, 0.5), cfg),
                       1.0 / 6.0);
                 })}},
               kGeometricTol});

  r.push_back({"P1", "sum_{n>=0} 16^n/((2n+1)^2 (2n+3)^2 C(2n,n)^2) = pi - 3",
               one([](const PrecisionConfig& cfg) {
                 return from_series(series::sum_central_squared({2, 2, 0, false}, cfg));
               }),
               constant(kPi - 3.0), {}, kSlowTol});

  r.push_back({"P2", "sum_{n>=1} 16^n/(n^2 (2n+1)^2 C(2n,n)^2) = 4(pi - 3)",
               one([](const PrecisionConfig& cfg) {
                 return from_series(series::sum_central_squared({0, 2, 1, true}, cfg));
               }),
               constant(4.0 * (kPi - 3.0)), {}, kSlowTol});

  r.push_back({"Q4", "sum z^n/(n^2 C(4n,n)) = kappa4 sum log^2(1 - 1/xi), roots of 1 - z x^3 + z x^4",
               sweep(kQuarticZ, [](double z, const PrecisionConfig& cfg) {
                 return from_series(series::sum_binom_family({4, 2, z}, cfg));
               }),
               sweep(kQuarticZ, [](double z, const PrecisionConfig&) {
                 return from_closed(closedform::s4_closed(z));
               }),
               {}, kGeometricTol});

  r.push_back({"M1", "sum z^n/(n C(3n,n)) = (z/3) 3F2(1,1,3/2; 4/3,5/3; 4z/27)",
               mapping_lhs(MappingFamily::map3F2), mapping_rhs(MappingFamily::map3F2),
               {}, kGeometricTol});
  r.push_back({"M2", "sum z^n/(n^2 C(3n,n)) = (z/3) 4F3(1,1,1,3/2; 4/3,5/3,2; 4z/27)",
               mapping_lhs(MappingFamily::map4F3), mapping_rhs(MappingFamily::map4F3),
               {}, kGeometricTol});
  r.push_back({"M3", "sum z^n/(n^2 C(4n,n)) = (z/4) 5F4(1,1,1,4/3,5/3; 5/4,3/2,7/4,2; 27z/256)",
               mapping_lhs(MappingFamily::map5F4), mapping_rhs(MappingFamily::map5F4),
               {}, kGeometricTol});

  r.push_back({"X1", "root form -(1/3) sum log^2(1 - 1/xi) = (2/3) int_0^1 (-log p_z(x) - log p_z(1-x))/x",
               sweep(kGenericZ, [](double z, const PrecisionConfig&) {
                 return from_closed(closedform::s3_closed(z));
               }),
               sweep(kGenericZ, [](double z, const PrecisionConfig& cfg) {
                 return from_quadrature(quadrature::log_integral_repr(z, cfg));
               }),
               {{"series sum z^n/(n^2 C(3n,n))",
                 sweep(kGenericZ, [](double z, const PrecisionConfig& cfg) {
                   return from_series(series::sum_binom_family({3, 2, z}, cfg));
                 })}},
               kGeometricTol});
  return r;
}

struct Comparison {
  std::string label;
  const Side* side;
};

VerificationResult run_record(const IdentityRecord& rec,
                              const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerificationResult res;
  res.id = rec.id;
  res.description = rec.description;

  const double tol = opts.tol.value_or(rec.default_tol);
  const bool certifiable = tol >= PrecisionConfig::kMinTolerance;
  PrecisionConfig cfg;
  cfg.max_terms = opts.max_terms;

  auto finish = [&](Status s) {
    res.status = s;
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
  };

  try {
    cfg = PrecisionConfig::make(
        certifiable ? tol : PrecisionConfig::kMinTolerance, opts.max_terms,
        cfg.quad_budget);
    const std::vector<Evaluation> rhs = rec.rhs(cfg);
    std::vector<Comparison> comparisons{{"lhs", &rec.lhs}};
    for (const Oracle& o : rec.oracles) comparisons.push_back({o.label, &o.side});

    // The lhs comparison is reported unless some oracle does worse than
    // its tolerance, in which case the worst failing comparison is.
    struct Snapshot {
      double margin = -std::numeric_limits<double>::infinity();
      Evaluation lhs, rhs;
      std::string where;
    };
    Snapshot primary, worst;
    for (std::size_t k = 0; k < comparisons.size(); ++k) {
      const Comparison& c = comparisons[k];
      const std::vector<Evaluation> lhs = (*c.side)(cfg);
      if (lhs.size() != rhs.size()) {
        throw DomainError("sample count mismatch in " + c.label);
      }
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        const double diff = std::fabs(lhs[i].value - rhs[i].value);
        double margin = diff - (tol + lhs[i].bound + rhs[i].bound);
        if (std::isnan(margin)) margin = std::numeric_limits<double>::infinity();
        const Snapshot snap{margin, lhs[i], rhs[i], c.label + " sample " + std::to_string(i)};
        if (k == 0 && margin > primary.margin) primary = snap;
        if (margin > worst.margin) worst = snap;
      }
    }
    const Snapshot& shown = worst.margin > 0.0 ? worst : primary;
    res.lhs_value = shown.lhs.value;
    res.rhs_value = shown.rhs.value;
    res.abs_diff = std::fabs(shown.lhs.value - shown.rhs.value);
    res.lhs_tail_bound = shown.lhs.bound + shown.rhs.bound;
    res.terms_used = shown.lhs.terms;
    res.detail = shown.where;
    if (!certifiable) {
      res.detail = "tolerance below the 2^-48 floor cannot be certified";
      return finish(Status::non_converged);
    }
    return finish(res.abs_diff <= tol + res.lhs_tail_bound ? Status::pass
                                                           : Status::fail);
  } catch (const ConvergenceError& e) {
    res.lhs_value = res.rhs_value = res.abs_diff = kNaN;
    res.lhs_tail_bound = e.best_bound();
    res.terms_used = e.terms_used();
    res.detail = e.what();
    return finish(Status::non_converged);
  } catch (const std::exception& e) {
    res.lhs_value = res.rhs_value = res.abs_diff = res.lhs_tail_bound = kNaN;
    res.detail = e.what();
    return finish(Status::fail);
  }
}

const IdentityRecord& find_record(std::string_view id) {
  for (const IdentityRecord& rec : registry()) {
    if (rec.id == id) return rec;
  }
  throw NotFoundError("unknown identity id '" + std::string(id) + "'");
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::non_converged: return "non_converged";
  }
  return "fail";
}

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> records = build_registry();
  return records;
}

std::vector<IdentitySummary> list_identities() {
  std::vector<IdentitySummary> out;
  for (const IdentityRecord& rec : registry()) {
    out.push_back({rec.id, rec.description, rec.default_tol});
  }
  return out;
}

VerificationResult verify(std::string_view id, const VerifyOptions& opts) {
  return run_record(find_record(id), opts);
}

std::vector<VerificationResult> verify_selected(
    const std::vector<std::string>& ids, const VerifyOptions& opts) {
  std::vector<const IdentityRecord*> selected;
  if (ids.empty()) {
    for (const IdentityRecord& rec : registry()) selected.push_back(&rec);
  } else {
    for (const std::string& id : ids) selected.push_back(&find_record(id));
  }
  std::vector<std::future<VerificationResult>> pending;
  pending.reserve(selected.size());
  for (const IdentityRecord* rec : selected) {
    pending.push_back(std::async(std::launch::async,
                                 [rec, &opts] { return run_record(*rec, opts); }));
  }
  std::vector<VerificationResult> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<VerificationResult> verify_all(const VerifyOptions& opts) {
  return verify_selected({}, opts);
}

bool all_passed(const std::vector<VerificationResult>& results) {
  for (const VerificationResult& r : results) {
    if (r.status != Status::pass) return false;
  }
  return true;
}

std::string report_json(const std::vector<VerificationResult>& results,
                        const VerifyOptions& opts) {
  std::ostringstream os;
  os << "{\"config\":{\"tol\":"
     << (opts.tol ? json_number(*opts.tol) : std::string("null"))
     << ",\"max_terms\":" << opts.max_terms << "},\"results\":[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const VerificationResult& r = results[i];
    if (i > 0) os << ',';
    os << "{\"id\":" << json_string(r.id)
       << ",\"description\":" << json_string(r.description)
       << ",\"lhs\":" << json_number(r.lhs_value)
       << ",\"rhs\":" << json_number(r.rhs_value)
       << ",\"abs_diff\":" << json_number(r.abs_diff)
       << ",\"tail_bound\":" << json_number(r.lhs_tail_bound)
       << ",\"terms\":" << r.terms_used
       << ",\"status\":" << json_string(std::string(to_string(r.status)))
       << ",\"elapsed_ms\":" << json_number(r.elapsed.count()) << '}';
  }
  os << "]}\n";
  return os.str();
}

std::string report_text(const std::vector<VerificationResult>& results) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "ID" << ' ' << std::setw(13) << "STATUS"
     << ' ' << std::setw(24) << "LHS" << ' ' << std::setw(24) << "RHS" << ' '
     << std::setw(10) << "ABS_DIFF" << ' ' << std::setw(10) << "BOUND" << ' '
     << std::setw(8) << "TERMS" << ' ' << "MS" << '\n';
  for (const VerificationResult& r : results) {
    os << std::left << std::setw(4) << r.id << ' ' << std::setw(13)
       << to_string(r.status) << ' ' << std::setprecision(17) << std::setw(24)
       << r.lhs_value << ' ' << std::setw(24) << r.rhs_value << ' '
       << std::setprecision(3) << std::setw(10) << r.abs_diff << ' '
       << std::setw(10) << r.lhs_tail_bound << ' ' << std::setw(8)
       << r.terms_used << ' ' << std::fixed << std::setprecision(2)
       << r.elapsed.count() << std::defaultfloat;
    if (r.status != Status::pass) os << "  (" << r.detail << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace hfid::harness
