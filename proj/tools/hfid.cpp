// hfid: verify the hypergeometric / binomial-sum identity registry and
// evaluate the closed forms behind it.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfid/closedform.hpp"
#include "hfid/harness.hpp"
#include "hfid/hyper.hpp"
#include "hfid/roots.hpp"
#include "hfid/series.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<hfid::hyper::Rational> parse_rationals(const std::string& text) {
  std::vector<hfid::hyper::Rational> out;
  for (const std::string& s : split(text, ',')) {
    out.push_back(hfid::hyper::Rational::parse(s));
  }
  return out;
}

void print_series(const char* label, const hfid::series::SeriesValue& s) {
  std::cout << label << ' ' << s.value << "\nterms " << s.terms_used
            << "\ntail_bound " << s.tail_bound << '\n';
}

void print_roots(const hfid::roots::RootSet& set) {
  std::cout << "roots";
  for (const hfid::Complex& r : set.roots) {
    std::cout << " (" << r.real() << (r.imag() < 0 ? "-" : "+")
              << std::fabs(r.imag()) << "i)";
  }
  std::cout << "\nroot_residual " << set.residual << '\n';
}

// The matching binomial-sum series, when z is inside its disk.
void print_companion_series(int k, double z,
                            const hfid::numkit::PrecisionConfig& cfg) {
  if (std::fabs(z) >= hfid::series::family_radius(k)) return;
  print_series("series", hfid::series::sum_binom_family({k, 2, z}, cfg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified numerics for hypergeometric and binomial-sum identities"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the identity registry");

  hfid::harness::VerifyOptions opts;
  double tol = 0.0;
  std::string ids;
  std::string format = "text";

  auto* verify = app.add_subcommand("verify", "Verify selected identities");
  verify->add_option("--id", ids, "Comma-separated identity ids")->required();
  auto* verify_all = app.add_subcommand("verify-all", "Verify every identity");
  for (CLI::App* sub : {verify, verify_all}) {
    sub->add_option("--tol", tol, "Absolute tolerance for every record");
    sub->add_option("--max-terms", opts.max_terms, "Series term budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  auto* eval = app.add_subcommand("eval", "Evaluate one closed form or series");
  eval->require_subcommand(1);
  double z = 0.0;
  double m = 0.0;
  std::string upper;
  std::string lower;
  auto* eval_s3 = eval->add_subcommand("s3", "Cubic root form S3(z)");
  eval_s3->add_option("--z", z, "Argument")->required();
  auto* eval_s4 = eval->add_subcommand("s4", "Quartic root form S4(z)");
  eval_s4->add_option("--z", z, "Argument")->required();
  auto* eval_thai = eval->add_subcommand("thai", "Parametric arctan/log form");
  eval_thai->add_option("--m", m, "Parameter m >= 1/2")->required();
  auto* eval_pfq = eval->add_subcommand("pfq", "Generalized hypergeometric series");
  eval_pfq->add_option("--upper", upper, "Numerator parameters, e.g. 1,1,3/2")->required();
  eval_pfq->add_option("--lower", lower, "Denominator parameters, e.g. 4/3,5/3");
  eval_pfq->add_option("--z", z, "Argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::cout << std::setprecision(17);
  try {
    if (list->parsed()) {
      for (const auto& s : hfid::harness::list_identities()) {
        std::cout << std::left << std::setw(4) << s.id << ' ' << s.description
                  << '\n';
      }
      return kExitPass;
    }

    if (verify->parsed() || verify_all->parsed()) {
      const CLI::App* sub = verify->parsed() ? verify : verify_all;
      if (sub->count("--tol") > 0) {
        if (!(tol > 0.0) || !std::isfinite(tol)) {
          std::cerr << "--tol must be a positive finite number\n";
          return kExitUsage;
        }
        opts.tol = tol;
      }
      const std::vector<std::string> selected =
          verify->parsed() ? split(ids, ',') : std::vector<std::string>{};
      if (verify->parsed() && selected.empty()) {
        std::cerr << "--id needs at least one identity id\n";
        return kExitUsage;
      }
      const auto results = hfid::harness::verify_selected(selected, opts);
      std::cout << (format == "json" ? hfid::harness::report_json(results, opts)
                                     : hfid::harness::report_text(results));
      return hfid::harness::all_passed(results) ? kExitPass : kExitFail;
    }

    const hfid::numkit::PrecisionConfig cfg;
    if (eval_s3->parsed()) {
      const auto v = hfid::closedform::s3_closed(z);
      std::cout << "value " << v.value << "\nimag_leak " << v.imag_leak << '\n';
      print_roots(hfid::roots::solve_cubic_pz(z));
      print_companion_series(3, z, cfg);
    } else if (eval_s4->parsed()) {
      const auto v = hfid::closedform::s4_closed(z);
      std::cout << "value " << v.value << "\nimag_leak " << v.imag_leak << '\n';
      print_roots(hfid::roots::solve_quartic_qz(z));
      print_companion_series(4, z, cfg);
    } else if (eval_thai->parsed()) {
      const double value = hfid::closedform::thai_rhs(m);
      std::cout << "value " << value << '\n';
      const double tz = hfid::roots::thai_z(m);
      std::cout << "z " << tz << '\n';
      print_companion_series(3, tz, cfg);
    } else if (eval_pfq->parsed()) {
      hfid::hyper::PfqSpec spec{parse_rationals(upper), parse_rationals(lower), z};
      print_series("value", hfid::hyper::pfq(spec, cfg));
    }
    return kExitPass;
  } catch (const hfid::NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hfid::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hfid::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what()
              << " (best bound " << e.best_bound() << ")\n";
    return kExitFail;
  }
}
