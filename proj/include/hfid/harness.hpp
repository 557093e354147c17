#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfid/numkit.hpp"

namespace hfid::harness {

// One sampled value of a computation together with its certified error.
struct Evaluation {
  double value = 0.0;
  double bound = 0.0;  // tail bound or quadrature error estimate
  std::size_t terms = 0;
};

// A computation handle: every side of a record returns one Evaluation per
// sample point, in the same order.
using Side =
    std::function<std::vector<Evaluation>(const numkit::PrecisionConfig&)>;

struct Oracle {
  std::string label;
  Side side;  // compared against the record's rhs
};

struct IdentityRecord {
  std::string id;
  std::string description;
  Side lhs;
  Side rhs;
  std::vector<Oracle> oracles;
  double default_tol;
};

struct IdentitySummary {
  std::string id;
  std::string description;
  double default_tol;
};

enum class Status { pass, fail, non_converged };

std::string_view to_string(Status s);

struct VerificationResult {
  std::string id;
  std::string description;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double abs_diff = 0.0;
  double lhs_tail_bound = 0.0;
  std::size_t terms_used = 0;
  Status status = Status::fail;
  std::chrono::duration<double, std::milli> elapsed{0.0};
  std::string detail;  // which comparison was worst, or the error message
};

struct VerifyOptions {
  std::optional<double> tol;  // overrides every record's default_tol
  std::size_t max_terms = numkit::PrecisionConfig{}.max_terms;
};

const std::vector<IdentityRecord>& registry();

std::vector<IdentitySummary> list_identities();

/// Evaluates every comparison of one record (lhs vs rhs and each oracle vs
/// rhs, sample by sample). The worst lhs sample is reported unless some
/// comparison exceeds its tolerance, in which case the worst of those is.
/// pass iff abs_diff <= tol + lhs_tail_bound for the reported comparison.
/// NotFoundError for an unknown id.
VerificationResult verify(std::string_view id, const VerifyOptions& opts);

/// Records are evaluated concurrently; results keep registry order.
std::vector<VerificationResult> verify_all(const VerifyOptions& opts);

/// Subset in the order given; an empty list means the whole registry.
std::vector<VerificationResult> verify_selected(
    const std::vector<std::string>& ids, const VerifyOptions& opts);

bool all_passed(const std::vector<VerificationResult>& results);

std::string report_json(const std::vector<VerificationResult>& results,
                        const VerifyOptions& opts);

std::string report_text(const std::vector<VerificationResult>& results);

}  // namespace hfid::harness
