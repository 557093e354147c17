#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfid {

// Argument outside the domain of an operation (zero log argument, cut input,
// radius violation, k > N, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Polynomial root set has coalescing roots, or the polynomial is constant.
class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A log argument lands on the principal-branch cut.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Term budget ran out before the truncation bound reached the tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_bound,
                   std::size_t terms_used)
      : std::runtime_error(what),
        best_bound_(best_bound),
        terms_used_(terms_used) {}

  double best_bound() const noexcept { return best_bound_; }
  std::size_t terms_used() const noexcept { return terms_used_; }

 private:
  double best_bound_;
  std::size_t terms_used_;
};

class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hfid
