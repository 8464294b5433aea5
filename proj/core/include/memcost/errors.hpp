#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace memcost {

// One violated invariant: dotted field path plus a message carrying the
// offending value, e.g. {"workload.mfp", "must be in [0, 1], got 1.5"}.
struct ValidationIssue {
    std::string field;
    std::string message;
};

std::string join_issues(const std::vector<ValidationIssue>& issues);

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid domain values; carries the complete violation list, not just the
// first hit.
class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

  private:
    std::vector<ValidationIssue> issues_;
};

// Malformed or inconsistent input data (CSV rows, conflicting duplicates).
class IngestError : public Error {
  public:
    using Error::Error;
};

// Least-squares fit cannot be computed: too few points or zero variance.
class FitError : public Error {
  public:
    using Error::Error;
};

// Sweep range is malformed or the point/grid cap would be exceeded.
class SweepError : public Error {
  public:
    using Error::Error;
};

}  // namespace memcost
