#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

enum class CheckGroup { quiver, magnitude, determinant, syzygy, criteria };

std::string to_string(CheckGroup group);
std::optional<CheckGroup> parse_check_group(std::string_view name);
std::vector<CheckGroup> all_check_groups();

struct VerifyOptions {
  int n_max = 5;
  int p_max = 6;
  std::vector<CheckGroup> checks = all_check_groups();
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  /// Random gradings (degrees in -2..3, nonzero total) per algebra for the
  /// determinant checks.
  int determinant_gradings = 20;
  /// Random positive gradings (degrees in 1..4) per algebra for the
  /// resolution-series check.
  int series_gradings = 2;
};

struct Failure {
  std::string sequence;
  std::string check;
  std::string detail;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  int n_max = 0;
  int p_max = 0;
  std::vector<std::string> checks_run;
  std::size_t instances = 0;
  std::size_t evaluations = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs one group of invariant checks on a single algebra. Each named check
/// is evaluated; exceptions count as failures of that check.
std::vector<Failure> check_algebra(const AdmissibleSequence& A, CheckGroup group, const VerifyOptions& options,
                                   std::size_t* evaluations = nullptr);

/// Every selected check over every admissible sequence with n <= n_max and
/// p_a <= p_max. The report does not depend on options.jobs.
VerificationReport run_verification(const VerifyOptions& options);

/// {"n_range": [1, n_max], "p_max", "checks_run", "instances", "evaluations",
/// "failures": [{"sequence", "check", "detail"}]}.
std::string emit_json(const VerificationReport& report);

/// Deterministic per-algebra random source seed.
unsigned long long sequence_seed(const AdmissibleSequence& A, unsigned salt);

}  // namespace nakayama
