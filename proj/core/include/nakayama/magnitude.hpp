#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/matrix.hpp"
#include "nakayama/ratfunc.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

enum class MagnitudeMethod { inverse_sum, cycle_vector, linear_solve };

std::string to_string(MagnitudeMethod method);

struct MagnitudeReport {
  std::optional<std::vector<Rational>> weighting;
  std::optional<std::vector<Rational>> coweighting;
  std::optional<Rational> magnitude;
  MagnitudeMethod method = MagnitudeMethod::linear_solve;
};

/// Some alpha with C alpha = (1, ..., 1), or nullopt.
std::optional<std::vector<Rational>> weighting(const Matrix<Rational>& C);
/// Some beta with beta C = (1, ..., 1), or nullopt.
std::optional<std::vector<Rational>> coweighting(const Matrix<Rational>& C);

/// Weighting, coweighting and magnitude of a square matrix. For invertible
/// C the magnitude is also computed as the entry sum of the inverse and the
/// two values must agree (CrossCheckFailure otherwise).
MagnitudeReport magnitude_report(const Matrix<Rational>& C);
std::optional<Rational> magnitude_generic(const Matrix<Rational>& C);

/// Entry sum of C^{-1}, or nullopt when C is singular.
std::optional<Rational> inverse_entry_sum(const Matrix<Rational>& C);

/// p / w of the resolution quiver, checked against magnitude_generic of the
/// Cartan matrix.
Rational magnitude_nakayama(const AdmissibleSequence& A);

struct GradedWeighting {
  std::vector<RatFunc> alpha;
  std::vector<Rational> at_one;
};

/// The unique weighting of the graded Cartan matrix over Q(t) and its value
/// at t = 1. Requires a positive grading.
GradedWeighting graded_weighting(const AdmissibleSequence& A, const Grading& d);

/// alpha_a(t) = sum_i (-1)^i t^{b_i} read off the minimal graded injective
/// resolution of S_a, summed in closed form when the resolution is infinite.
RatFunc alpha_from_resolution(const AdmissibleSequence& A, const Grading& d, int a);

/// Descriptions of every vertex where alpha_a(1) (length grading) differs
/// from 0 (non-cyclic a) or n_a / (n w) (cyclic a). Empty when the theorem
/// holds.
std::vector<std::string> theorem_main_violations(const AdmissibleSequence& A);
bool theorem_main_check(const AdmissibleSequence& A);

}  // namespace nakayama
