#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// A homological dimension: a natural number or infinity.
class HomDim {
 public:
  static HomDim finite(int value) { return HomDim(value); }
  static HomDim infinite() { return HomDim(-1); }

  bool is_finite() const { return value_ >= 0; }
  /// Requires is_finite().
  int value() const;
  bool is_even() const { return is_finite() && value_ % 2 == 0; }
  bool is_odd() const { return is_finite() && value_ % 2 == 1; }

  /// Decimal value, or "inf".
  std::string str() const;

  friend bool operator==(const HomDim&, const HomDim&) = default;
  /// Infinity compares greater than every finite value.
  friend std::strong_ordering operator<=>(const HomDim& a, const HomDim& b);

 private:
  explicit HomDim(int v) : value_(v) {}
  int value_;
};

/// Kernel of the projective cover P_top(M) -> M, graded by its position
/// inside P_top(M) (whose top sits in M's top degree).
GradedIntervalModule syzygy(const AdmissibleSequence& A, const Grading& d, const GradedIntervalModule& M);
GradedIntervalModule syzygy(const AdmissibleSequence& A, const GradedIntervalModule& M);

/// Cokernel of the injective envelope M -> I_socle(M), graded so that the
/// envelope's socle matches M's socle degree.
GradedIntervalModule cosyzygy(const AdmissibleSequence& A, const Grading& d, const GradedIntervalModule& M);
GradedIntervalModule cosyzygy(const AdmissibleSequence& A, const GradedIntervalModule& M);

bool is_projective(const AdmissibleSequence& A, const GradedIntervalModule& M);
bool is_injective(const AdmissibleSequence& A, const GradedIntervalModule& M);

HomDim proj_dim(const AdmissibleSequence& A, int a);
HomDim inj_dim(const AdmissibleSequence& A, int a);

struct DimensionReport {
  std::vector<HomDim> pd;
  std::vector<HomDim> id;
  HomDim gldim = HomDim::finite(0);
};

DimensionReport dimension_report(const AdmissibleSequence& A);

/// Shape of the minimal graded injective resolution
///   0 -> S_a -> I_{c_0}(b_0) -> I_{c_1}(b_1) -> ...
/// with S_a in degree 0.
///
/// For finite id, shifts holds b_0..b_id. Otherwise it holds
/// b_0..b_{preperiod + period_steps}: the ungraded cosyzygy after
/// preperiod + period_steps steps equals the one after preperiod steps, and
/// shift_increment = b_{preperiod + period_steps} - b_{preperiod}.
struct ResolutionSummary {
  std::vector<long> shifts;
  std::vector<int> socle_vertices;
  int preperiod = 0;
  int period_steps = 0;
  long shift_increment = 0;
  bool finite = true;
  HomDim inj_dim = HomDim::finite(0);
};

/// Throws NonPositiveGrading unless every arrow degree is >= 1.
ResolutionSummary graded_injective_resolution(const AdmissibleSequence& A, const Grading& d, int a);

/// Dimension vector of E^m(S_a): zero unless a lies in Im gamma^m, otherwise
/// the characteristic vector of {b : psi^m(b) = psi^m(a)}.
std::vector<int> e_module_dimvec(const AdmissibleSequence& A, int a, int m);

/// Dimension vector of Omega^{2m}(S_a), by iterating syzygies.
std::vector<int> omega_even_dimvec(const AdmissibleSequence& A, int a, int m);

struct PeriodSum {
  /// Smallest r with Omega^{2r + 2p}(S_a) = Omega^{2r}(S_a).
  int r = 0;
  /// sum_{i < p} dim Omega^{2r + 2i}(S_a).
  int total = 0;
};

/// Throws FiniteProjectiveDimension when pd S_a is finite, and
/// CrossCheckFailure when total differs from the size of a's component in
/// the coresolution quiver.
PeriodSum syzygy_period_sum(const AdmissibleSequence& A, int a);

/// Some cyclic vertex of the resolution quiver has even injective dimension.
bool madsen_finite_gldim(const AdmissibleSequence& A);
/// The resolution quiver is connected of weight 1.
bool shen_finite_gldim(const AdmissibleSequence& A);

}  // namespace nakayama
