#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/laurent.hpp"
#include "nakayama/matrix.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

/// Kupisch series (p_1, ..., p_n) of a Nakayama algebra on the cyclic quiver
/// with n vertices. Vertices are 1-based; tau(a) = a + 1 and tau(n) = 1.
/// Only validate_sequence creates instances, so every instance is admissible.
class AdmissibleSequence {
 public:
  int order() const { return static_cast<int>(p_.size()); }
  /// Dimension of the projective cover P_a.
  int p(int a) const { return p_[static_cast<std::size_t>(a - 1)]; }
  std::span<const int> values() const { return p_; }
  int max_p() const;

  std::string str() const;

  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;
  friend auto operator<=>(const AdmissibleSequence&, const AdmissibleSequence&) = default;

 private:
  friend AdmissibleSequence validate_sequence(std::span<const int> p);
  explicit AdmissibleSequence(std::vector<int> p) : p_(std::move(p)) {}

  std::vector<int> p_;
};

/// Checks p_a >= 1 and p_a <= p_{tau(a)} + 1. Throws NotAdmissible(a) at the
/// first failing 1-based index, InvalidInput on an empty sequence.
AdmissibleSequence validate_sequence(std::span<const int> p);
AdmissibleSequence validate_sequence(std::initializer_list<int> p);

/// Parses comma-separated positive integers and validates them.
AdmissibleSequence parse_sequence(std::string_view csv);

/// Arrow degrees d_a = deg(x_a) for the arrows x_a : a -> tau(a).
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<long> degrees) : d_(std::move(degrees)) {}

  static Grading length(int n) { return Grading(std::vector<long>(static_cast<std::size_t>(n), 1)); }
  static Grading zero(int n) { return Grading(std::vector<long>(static_cast<std::size_t>(n), 0)); }

  int size() const { return static_cast<int>(d_.size()); }
  long degree(int a) const { return d_[static_cast<std::size_t>(a - 1)]; }
  std::span<const long> values() const { return d_; }
  long total_degree() const;

  bool is_positive() const;
  bool is_length() const;
  bool is_zero() const;

  std::string str() const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<long> d_;
};

/// Parses comma-separated integers.
Grading parse_grading(std::string_view csv);

/// Throws InvalidInput when the grading length differs from the order.
void check_grading(const AdmissibleSequence& A, const Grading& d);

/// tau^k(a) on n vertices; k may be negative.
int tau_power(int a, long k, int n);

/// Sum of the degrees of the k arrows on the path a -> tau(a) -> ... -> tau^k(a).
long path_degree(const Grading& d, int a, long k);

/// Indecomposable (uniserial) module: composition factors read from top to
/// socle are S_top, S_tau(top), ..., each factor sitting in degree
/// top_degree + path_degree(top, k). length = 0 is the zero module.
struct GradedIntervalModule {
  int top = 1;
  int length = 0;
  long top_degree = 0;

  bool is_zero() const { return length == 0; }
  int socle(int n) const { return tau_power(top, length - 1, n); }
  long socle_degree(const Grading& d) const { return top_degree + path_degree(d, top, length - 1); }
  /// Same underlying ungraded module (degrees ignored; all zero modules equal).
  bool same_ungraded(const GradedIntervalModule& o) const {
    return length == o.length && (length == 0 || top == o.top);
  }
  /// Multiplicity of every simple, indexed 0..n-1.
  std::vector<int> dimension_vector(int n) const;

  friend bool operator==(const GradedIntervalModule&, const GradedIntervalModule&) = default;
};

GradedIntervalModule simple_module(int a, long degree = 0);
/// P_a with its top in degree 0.
GradedIntervalModule projective_module(const AdmissibleSequence& A, int a);

/// Column b is the dimension vector of P_b.
Matrix<Rational> cartan_matrix(const AdmissibleSequence& A);

/// Column b is the graded dimension vector of P_b with its top in degree 0.
Matrix<LaurentPoly> graded_cartan_matrix(const AdmissibleSequence& A, const Grading& d);

/// q_a = dim I_a, the row sums of the Cartan matrix.
std::vector<int> injective_dims(const AdmissibleSequence& A);

/// I_a with its socle S_a in degree 0.
GradedIntervalModule injective_module(const AdmissibleSequence& A, const Grading& d, int a);

}  // namespace nakayama
