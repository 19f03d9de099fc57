#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/rational.hpp"

namespace nakayama {

/// Laurent polynomial over Q in one variable t.
///
/// Stored as t^lowest_exponent * (c_0 + c_1 t + ... + c_k t^k) with c_0 and
/// c_k nonzero. The zero polynomial has no coefficients and lowest exponent 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long lowest_exponent, std::vector<Rational> coefficients);

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }
  static LaurentPoly monomial(const Rational& coefficient, long exponent);
  /// Builds from an exponent -> coefficient map; zero entries are dropped.
  static LaurentPoly from_terms(const std::map<long, Rational>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Meaningful only when nonzero.
  long lowest_exponent() const { return low_; }
  long highest_exponent() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(long exponent) const;
  /// Coefficient of the highest power; zero for the zero polynomial.
  Rational leading_coefficient() const;

  /// True when every coefficient is an integer.
  bool is_integral() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  std::map<long, Rational> terms() const;

  /// Multiplies by t^k.
  LaurentPoly shifted(long k) const;
  /// The ordinary polynomial obtained by dividing out t^lowest_exponent.
  LaurentPoly polynomial_part() const { return shifted(-low_); }

  LaurentPoly pow(unsigned exponent) const;

  /// Value at t0. Throws PoleAtPoint when t0 = 0 and a negative power occurs.
  Rational eval(const Rational& t0) const;

  /// Human readable form such as "1-t+t^3" or "2/3*t^-1".
  std::string str() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

 private:
  void normalize();

  long low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of the polynomial parts of a and b (t-powers
/// stripped). b must be nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic generator of (a, b) after clearing t-powers; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// a / b in the Laurent ring. Throws NotDivisible when b does not divide a
/// and ZeroDenominator when b = 0.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace nakayama
