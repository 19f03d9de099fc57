#pragma once

#include <iosfwd>
#include <string>

#include "nakayama/laurent.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

/// Element of Q(t) kept in lowest terms.
///
/// The denominator is an ordinary polynomial (lowest exponent 0) whose
/// highest coefficient is 1; the zero function is 0/1. Two reduced
/// fractions are equal iff their representations coincide.
class RatFunc {
 public:
  RatFunc() : den_(LaurentPoly::one()) {}
  RatFunc(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)

  static RatFunc zero() { return {}; }
  static RatFunc one() { return RatFunc(Rational(1)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::string str() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);

 private:
  friend RatFunc ratfunc_reduce(const LaurentPoly& num, const LaurentPoly& den);

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Brings num/den to lowest terms. Throws ZeroDenominator when den = 0.
RatFunc ratfunc_reduce(const LaurentPoly& num, const LaurentPoly& den);

/// num(t0)/den(t0) for a reduced fraction. Throws PoleAtPoint when den(t0) = 0.
Rational eval_at(const RatFunc& f, const Rational& t0);

inline RatFunc exact_quotient(const RatFunc& a, const RatFunc& b) { return a / b; }

}  // namespace nakayama
