#include "nakayama/ratfunc.hpp"

#include <ostream>

#include "nakayama/error.hpp"

namespace nakayama {

RatFunc::RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}

RatFunc ratfunc_reduce(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  RatFunc out;
  if (num.is_zero()) return out;

  LaurentPoly n = num;
  LaurentPoly d = den;
  const LaurentPoly g = poly_gcd(n, d);
  if (g.highest_exponent() > 0) {
    n = exact_quotient(n, g);
    d = exact_quotient(d, g);
  }
  // Move the t-power of the denominator into the numerator, then make the
  // denominator monic.
  n = n.shifted(-d.lowest_exponent());
  d = d.polynomial_part();
  const Rational lead = d.leading_coefficient();
  if (lead != Rational(1)) {
    const LaurentPoly scale(Rational(1) / lead);
    n *= scale;
    d *= scale;
  }
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ratfunc_reduce(a.num_ + b.num_, a.den_);
  return ratfunc_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ratfunc_reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.is_zero()) return {};
  return ratfunc_reduce(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
  if (den_ == LaurentPoly::one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

Rational eval_at(const RatFunc& f, const Rational& t0) {
  const Rational d = f.den().eval(t0);
  if (d.is_zero()) throw PoleAtPoint(t0.str());
  return f.num().eval(t0) / d;
}

}  // namespace nakayama
