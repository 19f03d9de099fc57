#include "nakayama/rational.hpp"

#include <ostream>

#include "nakayama/error.hpp"

namespace nakayama {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw InvalidInput("not a rational number: '" + s + "'");
  }
  if (v.get_den() == 0) throw ZeroDenominator();
  v.canonicalize();
  return from_mpq(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw Error("Rational::to_long: " + str() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominator();
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nakayama
