#include "nakayama/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nakayama/error.hpp"

namespace nakayama {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(long lowest_exponent, std::vector<Rational> coefficients)
    : low_(lowest_exponent), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, long exponent) {
  return LaurentPoly(exponent, {coefficient});
}

LaurentPoly LaurentPoly::from_terms(const std::map<long, Rational>& terms) {
  if (terms.empty()) return {};
  const long lo = terms.begin()->first;
  const long hi = terms.rbegin()->first;
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
  return LaurentPoly(lo, std::move(c));
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
  const auto skip = first - coeffs_.begin();
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    low_ += static_cast<long>(skip);
  }
}

Rational LaurentPoly::coefficient(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > highest_exponent()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Rational LaurentPoly::leading_coefficient() const { return is_zero() ? Rational() : coeffs_.back(); }

bool LaurentPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::map<long, Rational> LaurentPoly::terms() const {
  std::map<long, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace(low_ + static_cast<long>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational LaurentPoly::eval(const Rational& t0) const {
  if (is_zero()) return {};
  if (t0.is_zero()) {
    if (low_ < 0) throw PoleAtPoint("0");
    return low_ == 0 ? coeffs_.front() : Rational();
  }
  // Horner on the polynomial part, then multiply by t0^low.
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
  Rational scale(1);
  const Rational step = low_ >= 0 ? t0 : Rational(1) / t0;
  for (long i = 0; i < (low_ >= 0 ? low_ : -low_); ++i) scale *= step;
  return acc * scale;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(highest_exponent(), o.highest_exponent());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const long e = low_ + static_cast<long>(i);
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  const LaurentPoly num = a.polynomial_part();
  const LaurentPoly den = b.polynomial_part();
  if (num.is_zero() || num.highest_exponent() < den.highest_exponent()) return {LaurentPoly(), num};

  const auto dc = den.coefficients();
  const long dd = den.highest_exponent();
  std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(num.highest_exponent() - dd + 1));
  const Rational lead = dc.back();
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / lead;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * dc[static_cast<std::size_t>(j)];
  }
  return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.polynomial_part();
  LaurentPoly y = b.polynomial_part();
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  x = x.polynomial_part();
  const Rational lead = x.leading_coefficient();
  return x * LaurentPoly(Rational(1) / lead);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.is_zero()) return {};
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw NotDivisible();
  return q.shifted(a.lowest_exponent() - b.lowest_exponent());
}

}  // namespace nakayama
