#include "valtree/ratfunc.hpp"

#include "valtree/error.hpp"

namespace valtree {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) raise(Errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  if (!den.is_constant()) {
    const UniPoly g = UniPoly::gcd(num, den);
    if (!g.is_constant()) {
      num = UniPoly::divmod(num, g).first;
      den = UniPoly::divmod(den, g).first;
    }
  }
  const Rational lead_inv = den.leading().inverse();
  num_ = std::move(num) * lead_inv;
  den_ = std::move(den) * lead_inv;
}

RatFunc RatFunc::power_of_t(long k) {
  if (k >= 0) return RatFunc(UniPoly::monomial(Rational(1), static_cast<std::size_t>(k)));
  return RatFunc(UniPoly(Rational(1)), UniPoly::monomial(Rational(1), static_cast<std::size_t>(-k)),
                 Canonical{});
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero())
    raise(Errc::needs_evaluation_point, "evaluation point " + x.str() + " is a pole of " + str());
  return num_.eval(x) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) raise(Errc::division_by_zero, "inverse of zero rational function");
  const Rational lead_inv = num_.leading().inverse();
  return RatFunc(den_ * lead_inv, num_ * lead_inv, Canonical{});
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  return b.is_constant() ? a * b.coeffs()[0].inverse() : UniPoly::divmod(a, b).first;
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_, UniPoly(Rational(1)), RatFunc::Canonical{});
  // Over the lcm of the denominators.
  const UniPoly g = UniPoly::gcd(a.den_, b.den_);
  const UniPoly bq = exact_quotient(b.den_, g), aq = exact_quotient(a.den_, g);
  return RatFunc(a.num_ * bq + b.num_ * aq, a.den_ * bq);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, UniPoly(Rational(1)), RatFunc::Canonical{});
  // Cross cancellation keeps the result reduced without a gcd of the products.
  const UniPoly g1 = UniPoly::gcd(a.num_, b.den_), g2 = UniPoly::gcd(b.num_, a.den_);
  UniPoly num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  UniPoly den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  const Rational lead_inv = den.leading().inverse();
  return RatFunc(num * lead_inv, den * lead_inv, RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Canonical{}); }

std::string RatFunc::str(std::string_view var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace valtree
