#include "valtree/valuation.hpp"

#include "valtree/error.hpp"

namespace valtree {

Valuation Valuation::padic(unsigned long p) {
  if (!is_prime(p)) raise(Errc::not_prime, std::to_string(p) + " is not prime");
  Valuation v(Kind::padic);
  v.p_ = p;
  return v;
}

Valuation Valuation::order_at_irreducible(const UniPoly& q) {
  const UniPoly m = q.monic();
  if (!is_irreducible_over_q(m))
    raise(Errc::not_irreducible_modulus, "order valuation needs an irreducible polynomial, got " + q.str());
  Valuation v(Kind::order_at_irreducible);
  v.q_ = m;
  return v;
}

bool Valuation::applies_to(FieldKind kind) const {
  return kind_ == Kind::padic ? kind == FieldKind::rational : kind == FieldKind::ratfunc;
}

Field Valuation::natural_field() const {
  return kind_ == Kind::padic ? Field::rationals() : Field::rational_functions();
}

std::string Valuation::str() const {
  switch (kind_) {
    case Kind::padic: return "padic(" + std::to_string(p_) + ")";
    case Kind::order_at_zero: return "order_at_zero";
    case Kind::order_at_infinity: return "order_at_infinity";
    case Kind::order_at_irreducible: return "order_at(" + q_.str() + ")";
  }
  return "?";
}

namespace {

std::int64_t multiplicity(UniPoly p, const UniPoly& q) {
  std::int64_t m = 0;
  while (true) {
    auto [quo, rem] = UniPoly::divmod(p, q);
    if (!rem.is_zero()) return m;
    p = std::move(quo);
    ++m;
  }
}

}  // namespace

ExtInt valuate(const Valuation& v, const FieldElem& x) {
  if (!v.applies_to(x.kind()))
    raise(Errc::incompatible_valuation,
          v.str() + " does not apply to " + std::string(field_kind_name(x.kind())) + " elements");
  if (x.is_zero()) return ExtInt::infinity();
  if (v.kind() == Valuation::Kind::padic) return x.as_rational().padic_valuation(v.prime());
  const RatFunc& f = x.as_ratfunc();
  switch (v.kind()) {
    case Valuation::Kind::order_at_zero:
      return ExtInt(static_cast<std::int64_t>(f.num().lowest_index()) -
                    static_cast<std::int64_t>(f.den().lowest_index()));
    case Valuation::Kind::order_at_infinity:
      return ExtInt(static_cast<std::int64_t>(f.den().degree()) - f.num().degree());
    case Valuation::Kind::order_at_irreducible:
      return ExtInt(multiplicity(f.num(), v.irreducible()) - multiplicity(f.den(), v.irreducible()));
    case Valuation::Kind::padic: break;
  }
  raise(Errc::invariant_violation, "unhandled valuation kind");
}

FieldElem uniformizer(const Valuation& v) {
  switch (v.kind()) {
    case Valuation::Kind::padic: return Rational(static_cast<long>(v.prime()));
    case Valuation::Kind::order_at_zero: return RatFunc(UniPoly::x());
    case Valuation::Kind::order_at_infinity: return RatFunc::power_of_t(-1);
    case Valuation::Kind::order_at_irreducible: return RatFunc(v.irreducible());
  }
  raise(Errc::invariant_violation, "unhandled valuation kind");
}

bool is_integral(const Valuation& v, const FieldElem& x) { return valuate(v, x) >= ExtInt(0); }

}  // namespace valtree
