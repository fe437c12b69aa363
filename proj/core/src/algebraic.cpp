#include "valtree/algebraic.hpp"

#include <algorithm>

#include "valtree/error.hpp"

namespace valtree {

std::shared_ptr<const NumberField> NumberField::make(const UniPoly& modulus, std::string symbol) {
  if (modulus.degree() < 1 || !modulus.leading().is_one() || !modulus.has_integer_coeffs())
    raise(Errc::not_irreducible_modulus, "modulus must be monic with integer coefficients: " + modulus.str());
  if (modulus.degree() > kMaxIrreducibleDegree)
    raise(Errc::not_irreducible_modulus, "modulus degree is capped at 6");
  if (!is_irreducible_over_q(modulus))
    raise(Errc::not_irreducible_modulus, "modulus is reducible over Q: " + modulus.str());
  return std::shared_ptr<const NumberField>(new NumberField(modulus, std::move(symbol)));
}

std::vector<Rational> NumberField::reduce(const UniPoly& p) const {
  std::vector<Rational> out = UniPoly::divmod(p, modulus_).second.coeffs();
  out.resize(degree());
  return out;
}

bool same_number_field(const NumberFieldPtr& a, const NumberFieldPtr& b) {
  return a == b || (a && b && a->modulus() == b->modulus());
}

AlgElem::AlgElem(NumberFieldPtr field, const UniPoly& value)
    : field_(std::move(field)), coords_(field_->reduce(value)) {}

bool AlgElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

namespace {
void require_same(const AlgElem& a, const AlgElem& b) {
  if (!same_number_field(a.field(), b.field()))
    raise(Errc::incompatible_field, "number field elements over different moduli");
}
}  // namespace

AlgElem AlgElem::inverse() const {
  if (is_zero()) raise(Errc::division_by_zero, "inverse of zero in number field");
  // The modulus is irreducible, so gcd(value, f) = 1 and s*value + t*f = 1.
  auto [g, s, t] = UniPoly::xgcd(as_poly(), field_->modulus());
  if (g.degree() != 0) raise(Errc::invariant_violation, "non-invertible element in a field");
  return AlgElem(field_, s);
}

std::vector<Rational> AlgElem::multiplication_matrix() const {
  const std::size_t d = field_->degree();
  std::vector<Rational> m(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    const AlgElem col = *this * AlgElem(field_, UniPoly::monomial(Rational(1), j));
    for (std::size_t i = 0; i < d; ++i) m[i * d + j] = col.coords_[i];
  }
  return m;
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
  require_same(a, b);
  AlgElem r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
  require_same(a, b);
  AlgElem r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  require_same(a, b);
  return AlgElem(a.field_, a.as_poly() * b.as_poly());
}

AlgElem operator-(const AlgElem& a) {
  AlgElem r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  return same_number_field(a.field_, b.field_) && a.coords_ == b.coords_;
}

}  // namespace valtree
