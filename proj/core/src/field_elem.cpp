#include "valtree/field_elem.hpp"

#include "valtree/error.hpp"

namespace valtree {

std::string_view field_kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::rational: return "rational";
    case FieldKind::ratfunc: return "ratfunc";
    case FieldKind::algebraic: return "algebraic";
    case FieldKind::multipoly: return "multipoly";
  }
  return "unknown";
}

const Rational& FieldElem::as_rational() const {
  if (auto* p = std::get_if<Rational>(&v_)) return *p;
  raise(Errc::incompatible_field, "expected a rational, got " + std::string(field_kind_name(kind())));
}

const RatFunc& FieldElem::as_ratfunc() const {
  if (auto* p = std::get_if<RatFunc>(&v_)) return *p;
  raise(Errc::incompatible_field, "expected a rational function, got " + std::string(field_kind_name(kind())));
}

const AlgElem& FieldElem::as_algebraic() const {
  if (auto* p = std::get_if<AlgElem>(&v_)) return *p;
  raise(Errc::incompatible_field, "expected a number field element, got " + std::string(field_kind_name(kind())));
}

const MultiPoly& FieldElem::as_multipoly() const {
  if (auto* p = std::get_if<MultiPoly>(&v_)) return *p;
  raise(Errc::incompatible_field, "expected a polynomial, got " + std::string(field_kind_name(kind())));
}

bool FieldElem::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool FieldElem::is_one() const {
  switch (kind()) {
    case FieldKind::rational: return as_rational().is_one();
    case FieldKind::ratfunc: return as_ratfunc() == RatFunc(Rational(1));
    case FieldKind::algebraic: {
      const auto& a = as_algebraic();
      return a == AlgElem(a.field(), Rational(1));
    }
    case FieldKind::multipoly: return as_multipoly() == MultiPoly(Rational(1));
  }
  return false;
}

FieldElem FieldElem::inverse() const {
  switch (kind()) {
    case FieldKind::rational: return as_rational().inverse();
    case FieldKind::ratfunc: return as_ratfunc().inverse();
    case FieldKind::algebraic: return as_algebraic().inverse();
    case FieldKind::multipoly: {
      const auto& p = as_multipoly();
      if (!p.is_constant()) raise(Errc::invalid_argument, "polynomial ring has no inverse for " + p.str());
      return MultiPoly(p.constant_term().inverse());
    }
  }
  return {};
}

namespace {

/// Embeds rational `r` into the family of `like`.
FieldElem lift(const Rational& r, const FieldElem& like) {
  switch (like.kind()) {
    case FieldKind::rational: return r;
    case FieldKind::ratfunc: return RatFunc(r);
    case FieldKind::algebraic: return AlgElem(like.as_algebraic().field(), r);
    case FieldKind::multipoly: return MultiPoly(r);
  }
  return r;
}

template <class Op>
FieldElem binary(const FieldElem& a, const FieldElem& b, Op op) {
  if (a.kind() != b.kind()) {
    if (a.kind() == FieldKind::rational) return binary(lift(a.as_rational(), b), b, op);
    if (b.kind() == FieldKind::rational) return binary(a, lift(b.as_rational(), a), op);
    raise(Errc::incompatible_field, "cannot combine " + std::string(field_kind_name(a.kind())) + " with " +
                                        std::string(field_kind_name(b.kind())));
  }
  switch (a.kind()) {
    case FieldKind::rational: return op(a.as_rational(), b.as_rational());
    case FieldKind::ratfunc: return op(a.as_ratfunc(), b.as_ratfunc());
    case FieldKind::algebraic: return op(a.as_algebraic(), b.as_algebraic());
    case FieldKind::multipoly: return op(a.as_multipoly(), b.as_multipoly());
  }
  return {};
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> FieldElem { return x + y; });
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> FieldElem { return x - y; });
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> FieldElem { return x * y; });
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem operator-(const FieldElem& a) {
  return std::visit([](const auto& x) -> FieldElem { return -x; }, a.v_);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.kind() == b.kind()) return a.v_ == b.v_;
  if (a.kind() == FieldKind::rational) return lift(a.as_rational(), b) == b;
  if (b.kind() == FieldKind::rational) return a == lift(b.as_rational(), a);
  return false;
}

std::string FieldElem::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

FieldElem normalize(const FieldElem& x) { return x; }

FieldElem make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

FieldElem make_ratfunc(const UniPoly& num, const UniPoly& den) { return RatFunc(num, den); }

FieldElem Field::embed(const Rational& r) const {
  switch (kind_) {
    case FieldKind::rational: return r;
    case FieldKind::ratfunc: return RatFunc(r);
    case FieldKind::algebraic: return AlgElem(nf_, r);
    case FieldKind::multipoly: return MultiPoly(r);
  }
  return r;
}

bool Field::contains(const FieldElem& x) const {
  if (x.kind() != kind_) return false;
  if (kind_ == FieldKind::algebraic) return same_number_field(x.as_algebraic().field(), nf_);
  return true;
}

FieldElem Field::coerce(const FieldElem& x) const {
  if (contains(x)) return x;
  if (x.kind() == FieldKind::rational) return embed(x.as_rational());
  raise(Errc::incompatible_field, "element " + x.str() + " does not belong to " + str());
}

std::string Field::str() const {
  switch (kind_) {
    case FieldKind::rational: return "Q";
    case FieldKind::ratfunc: return "Q(t)";
    case FieldKind::algebraic: return "Q(" + nf_->symbol() + ")/(" + nf_->modulus().str(nf_->symbol()) + ")";
    case FieldKind::multipoly: return "Q[t1,t2,...]";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != FieldKind::algebraic || same_number_field(a.nf_, b.nf_);
}

}  // namespace valtree
