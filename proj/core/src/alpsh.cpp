#include "valtree/alpsh.hpp"

#include "valtree/error.hpp"

namespace valtree {

RingFamily RingFamily::z_inv_s(unsigned long s) {
  if (s == 0) raise(Errc::invalid_argument, "Z[1/0] is not a ring of this family");
  std::vector<unsigned long> primes;
  unsigned long rest = s;
  unsigned long radical = 1;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    radical *= p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) {
    primes.push_back(rest);
    radical *= rest;
  }
  return RingFamily(Kind::z_inv_s, radical, std::move(primes));
}

Field RingFamily::fraction_field() const {
  return kind_ == Kind::z_inv_s ? Field::rationals() : Field::rational_functions();
}

std::string RingFamily::str() const {
  return kind_ == Kind::z_inv_s ? "Z[1/" + std::to_string(s_) + "]" : "Z[t,1/t]";
}

std::vector<Valuation> synthesize_valuations(const RingFamily& ring) {
  std::vector<Valuation> out;
  if (ring.kind() == RingFamily::Kind::laurent_z) return {Valuation::order_at_zero(), Valuation::order_at_infinity()};
  for (unsigned long p : ring.primes()) out.push_back(Valuation::padic(p));
  return out;
}

bool integrality_filter(const FieldElem& x, const std::vector<Valuation>& vs) {
  for (const auto& v : vs) {
    const FieldElem y = x.kind() == FieldKind::rational ? v.natural_field().coerce(x) : x;
    if (!is_integral(v, y)) return false;
  }
  return true;
}

bool isotropy_certificate(const Mat& g, const std::vector<Valuation>& vs) {
  if (!g.is_special_linear()) raise(Errc::not_special_linear, "det != 1 for " + g.key());
  for (const auto& c : char_poly(g))
    if (!integrality_filter(c, vs)) return false;
  return true;
}

}  // namespace valtree
