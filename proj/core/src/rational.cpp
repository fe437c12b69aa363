#include "valtree/rational.hpp"

#include <cctype>

#include "valtree/error.hpp"

namespace valtree {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) raise(Errc::division_by_zero, "rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string a = s.substr(0, slash);
  const std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
    raise(Errc::parse_error, "bad rational literal '" + std::string(text) + "'");
  return Rational(Integer(a[0] == '+' ? a.substr(1) : a), Integer(b));
}

Rational Rational::inverse() const {
  if (is_zero()) raise(Errc::division_by_zero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(Errc::division_by_zero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

ExtInt Rational::padic_valuation(unsigned long p) const {
  if (is_zero()) return ExtInt::infinity();
  mpz_t rest;
  mpz_init(rest);
  const Integer pz(p);
  const auto up = mpz_remove(rest, q_.get_num_mpz_t(), pz.get_mpz_t());
  const auto down = mpz_remove(rest, q_.get_den_mpz_t(), pz.get_mpz_t());
  mpz_clear(rest);
  return ExtInt(static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down));
}

Rational pow2(std::int64_t k) { return pow(Rational(2), k); }

Rational pow(const Rational& base, std::int64_t k) {
  if (k < 0) return pow(base.inverse(), -k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(num, den);
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace valtree
