#include "valtree/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "valtree/error.hpp"

namespace valtree {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t UniPoly::lowest_index() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  if (leading().is_one()) return *this;
  const Rational inv = leading().inverse();
  return *this * inv;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer lcm = 1, content = 0;
  for (const auto& c : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) {
    Integer v = c.num() * (lcm / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(Integer(v / content));
  return UniPoly(std::move(out));
}

bool UniPoly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Rational& s) {
  if (s.is_zero()) return {};
  for (auto& c : a.c_) c *= s;
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) raise(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational lead_inv = b.leading().inverse();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational& top = rem[k + db];
    if (top.is_zero()) continue;
    const Rational q = top * lead_inv;
    quo[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.is_zero() ? UniPoly() : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UniPoly(Rational(1));
  // Primitive remainder sequence: keeps coefficients integral and small.
  UniPoly x = a.primitive_integer(), y = b.primitive_integer();
  while (!y.is_zero()) {
    if (y.is_constant()) return UniPoly(Rational(1));
    UniPoly r = divmod(x, y).second.primitive_integer();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<UniPoly, UniPoly, UniPoly> UniPoly::xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.str();
      out += '*';
    }
    out += var;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> primes;
  std::vector<unsigned> exps;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    primes.push_back(d);
    exps.push_back(e);
  }
  if (n > 1) {
    primes.push_back(n);
    exps.push_back(1);
  }
  std::vector<Integer> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= exps[i]; ++e) {
      pk *= primes[i];
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

bool has_rational_root(const UniPoly& f) {
  if (f.coeff(0).is_zero()) return true;
  const auto lead_divs = positive_divisors(f.leading().num());
  const auto const_divs = positive_divisors(f.coeff(0).num());
  for (const auto& a : const_divs)
    for (const auto& b : lead_divs)
      for (int s : {1, -1})
        if (f.eval(Rational(Integer(s * a), b)).is_zero()) return true;
  return false;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis = basis * UniPoly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    acc += basis * (ys[i] / denom);
  }
  return acc;
}

/// Searches for an integer factor of exact degree k of the primitive
/// integer polynomial f.
bool has_factor_of_degree(const UniPoly& f, int k) {
  struct Sample {
    Rational x;
    std::vector<Integer> divisors;
  };
  std::vector<Sample> candidates;
  for (long x = -24; x <= 24; ++x) {
    const Rational v = f.eval(Rational(x));
    if (v.is_zero()) return true;
    candidates.push_back({Rational(x), positive_divisors(v.num())});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Sample& a, const Sample& b) {
    return a.divisors.size() < b.divisors.size();
  });
  candidates.resize(static_cast<std::size_t>(k) + 1);

  std::vector<Rational> xs, ys(candidates.size());
  for (const auto& c : candidates) xs.push_back(c.x);
  const Integer lead = f.leading().num();

  // The sign of a factor is irrelevant, so the first value is taken positive.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == candidates.size()) {
      const UniPoly g = interpolate(xs, ys);
      if (g.degree() != k || !g.has_integer_coeffs()) return false;
      if (lead % g.leading().num() != 0) return false;
      return UniPoly::divmod(f, g).second.is_zero();
    }
    for (const auto& d : candidates[i].divisors) {
      ys[i] = Rational(d);
      if (search(i + 1)) return true;
      if (i == 0) continue;
      ys[i] = Rational(Integer(-d));
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

bool is_irreducible_over_q(const UniPoly& f) {
  if (f.degree() > kMaxIrreducibleDegree)
    raise(Errc::invalid_argument, "irreducibility test is capped at degree 6");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const UniPoly g = f.primitive_integer();
  if (has_rational_root(g)) return false;
  for (int k = 2; k <= g.degree() / 2; ++k)
    if (has_factor_of_degree(g, k)) return false;
  return true;
}

}  // namespace valtree
