#pragma once

// Seeded random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "valtree/mat.hpp"
#include "valtree/ratfunc.hpp"

namespace valtree::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  /// Numerator in [-bound, bound], denominator a product of small primes, sometimes zero.
  Rational rational(long bound = 60) {
    if (coin(0.05)) return Rational(0);
    static const long primes[] = {2, 3, 5, 7};
    long den = 1;
    const long factors = integer(0, 3);
    for (long i = 0; i < factors; ++i) den *= primes[index(4)];
    long num = integer(-bound, bound);
    // Multiply in prime powers so numerators carry valuations too.
    if (coin(0.3)) num *= primes[index(4)];
    return Rational(Integer(num), Integer(den));
  }

  Rational nonzero_rational(long bound = 60) {
    Rational r = rational(bound);
    while (r.is_zero()) r = rational(bound);
    return r;
  }

  UniPoly poly(int max_deg = 3, long bound = 6) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(integer(0, max_deg));
    for (int k = 0; k <= deg; ++k) c.push_back(coin(0.3) ? Rational(0) : Rational(integer(-bound, bound)));
    return UniPoly(c);
  }

  /// Elements of Q(t) with a monomial factor t^k, so order valuations vary.
  RatFunc ratfunc() {
    if (coin(0.05)) return RatFunc(Rational(0));
    UniPoly num = poly();
    while (num.is_zero()) num = poly();
    UniPoly den = poly(2);
    while (den.is_zero()) den = poly(2);
    RatFunc r(num, den);
    return r * RatFunc::power_of_t(integer(-3, 3));
  }

  FieldElem element(const Field& f) {
    switch (f.kind()) {
      case FieldKind::rational: return rational(12);
      case FieldKind::ratfunc: return ratfunc();
      default: return f.embed(Rational(integer(-5, 5)));
    }
  }

  FieldElem nonzero_element(const Field& f) {
    FieldElem e = element(f);
    while (e.is_zero()) e = element(f);
    return e;
  }

  /// Random SL(n) element: elementary factors interleaved with diagonal ones.
  Mat sl(const Field& f, std::size_t n, int factors = 4) {
    Mat g = Mat::identity(f, n);
    for (int s = 0; s < factors; ++s) {
      if (coin(0.25)) {
        std::vector<FieldElem> d(n, f.one());
        const std::size_t i = index(n);
        std::size_t j = index(n);
        while (j == i) j = index(n);
        const FieldElem x = nonzero_element(f);
        d[i] = x;
        d[j] = x.inverse();
        g = g * Mat::diagonal(f, d);
      } else {
        const std::size_t i = index(n);
        std::size_t j = index(n);
        while (j == i) j = index(n);
        g = g * Mat::elementary(f, n, i, j, element(f));
      }
    }
    return g;
  }

  /// Random uni-upper-triangular n x n matrix.
  Mat unipotent(const Field& f, std::size_t n) {
    std::vector<FieldElem> e(n * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = f.one();
      for (std::size_t j = i + 1; j < n; ++j) e[i * n + j] = coin(0.2) ? f.zero() : element(f);
    }
    return Mat(f, n, e);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace valtree::testing
