#pragma once

#include <vector>

#include "valtree/mat.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

/// Z[1/s] (s replaced by its squarefree radical) or Z[t, 1/t].
class RingFamily {
 public:
  enum class Kind { z_inv_s, laurent_z };

  /// Throws Errc::invalid_argument for s = 0.
  static RingFamily z_inv_s(unsigned long s);
  static RingFamily laurent_z() { return RingFamily(Kind::laurent_z, 1, {}); }

  Kind kind() const { return kind_; }
  /// The radical of the requested s.
  unsigned long s() const { return s_; }
  const std::vector<unsigned long>& primes() const { return primes_; }
  Field fraction_field() const;
  std::string str() const;

 private:
  RingFamily(Kind k, unsigned long s, std::vector<unsigned long> primes)
      : kind_(k), s_(s), primes_(std::move(primes)) {}
  Kind kind_;
  unsigned long s_;
  std::vector<unsigned long> primes_;
};

/// One p-adic valuation per prime of s; order at 0 and at infinity for the
/// Laurent ring.
std::vector<Valuation> synthesize_valuations(const RingFamily& ring);

/// x integral for every valuation in vs. A rational x is first embedded in
/// each valuation's field.
bool integrality_filter(const FieldElem& x, const std::vector<Valuation>& vs);

/// Every characteristic polynomial coefficient of g passes the filter.
bool isotropy_certificate(const Mat& g, const std::vector<Valuation>& vs);

}  // namespace valtree
