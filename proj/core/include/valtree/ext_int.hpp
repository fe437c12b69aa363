#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace valtree {

/// An integer or +infinity; the codomain of a discrete valuation.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt infinity() {
    ExtInt r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return inf_ ? "+inf" : std::to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, ExtInt v) { return os << v.str(); }

 private:
  std::int64_t value_ = 0;
  bool inf_ = false;
};

constexpr ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }
constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

}  // namespace valtree
