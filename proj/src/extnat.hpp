#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace orthomon {

// Exponents are capped at 2^32; operations that would produce a larger
// exponent raise Overflow. This is the documented implementation limit.
inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 32;

// A positive natural number or infinity, totally ordered with every finite
// value below infinity. Used for the parameters nu, mu and for element
// orders.
class ExtNat {
 public:
  constexpr ExtNat() noexcept : v_(kInfinite) {}  // defaults to infinity

  static ExtNat infinity() noexcept { return ExtNat(kInfinite); }

  static ExtNat finite(std::uint64_t v) {
    if (v < 1) raise(ErrorCode::Domain, "extended natural must be >= 1");
    if (v > kMaxExponent)
      raise(ErrorCode::Overflow, "value exceeds the 2^32 exponent cap");
    return ExtNat(v);
  }

  bool is_infinite() const noexcept { return v_ == kInfinite; }
  bool is_finite() const noexcept { return v_ != kInfinite; }

  std::uint64_t value() const {
    if (is_infinite()) raise(ErrorCode::Domain, "value() on infinity");
    return v_;
  }

  friend bool operator==(ExtNat a, ExtNat b) noexcept { return a.v_ == b.v_; }
  friend bool operator!=(ExtNat a, ExtNat b) noexcept { return a.v_ != b.v_; }
  // kInfinite is the largest representable uint64, so plain comparison gives
  // the extended order.
  friend bool operator<(ExtNat a, ExtNat b) noexcept { return a.v_ < b.v_; }
  friend bool operator<=(ExtNat a, ExtNat b) noexcept { return a.v_ <= b.v_; }
  friend bool operator>(ExtNat a, ExtNat b) noexcept { return a.v_ > b.v_; }
  friend bool operator>=(ExtNat a, ExtNat b) noexcept { return a.v_ >= b.v_; }

  // true iff finite and strictly below k
  bool lt(std::uint64_t k) const noexcept { return is_finite() && v_ < k; }
  // true iff infinite or >= k
  bool ge(std::uint64_t k) const noexcept { return is_infinite() || v_ >= k; }

  std::string str() const {
    return is_infinite() ? "inf" : std::to_string(v_);
  }

  // Accepts the token "inf" or a positive decimal integer.
  static ExtNat parse(std::string_view text) {
    if (text == "inf") return infinity();
    if (text.empty())
      raise(ErrorCode::Parse, "empty extended-natural token");
    std::uint64_t v = 0;
    for (char c : text) {
      if (c < '0' || c > '9')
        raise(ErrorCode::Parse,
              "bad extended-natural token '" + std::string(text) +
                  "' (expected digits or \"inf\")");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > kMaxExponent)
        raise(ErrorCode::Overflow, "value exceeds the 2^32 exponent cap");
    }
    return finite(v);
  }

 private:
  static constexpr std::uint64_t kInfinite = ~std::uint64_t{0};

  explicit constexpr ExtNat(std::uint64_t v) noexcept : v_(v) {}

  std::uint64_t v_;
};

}  // namespace orthomon
