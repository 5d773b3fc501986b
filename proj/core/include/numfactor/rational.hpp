#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace numfactor {

/// Exact reduced fraction with positive denominator. Elasticities are kept
/// in this form so comparisons like 10/3 == 20/6 hold exactly.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}

  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline std::string to_string(const Rational& r) {
  if (r.den() == 1) return std::to_string(r.num());
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

}  // namespace numfactor
