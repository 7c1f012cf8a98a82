#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "rhocalc/error.hpp"

namespace rhocalc {

/// Rational power of the scale s, kept as a reduced fraction num/den.
///
/// Denominators are capped at kMaxDenominator so that nested roots cannot blow
/// up the number of distinct exponents a series may carry.
class Exponent {
 public:
  static constexpr std::int64_t kMaxDenominator = 64;

  constexpr Exponent() = default;
  // Integers convert implicitly: `Exponent e = 10;` reads naturally.
  constexpr Exponent(std::int64_t value) : num_(value), den_(1) {}  // NOLINT

  Exponent(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ExponentRange("exponent with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
    if (den_ > kMaxDenominator) {
      throw ExponentRange("exponent denominator " + std::to_string(den_) + " exceeds " +
                          std::to_string(kMaxDenominator));
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Smallest integer >= this exponent.
  constexpr std::int64_t ceil() const noexcept {
    if (num_ >= 0) return (num_ + den_ - 1) / den_;
    return -((-num_) / den_);
  }

  /// Largest integer <= this exponent.
  constexpr std::int64_t floor() const noexcept {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Exponent operator+(Exponent a, Exponent b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Exponent operator-(Exponent a, Exponent b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Exponent operator-(Exponent a) { return {-a.num_, a.den_}; }
  friend Exponent operator*(Exponent a, Exponent b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Exponent operator/(Exponent a, Exponent b) {
    if (b.num_ == 0) throw ExponentRange("exponent division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  Exponent& operator+=(Exponent other) { return *this = *this + other; }
  Exponent& operator-=(Exponent other) { return *this = *this - other; }

  friend constexpr bool operator==(Exponent a, Exponent b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Exponent min(Exponent a, Exponent b) { return b < a ? b : a; }
inline Exponent max(Exponent a, Exponent b) { return a < b ? b : a; }

}  // namespace rhocalc
