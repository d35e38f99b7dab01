#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cubulate {

// Exact rational with 64-bit numerator / positive denominator, always reduced.
// Used for every user-facing constant (E, K, L, D, ...) so that threshold
// comparisons against integer graph distances are exact.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;

  // Accepts "7", "-3", "2.5", "3/4".
  static Rational parse(std::string_view text);
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

}  // namespace cubulate
