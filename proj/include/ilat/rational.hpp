#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ilat/errors.hpp"

namespace ilat {

/// Exact fraction with a positive, reduced denominator.
class Rational {
 public:
  Rational() = default;

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidInputError("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

  Rational operator+(const Rational& b) const {
    return Rational(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
  }
  Rational operator-(const Rational& b) const {
    return Rational(num_ * b.den_ - b.num_ * den_, den_ * b.den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ilat
