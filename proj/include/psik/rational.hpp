#pragma once

// Exact arithmetic for verdict-bearing comparisons. Every threshold in
// the criteria layer is an ExactRational; no floating point is allowed
// anywhere a verdict depends on it.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace psik {

// Arbitrary-precision integer. psi_k(Z_n) grows like n^(k+1), far past
// any fixed-width type for the k ranges the CLI accepts.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, int exp) {
  if (exp < 0) throw std::invalid_argument("big_pow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// Reduced fraction with positive denominator.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("ExactRational: zero denominator");
    normalize();
  }
  ExactRational(long long num, long long den) : ExactRational(BigInt(num), BigInt(den)) {}
  explicit ExactRational(BigInt value) : num_(std::move(value)), den_(1) {}
  explicit ExactRational(long long value) : num_(value), den_(1) {}

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  // Exact three-way comparison by cross-multiplication.
  std::strong_ordering operator<=>(const ExactRational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const ExactRational& o) const { return num_ == o.num_ && den_ == o.den_; }

  ExactRational operator*(const ExactRational& o) const {
    return ExactRational(num_ * o.num_, den_ * o.den_);
  }
  ExactRational operator+(const ExactRational& o) const {
    return ExactRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  ExactRational operator-(const ExactRational& o) const {
    return ExactRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }

  /// Canonical "num/den" text, always with the denominator.
  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

enum class Ordering { less, equal, greater };

/// Three-way comparison as a named operation.
inline Ordering compare(const ExactRational& a, const ExactRational& b) {
  auto c = a <=> b;
  if (c == std::strong_ordering::less) return Ordering::less;
  if (c == std::strong_ordering::greater) return Ordering::greater;
  return Ordering::equal;
}

}  // namespace psik
