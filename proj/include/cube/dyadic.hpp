#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace cube {

// Exact rational with a power-of-two denominator: value = num / 2^log_den.
// Stored reduced (num odd or zero). All arithmetic is exact; there are no
// floats anywhere on the computation paths that feed assertions.
class Dyadic {
 public:
  constexpr Dyadic() : num_(0), log_den_(0) {}
  constexpr Dyadic(long long integer) : num_(integer), log_den_(0) {}

  // num / 2^log_den, reduced on construction.
  static constexpr Dyadic from_ratio(long long num, int log_den) {
    if (log_den < 0) throw std::invalid_argument("Dyadic: negative log_den");
    Dyadic d;
    d.num_ = num;
    d.log_den_ = log_den;
    d.reduce();
    return d;
  }

  constexpr long long numerator() const { return num_; }
  constexpr int log_den() const { return log_den_; }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_negative() const { return num_ < 0; }

  friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
    int ld = a.log_den_ > b.log_den_ ? a.log_den_ : b.log_den_;
    return from_ratio(shifted(a.num_, ld - a.log_den_) + shifted(b.num_, ld - b.log_den_), ld);
  }
  friend constexpr Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }
  friend constexpr Dyadic operator*(Dyadic a, Dyadic b) {
    return from_ratio(a.num_ * b.num_, a.log_den_ + b.log_den_);
  }
  constexpr Dyadic operator-() const {
    Dyadic d;
    d.num_ = -num_;
    d.log_den_ = log_den_;
    return d;
  }
  Dyadic& operator+=(Dyadic o) { return *this = *this + o; }
  Dyadic& operator-=(Dyadic o) { return *this = *this - o; }
  Dyadic& operator*=(Dyadic o) { return *this = *this * o; }

  // Exact halving/doubling.
  constexpr Dyadic half() const { return from_ratio(num_, log_den_ + 1); }
  constexpr Dyadic twice() const { return from_ratio(2 * num_, log_den_); }

  friend constexpr bool operator==(Dyadic a, Dyadic b) {
    return a.num_ == b.num_ && a.log_den_ == b.log_den_;
  }
  friend constexpr std::strong_ordering operator<=>(Dyadic a, Dyadic b) {
    int ld = a.log_den_ > b.log_den_ ? a.log_den_ : b.log_den_;
    return shifted(a.num_, ld - a.log_den_) <=> shifted(b.num_, ld - b.log_den_);
  }

  // Serialized as "num/2^k", always with the explicit power.
  std::string str() const {
    return std::to_string(num_) + "/2^" + std::to_string(log_den_);
  }
  static Dyadic parse(const std::string& s);

  double to_double() const {  // display only
    return static_cast<double>(num_) / static_cast<double>(1LL << log_den_);
  }

 private:
  static constexpr long long shifted(long long v, int k) {
    if (k >= 62) throw std::overflow_error("Dyadic: shift overflow");
    return v << k;
  }
  constexpr void reduce() {
    if (num_ == 0) {
      log_den_ = 0;
      return;
    }
    while (log_den_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --log_den_;
    }
  }

  long long num_;
  int log_den_;
};

// 2^{-k} for k >= 0.
constexpr Dyadic dyadic_pow2_inv(int k) { return Dyadic::from_ratio(1, k); }

}  // namespace cube
