#pragma once

#include <optional>
#include <string>

#include "tropic/rational.hpp"

namespace tropic {

/// Element of the max-plus semiring: an exact rational, or bottom (-inf).
/// operator+ is the semiring sum (max), operator* the semiring product
/// (ordinary addition); bottom is neutral for + and absorbing for *.
class Scalar {
 public:
  Scalar() : finite_(false) {}  // bottom
  Scalar(Rat v) : finite_(true), value_(std::move(v)) {}
  Scalar(int v) : Scalar(Rat(v)) {}
  Scalar(Int v) : Scalar(Rat(std::move(v))) {}

  static Scalar bottom() { return Scalar(); }
  static Scalar one() { return Scalar(0); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }
  const Rat& rat() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    return a.value_ >= b.value_ ? a : b;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return Scalar(a.value_ + b.value_);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Tropical inverse -v; undefined on bottom.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.is_bottom()) return b.is_finite();
    if (b.is_bottom()) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  /// "-inf" for bottom, canonical rational otherwise.
  std::string str() const;
  /// Accepts the tokens produced by str(). Returns nullopt on bad input.
  static std::optional<Scalar> parse(const std::string& token);

 private:
  bool finite_;
  Rat value_;
};

}  // namespace tropic
