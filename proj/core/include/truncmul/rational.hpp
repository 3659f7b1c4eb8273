#pragma once

#include <compare>
#include <string>

#include "truncmul/bigint.hpp"

namespace truncmul {

/// Exact rational kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int numerator, Int denominator = 1);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Int floor() const;
  Int ceil() const;

  /// Decimal rendering truncated toward zero, e.g. 13.790 for places == 3.
  std::string to_decimal_truncated(unsigned places) const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

 private:
  Int num_;
  Int den_;
};

/// Nearest integer; exact halves go toward zero (so +-1/2 -> 0, 3/2 -> 1).
Int round_half_to_zero(const Rational& r);

/// Same as round_half_to_zero(Rational(num, den)) without normalizing first.
Int round_half_to_zero(const Int& num, const Int& den);

}  // namespace truncmul
