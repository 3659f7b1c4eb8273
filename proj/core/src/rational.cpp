#include "truncmul/rational.hpp"

#include "truncmul/error.hpp"

namespace truncmul {

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (sgn(den_) == 0) {
    throw Error(ErrorKind::DegenerateInput, "zero denominator");
  }
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Int Rational::floor() const { return floor_div(num_, den_); }

Int Rational::ceil() const { return ceil_div(num_, den_); }

std::string Rational::to_decimal_truncated(unsigned places) const {
  Int scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Int scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), Int(num_ * scale).get_mpz_t(),
             den_.get_mpz_t());

  const bool negative = sgn(scaled) < 0 || (sgn(scaled) == 0 && sgn(num_) < 0);
  Int mag = abs(scaled);
  Int whole, frac;
  mpz_tdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), mag.get_mpz_t(),
              scale.get_mpz_t());

  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (places > 0) {
    std::string f = frac.get_str();
    out += '.';
    out.append(places - f.size(), '0');
    out += f;
  }
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(Int(a.num_ * b.den_), Int(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

Int round_half_to_zero(const Int& num, const Int& den) {
  if (sgn(den) == 0) {
    throw Error(ErrorKind::DegenerateInput, "zero denominator");
  }
  Int n = abs(num);
  Int d = abs(den);
  Int k, rem;
  mpz_tdiv_qr(k.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * rem > d) ++k;
  return (sgn(num) * sgn(den) < 0) ? Int(-k) : k;
}

Int round_half_to_zero(const Rational& r) {
  return round_half_to_zero(r.num(), r.den());
}

}  // namespace truncmul
