#include "truncmul/bigint.hpp"

#include "truncmul/error.hpp"

namespace truncmul {

Int pow2(unsigned long k) {
  Int r;
  mpz_setbit(r.get_mpz_t(), k);
  return r;
}

Int mod_pow2(const Int& a, unsigned long k) {
  Int r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

Int shift_down(const Int& a, unsigned long k) {
  Int r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int ceil_div(const Int& a, const Int& b) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

unsigned long bit_length(const Int& a) {
  if (sgn(a) == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

Int parse_decimal(std::string_view text, bool allow_negative) {
  std::string_view digits = text;
  bool negative = false;
  if (allow_negative && !digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorKind::ParseError, "empty integer");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError,
                  "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  Int value(std::string(digits), 10);
  return negative ? Int(-value) : value;
}

std::string to_decimal(const Int& a) { return a.get_str(10); }

}  // namespace truncmul
