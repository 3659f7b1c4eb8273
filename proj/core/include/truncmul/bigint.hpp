#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace truncmul {

/// Arbitrary-precision signed integer used throughout the toolkit.
using Int = mpz_class;

Int pow2(unsigned long k);

/// Nonnegative remainder of `a` modulo 2^k (low k bits for a >= 0).
Int mod_pow2(const Int& a, unsigned long k);

/// floor(a / 2^k).
Int shift_down(const Int& a, unsigned long k);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

/// Number of significant bits of |a|; 0 for a == 0.
unsigned long bit_length(const Int& a);

/// Strict decimal parsing: an optional leading '-' (only when `allow_negative`)
/// followed by one or more ASCII digits. Throws Error(ParseError) otherwise.
Int parse_decimal(std::string_view text, bool allow_negative = false);

std::string to_decimal(const Int& a);

}  // namespace truncmul
