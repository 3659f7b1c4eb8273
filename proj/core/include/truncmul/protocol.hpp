#pragma once

#include <cstdint>
#include <string_view>

#include "truncmul/bigint.hpp"
#include "truncmul/rng.hpp"

namespace truncmul {

/// Public parameters agreed by both parties.
///
/// Constraints: z has exactly l bits, p + q = l + m, p > m + q + r, and every
/// count is at least 1. Deployment requires r > 128; smaller r is accepted
/// and classified as a toy configuration.
struct ProtocolParams {
  unsigned l = 0;
  unsigned m = 0;
  unsigned p = 0;
  unsigned q = 0;
  unsigned r = 0;
  Int z;
};

enum class ParamClass { Toy, Full };

std::string_view to_string(ParamClass c);

/// Checks every ProtocolParams constraint. Throws Error(ConstraintViolated)
/// naming the first violated relation.
ParamClass validate_params(const ProtocolParams& params);

/// Derives p = l + m - q and draws z uniformly from [2^(l-1), 2^l).
ProtocolParams gen_params(std::uint64_t seed, unsigned l, unsigned m,
                          unsigned q, unsigned r);

/// The truncation map floor(((x * z) mod 2^p) / 2^q).
Int trunc_f(const Int& x, const Int& z, unsigned p, unsigned q);
Int trunc_f(const Int& x, const ProtocolParams& params);

/// floor(((x * other_token) mod 2^(p-q)) / 2^(r+m)).
Int shared_key(const Int& x, const Int& other_token, unsigned p, unsigned q,
               unsigned r, unsigned m);
Int shared_key(const Int& x, const Int& other_token,
               const ProtocolParams& params);

/// Uniform over [1, 2^m).
Int sample_secret(SeededRng& rng, unsigned m);

struct Transcript {
  Int x;
  Int y;
  Int U;
  Int V;
  Int W_a;
  Int W_b;
  bool agree = false;
};

/// Full honest run. Secrets come from the Secrets stream of `seed`.
Transcript exchange(std::uint64_t seed, const ProtocolParams& params);

Transcript exchange_with_secrets(const Int& x, const Int& y,
                                 const ProtocolParams& params);

}  // namespace truncmul
