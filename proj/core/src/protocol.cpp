#include "truncmul/protocol.hpp"

#include "truncmul/error.hpp"

namespace truncmul {

namespace {

constexpr unsigned kFullSecurityR = 128;

void require(bool ok, const char* relation) {
  if (!ok) throw Error(ErrorKind::ConstraintViolated, relation);
}

}  // namespace

std::string_view to_string(ParamClass c) {
  return c == ParamClass::Full ? "full" : "toy";
}

ParamClass validate_params(const ProtocolParams& params) {
  require(params.l >= 1, "l>=1");
  require(params.m >= 1, "m>=1");
  require(params.p >= 1, "p>=1");
  require(params.q >= 1, "q>=1");
  require(params.r >= 1, "r>=1");
  require(params.z >= pow2(params.l - 1) && params.z < pow2(params.l),
          "2^(l-1)<=z<2^l");
  // Widen to avoid unsigned wraparound on adversarial inputs.
  const std::uint64_t l = params.l, m = params.m, p = params.p, q = params.q,
                      r = params.r;
  require(p + q == l + m, "p+q=l+m");
  require(p > m + q + r, "p>m+q+r");
  return params.r > kFullSecurityR ? ParamClass::Full : ParamClass::Toy;
}

ProtocolParams gen_params(std::uint64_t seed, unsigned l, unsigned m,
                          unsigned q, unsigned r) {
  require(l >= 1, "l>=1");
  require(static_cast<std::uint64_t>(l) + m > q, "p+q=l+m");
  ProtocolParams params;
  params.l = l;
  params.m = m;
  params.q = q;
  params.r = r;
  params.p = l + m - q;

  SeededRng rng(seed, RngStream::Params);
  params.z = pow2(l - 1) + rng.random_bits(l - 1);
  validate_params(params);
  return params;
}

Int trunc_f(const Int& x, const Int& z, unsigned p, unsigned q) {
  return shift_down(mod_pow2(x * z, p), q);
}

Int trunc_f(const Int& x, const ProtocolParams& params) {
  return trunc_f(x, params.z, params.p, params.q);
}

Int shared_key(const Int& x, const Int& other_token, unsigned p, unsigned q,
               unsigned r, unsigned m) {
  const unsigned width = p > q ? p - q : 0;
  return shift_down(mod_pow2(x * other_token, width), r + m);
}

Int shared_key(const Int& x, const Int& other_token,
               const ProtocolParams& params) {
  return shared_key(x, other_token, params.p, params.q, params.r, params.m);
}

Int sample_secret(SeededRng& rng, unsigned m) {
  Int x;
  do {
    x = rng.random_bits(m);
  } while (sgn(x) == 0);
  return x;
}

Transcript exchange(std::uint64_t seed, const ProtocolParams& params) {
  SeededRng rng(seed, RngStream::Secrets);
  Int x = sample_secret(rng, params.m);
  Int y = sample_secret(rng, params.m);
  return exchange_with_secrets(x, y, params);
}

Transcript exchange_with_secrets(const Int& x, const Int& y,
                                 const ProtocolParams& params) {
  Transcript t;
  t.x = x;
  t.y = y;
  t.U = trunc_f(x, params);
  t.V = trunc_f(y, params);
  t.W_a = shared_key(x, t.V, params);
  t.W_b = shared_key(y, t.U, params);
  t.agree = t.W_a == t.W_b;
  return t;
}

}  // namespace truncmul
