#include <gtest/gtest.h>

#include <random>

#include "truncmul/error.hpp"
#include "truncmul/protocol.hpp"

using namespace truncmul;

namespace {

ProtocolParams example_params(unsigned r = 2) { return {13, 14, 22, 5, r, Int(6173)}; }

std::string violated(const ProtocolParams& p) {
  try {
    validate_params(p);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintViolated);
    return e.detail();
  }
  return "";
}

}  // namespace

TEST(ValidateParams, ExampleIsToy) {
  EXPECT_EQ(validate_params(example_params(2)), ParamClass::Toy);
  EXPECT_EQ(validate_params(example_params(1)), ParamClass::Toy);
}

TEST(ValidateParams, NamesViolatedInequality) {
  EXPECT_EQ(violated(example_params(5)), "p>m+q+r");
  EXPECT_EQ(violated(example_params(3)), "p>m+q+r");  // 22 > 22 is false

  auto p = example_params();
  p.p = 23;
  EXPECT_EQ(violated(p), "p+q=l+m");
  p = example_params();
  p.z = 4095;  // 12 bits
  EXPECT_EQ(violated(p), "2^(l-1)<=z<2^l");
  p.z = 8192;
  EXPECT_EQ(violated(p), "2^(l-1)<=z<2^l");
  p = example_params();
  p.r = 0;
  EXPECT_EQ(violated(p), "r>=1");
}

TEST(ValidateParams, FullSizeIsFull) {
  ProtocolParams p{2048, 512, 2048, 512, 129, pow2(2047) + 1};
  EXPECT_EQ(validate_params(p), ParamClass::Full);
  p.r = 128;
  EXPECT_EQ(validate_params(p), ParamClass::Toy);
}

TEST(GenParams, DerivesPAndIsDeterministic) {
  const auto a = gen_params(1, 13, 14, 5, 2);
  const auto b = gen_params(1, 13, 14, 5, 2);
  EXPECT_EQ(a.p, 22u);
  EXPECT_EQ(a.z, b.z);
  EXPECT_GE(a.z, 4096);
  EXPECT_LT(a.z, 8192);
  EXPECT_NE(gen_params(2, 13, 14, 5, 2).z, a.z);
}

TEST(GenParams, RejectsInfeasibleP) {
  try {
    gen_params(2, 16, 16, 14, 4);
    FAIL() << "expected ConstraintViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintViolated);
    EXPECT_EQ(e.detail(), "p>m+q+r");
  }
}

TEST(GenParams, FullSizeZHasExactlyLBits) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = gen_params(seed, 2048, 512, 512, 129);
    EXPECT_EQ(bit_length(p.z), 2048u);
  }
}

TEST(TruncF, Examples) {
  const auto p = example_params();
  EXPECT_EQ(trunc_f(Int(12345), p), 22131);
  EXPECT_EQ(trunc_f(Int(12345), p) * 32, 708192);  // the value the worked example prints
  EXPECT_EQ(trunc_f(Int(0), p), 0);
  EXPECT_EQ(trunc_f(Int(1), p), 192);
}

TEST(TruncF, CongruenceDecompositionHolds) {
  // x*z == 2^q*u + y (mod 2^p) with 0 <= y < 2^q, bit-exact.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const unsigned l = 8 + rng() % 200, m = 4 + rng() % 200, q = 1 + rng() % 64;
    if (l + m <= 2 * q) continue;
    const unsigned p = l + m - q;
    SeededRng gen(rng(), RngStream::Harness);
    const Int z = pow2(l - 1) + gen.random_bits(l - 1);
    const Int x = gen.random_bits(m);
    const Int u = trunc_f(x, z, p, q);
    ASSERT_GE(u, 0);
    ASSERT_LT(u, pow2(p - q));
    const Int y = mod_pow2(x * z, p) - pow2(q) * u;
    ASSERT_GE(y, 0);
    ASSERT_LT(y, pow2(q));
    ASSERT_EQ(mod_pow2(x * z - pow2(q) * u - y, p), 0);
  }
}

TEST(SharedKey, TrivialCases) {
  const auto p = example_params();
  EXPECT_EQ(shared_key(Int(0), Int(98765), p), 0);
  // 2^(r+m) = 2^16; v below it with x = 1 gives 0.
  EXPECT_EQ(shared_key(Int(1), Int(65535), p), 0);
  EXPECT_EQ(shared_key(Int(1), Int(65536), p), 1);
}

TEST(SharedKey, ExampleExchangeBothWays) {
  const auto p = example_params();
  const auto t = exchange_with_secrets(Int(12345), Int(54321), p);
  // Direct evaluation of both formulas, independent of shared_key.
  const Int u = (Int(12345) * 6173 % (1 << 22)) / 32;
  const Int v = (Int(54321) * 6173 % (1 << 22)) / 32;
  const Int wa = (Int(12345) * v % (1 << 17)) / (1 << 16);
  const Int wb = (Int(54321) * u % (1 << 17)) / (1 << 16);
  EXPECT_EQ(t.U, u);
  EXPECT_EQ(t.V, v);
  EXPECT_EQ(t.W_a, wa);
  EXPECT_EQ(t.W_b, wb);
  EXPECT_EQ(t.agree, wa == wb);
  RecordProperty("W_a", to_decimal(t.W_a));
  RecordProperty("W_b", to_decimal(t.W_b));
}

TEST(Exchange, DeterministicPerSeed) {
  const auto p = gen_params(3, 2048, 512, 512, 129);
  const auto a = exchange(9, p);
  const auto b = exchange(9, p);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.W_a, b.W_a);
  EXPECT_NE(exchange(10, p).x, a.x);
  EXPECT_GE(a.x, 1);
  EXPECT_LT(a.x, pow2(512));
}

TEST(Exchange, EqualSecretsAgree) {
  const auto p = example_params();
  for (int x = 1; x < 200; ++x) {
    EXPECT_TRUE(exchange_with_secrets(Int(x), Int(x), p).agree);
  }
}

TEST(Exchange, ToyAgreementIsMeasured) {
  // At r=2 agreement is not guaranteed; the rate is recorded, not assumed.
  const auto p = example_params();
  int agree = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto t = exchange(seed, p);
    ASSERT_GE(t.x, 1);
    ASSERT_LT(t.x, 1 << 14);
    agree += t.agree;
  }
  RecordProperty("toy_agree_per_1000", agree);
  EXPECT_GT(agree, 0);
  EXPECT_LE(agree, 1000);
}
