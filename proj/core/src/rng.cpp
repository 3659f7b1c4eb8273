#include "truncmul/rng.hpp"

#include <vector>

namespace truncmul {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, RngStream stream)
    : engine_(make_engine(seed, static_cast<std::uint64_t>(stream))) {}

Int SeededRng::random_bits(unsigned bits) {
  if (bits == 0) return Int(0);
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = engine_();
  Int r;
  // Most significant word first, native endianness within a word.
  mpz_import(r.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
  return mod_pow2(r, bits);
}

std::uint64_t SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  // Rejection sampling rather than std::uniform_int_distribution, whose
  // algorithm is implementation-defined.
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + v % range;
}

}  // namespace truncmul
