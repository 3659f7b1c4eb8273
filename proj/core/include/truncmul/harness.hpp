#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "truncmul/bigint.hpp"
#include "truncmul/lattice2d.hpp"

namespace truncmul {

inline constexpr unsigned kOracleMaxBits = 24;

/// Exhaustive scan of x in [0, 2^m) for trunc_f(x) == u, ascending.
/// Throws OracleTooLarge for m > 24.
std::vector<Int> brute_force_preimages(const Int& z, unsigned p, unsigned q,
                                       const Int& u, unsigned m);

enum class TrialMode { Attack, Exchange, OracleCheck };

std::string_view to_string(TrialMode mode);
std::optional<TrialMode> parse_trial_mode(std::string_view text);

struct TrialConfig {
  std::uint64_t seed_base = 0;
  std::size_t trials = 1;
  unsigned l = 0;
  unsigned m = 0;
  unsigned q = 0;
  unsigned r = 0;
  TrialMode mode = TrialMode::Attack;
  /// Use this z for every trial instead of drawing one per seed.
  std::optional<Int> fixed_z;
  /// Use this as Alice's secret instead of sampling it.
  std::optional<Int> fixed_secret;
  std::uint64_t search_cap = kDefaultSearchCap;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  unsigned l = 0, m = 0, p = 0, q = 0, r = 0;
  bool secret_recovered = false;
  bool preimage_found = false;
  bool key_matched = false;
  std::size_t candidate_count = 0;
  std::size_t reduce_iterations = 0;
  std::int64_t reduce_time_ns = 0;
  std::int64_t search_time_ns = 0;
  std::int64_t total_time_ns = 0;
  std::string error;

  // Not part of the CSV.
  bool agree = false;
  /// OracleCheck mode: candidate set equals the brute-force set.
  bool oracle_match = false;
};

/// Runs seeds seed_base .. seed_base + trials - 1. Per-trial failures are
/// written to the record's `error` and never abort the batch. Records come
/// back in seed order whatever the thread count.
std::vector<TrialRecord> run_trials(const TrialConfig& cfg);

/// One trial of `run_trials`.
TrialRecord run_trial(const TrialConfig& cfg, std::uint64_t seed);

std::string_view csv_header();
void write_csv(std::ostream& out, std::span<const TrialRecord> records);

}  // namespace truncmul
