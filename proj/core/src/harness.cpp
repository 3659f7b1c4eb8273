#include "truncmul/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "truncmul/attack.hpp"
#include "truncmul/error.hpp"
#include "truncmul/protocol.hpp"

namespace truncmul {

std::vector<Int> brute_force_preimages(const Int& z, unsigned p, unsigned q,
                                       const Int& u, unsigned m) {
  if (m > kOracleMaxBits) {
    throw Error(ErrorKind::OracleTooLarge,
                "m=" + std::to_string(m) + " exceeds " + std::to_string(kOracleMaxBits));
  }
  std::vector<Int> out;
  const std::uint64_t count = std::uint64_t{1} << m;

  // Accumulates x*z mod 2^p additively instead of multiplying, so the scan
  // does not share a code path with trunc_f.
  const Int step = mod_pow2(z, p);
  const Int modulus = pow2(p);
  const Int lo = u * pow2(q);
  const Int hi = lo + pow2(q);
  Int acc = 0;
  for (std::uint64_t x = 0; x < count; ++x) {
    if (acc >= lo && acc < hi) out.emplace_back(static_cast<unsigned long>(x));
    acc += step;
    if (acc >= modulus) acc -= modulus;
  }
  return out;
}

std::string_view to_string(TrialMode mode) {
  switch (mode) {
    case TrialMode::Attack: return "attack";
    case TrialMode::Exchange: return "exchange";
    case TrialMode::OracleCheck: return "oracle-check";
  }
  return "attack";
}

std::optional<TrialMode> parse_trial_mode(std::string_view text) {
  for (auto mode : {TrialMode::Attack, TrialMode::Exchange, TrialMode::OracleCheck}) {
    if (to_string(mode) == text) return mode;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

ProtocolParams trial_params(const TrialConfig& cfg, std::uint64_t seed) {
  if (!cfg.fixed_z) return gen_params(seed, cfg.l, cfg.m, cfg.q, cfg.r);
  ProtocolParams params{cfg.l, cfg.m, cfg.l + cfg.m - cfg.q, cfg.q, cfg.r, *cfg.fixed_z};
  validate_params(params);
  return params;
}

}  // namespace

TrialRecord run_trial(const TrialConfig& cfg, std::uint64_t seed) {
  TrialRecord rec;
  rec.seed = seed;
  rec.l = cfg.l;
  rec.m = cfg.m;
  rec.q = cfg.q;
  rec.r = cfg.r;
  rec.p = cfg.l + cfg.m >= cfg.q ? cfg.l + cfg.m - cfg.q : 0;

  const auto start = Clock::now();
  try {
    const ProtocolParams params = trial_params(cfg, seed);

    Transcript t;
    if (cfg.fixed_secret) {
      SeededRng rng(seed, RngStream::Secrets);
      t = exchange_with_secrets(*cfg.fixed_secret, sample_secret(rng, params.m), params);
    } else {
      t = exchange(seed, params);
    }
    rec.agree = t.agree;

    if (cfg.mode != TrialMode::Exchange) {
      const AttackInput in{params.z, params.p, params.q, params.m, t.U, false};

      const LatticeProblem problem = build_problem(in);
      const auto t0 = Clock::now();
      const ReductionResult reduction =
          gauss_reduce(problem.family.basis(problem.p), problem.form);
      const auto t1 = Clock::now();
      const AttackResult result = search_problem(problem, reduction, cfg.search_cap);
      const auto t2 = Clock::now();
      rec.reduce_time_ns = elapsed_ns(t0, t1);
      rec.search_time_ns = elapsed_ns(t1, t2);

      rec.reduce_iterations = result.reduce_iterations;
      rec.candidate_count = result.candidates.size();
      rec.preimage_found = !result.candidates.empty();
      rec.secret_recovered =
          std::any_of(result.candidates.begin(), result.candidates.end(),
                      [&](const Candidate& c) { return c.x == t.x; });
      if (rec.preimage_found) {
        const auto keys = keys_from_candidates(result, in, t.V, params.r);
        rec.key_matched = std::any_of(keys.begin(), keys.end(),
                                      [&](const RecoveredKey& k) { return k.key == t.W_b; });
      }

      if (cfg.mode == TrialMode::OracleCheck) {
        std::vector<Int> expected;
        for (auto& x : brute_force_preimages(params.z, params.p, params.q, problem.u,
                                             params.m)) {
          const Int y = mod_pow2(x * params.z, params.p) - problem.u * pow2(params.q);
          if (y < problem.bounds.b2) expected.push_back(std::move(x));
        }
        std::vector<Int> got;
        for (const auto& c : result.candidates) got.push_back(c.x);
        std::sort(got.begin(), got.end());
        rec.oracle_match = got == expected;
        if (!rec.oracle_match) rec.error = "oracle_mismatch";
      }
    }
  } catch (const Error& e) {
    rec.error = std::string(to_string(e.kind()));
  } catch (const std::exception&) {
    rec.error = "internal";
  }
  rec.total_time_ns = elapsed_ns(start, Clock::now());
  return rec;
}

std::vector<TrialRecord> run_trials(const TrialConfig& cfg) {
  if (cfg.trials == 0) {
    throw Error(ErrorKind::ConstraintViolated, "trials>=1");
  }
  // Surface configuration errors once, up front.
  if (cfg.fixed_z) {
    validate_params({cfg.l, cfg.m, cfg.l + cfg.m - cfg.q, cfg.q, cfg.r, *cfg.fixed_z});
  } else {
    gen_params(cfg.seed_base, cfg.l, cfg.m, cfg.q, cfg.r);
  }

  std::vector<TrialRecord> records(cfg.trials);
  unsigned threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cfg.trials)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++) {
      records[i] = run_trial(cfg, cfg.seed_base + i);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::string_view csv_header() {
  return "seed,l,m,p,q,r,secret_recovered,preimage_found,key_matched,"
         "candidate_count,reduce_iterations,reduce_time_ns,search_time_ns,"
         "total_time_ns,error";
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << csv_header() << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << r.l << ',' << r.m << ',' << r.p << ',' << r.q << ','
        << r.r << ',' << (r.secret_recovered ? 1 : 0) << ','
        << (r.preimage_found ? 1 : 0) << ',' << (r.key_matched ? 1 : 0) << ','
        << r.candidate_count << ',' << r.reduce_iterations << ','
        << r.reduce_time_ns << ',' << r.search_time_ns << ',' << r.total_time_ns
        << ',' << r.error << '\n';
  }
}

}  // namespace truncmul
