#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "truncmul/attack.hpp"
#include "truncmul/error.hpp"
#include "truncmul/harness.hpp"
#include "truncmul/params_io.hpp"
#include "truncmul/protocol.hpp"

namespace truncmul::cli {

namespace {

struct ParamsArgs {
  unsigned l = 0, m = 0, q = 0, r = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct ExchangeArgs {
  std::string params;
  std::uint64_t seed = 0;
};

struct AttackArgs {
  std::string params;
  std::string token;
  bool token_scaled = false;
  std::optional<unsigned> m;
  std::string other_token;
  std::uint64_t cap = kDefaultSearchCap;
};

struct OracleArgs {
  std::string z, u;
  unsigned p = 0, q = 0, m = 0;
};

struct BenchArgs {
  unsigned l = 0, m = 0, q = 0, r = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string mode = "attack";
  unsigned threads = 0;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SearchSpaceExceeded: return kResourceCap;
    case ErrorKind::NoCandidates: return kNothingFound;
    default: return kUsage;
  }
}

ProtocolParams load_valid_params(const std::string& path, std::ostream& out) {
  ProtocolParams params = load_params(path);
  out << "class=" << to_string(validate_params(params)) << '\n';
  return params;
}

int cmd_params(const ParamsArgs& a, std::ostream& out, std::ostream& err) {
  const ProtocolParams params = gen_params(a.seed, a.l, a.m, a.q, a.r);
  const ParamClass cls = validate_params(params);
  if (a.out.empty()) {
    write_params(out, params);
    err << "class=" << to_string(cls) << '\n';
  } else {
    save_params(a.out, params);
    out << "p=" << params.p << '\n' << "class=" << to_string(cls) << '\n';
  }
  return kOk;
}

int cmd_exchange(const ExchangeArgs& a, std::ostream& out) {
  const ProtocolParams params = load_valid_params(a.params, out);
  const Transcript t = exchange(a.seed, params);
  out << "x=" << to_decimal(t.x) << '\n'
      << "y=" << to_decimal(t.y) << '\n'
      << "U=" << to_decimal(t.U) << '\n'
      << "V=" << to_decimal(t.V) << '\n'
      << "W_a=" << to_decimal(t.W_a) << '\n'
      << "W_b=" << to_decimal(t.W_b) << '\n'
      << "agree=" << (t.agree ? 1 : 0) << '\n';
  return kOk;
}

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  const ProtocolParams params = load_valid_params(a.params, out);
  const AttackInput in{params.z, params.p, params.q, a.m.value_or(params.m),
                       parse_decimal(a.token), a.token_scaled};
  std::optional<Int> other;
  if (!a.other_token.empty()) other = parse_decimal(a.other_token);

  const LatticeProblem problem = build_problem(in);
  const AttackResult result = recover_preimages(in, a.cap);

  out << "u=" << to_decimal(problem.u) << '\n'
      << "B1=" << to_decimal(problem.bounds.b1) << '\n'
      << "B2=" << to_decimal(problem.bounds.b2) << '\n';
  for (const auto& c : result.candidates) {
    out << "x=" << to_decimal(c.x) << " y=" << to_decimal(c.y)
        << (c.positive ? "" : " non-positive") << '\n';
  }
  out << "candidates=" << result.candidates.size() << '\n'
      << "unique=" << (result.unique ? 1 : 0) << '\n';
  if (result.candidates.empty()) return kNothingFound;

  if (other) {
    for (const auto& k : keys_from_candidates(result, in, *other, params.r)) {
      out << "key=" << to_decimal(k.key) << " multiplicity=" << k.multiplicity << '\n';
    }
  }
  return kOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Int z = parse_decimal(a.z);
  if (sgn(z) <= 0) throw Error(ErrorKind::DegenerateInput, "z must be >= 1");
  for (const auto& x : brute_force_preimages(z, a.p, a.q, parse_decimal(a.u), a.m)) {
    out << to_decimal(x) << '\n';
  }
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  TrialConfig cfg;
  cfg.seed_base = a.seed;
  cfg.trials = a.trials;
  cfg.l = a.l;
  cfg.m = a.m;
  cfg.q = a.q;
  cfg.r = a.r;
  cfg.threads = a.threads;
  const auto mode = parse_trial_mode(a.mode);
  if (!mode) throw Error(ErrorKind::ParseError, "unknown mode '" + a.mode + "'");
  cfg.mode = *mode;

  const auto records = run_trials(cfg);
  {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + a.out);
    write_csv(file, records);
  }

  std::size_t found = 0, recovered = 0, singleton = 0, matched = 0, agree = 0,
              errors = 0, mismatches = 0;
  std::vector<std::int64_t> totals;
  for (const auto& r : records) {
    found += r.preimage_found;
    recovered += r.secret_recovered;
    singleton += r.candidate_count == 1;
    matched += r.key_matched;
    agree += r.agree;
    errors += !r.error.empty();
    mismatches += r.error == "oracle_mismatch";
    totals.push_back(r.total_time_ns);
  }
  std::sort(totals.begin(), totals.end());

  out << "trials=" << records.size() << '\n'
      << "preimage_found=" << found << '\n'
      << "secret_recovered=" << recovered << '\n'
      << "singleton=" << singleton << '\n'
      << "key_matched=" << matched << '\n'
      << "agree=" << agree << '\n'
      << "errors=" << errors << '\n'
      << "median_total_ns=" << totals[totals.size() / 2] << '\n';

  if (mismatches > 0) {
    err << "oracle mismatch in " << mismatches << " trial(s)\n";
    return kNothingFound;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated modular multiplication key exchange and lattice attack"};
  app.require_subcommand(1);

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "Generate a parameter file");
  params->add_option("--l", pa.l, "Bit length of z")->required();
  params->add_option("--m", pa.m, "Bit length of secrets")->required();
  params->add_option("--q", pa.q, "Low bits dropped from tokens")->required();
  params->add_option("--r", pa.r, "Key safety margin")->required();
  params->add_option("--seed", pa.seed, "Seed for z");
  params->add_option("--out", pa.out, "Output file (stdout if omitted)");

  ExchangeArgs ea;
  auto* exch = app.add_subcommand("exchange", "Run an honest key exchange");
  exch->add_option("--params", ea.params, "Parameter file")->required();
  exch->add_option("--seed", ea.seed, "Seed for both secrets")->required();

  AttackArgs aa;
  auto* attack = app.add_subcommand("attack", "Recover secrets from a public token");
  attack->add_option("--params", aa.params, "Parameter file")->required();
  attack->add_option("--token", aa.token, "Observed token (decimal)")->required();
  attack->add_flag("--token-scaled", aa.token_scaled, "Token is 2^q*u");
  attack->add_option("--m", aa.m, "Secret bit length (defaults to the file's m)");
  attack->add_option("--other-token", aa.other_token, "Other party's token");
  attack->add_option("--cap", aa.cap, "Maximum coefficient pairs to enumerate");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive preimage scan (m <= 24)");
  oracle->add_option("--z", oa.z)->required();
  oracle->add_option("--p", oa.p)->required();
  oracle->add_option("--q", oa.q)->required();
  oracle->add_option("--u", oa.u)->required();
  oracle->add_option("--m", oa.m)->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Seeded trials written as CSV");
  bench->add_option("--l", ba.l)->required();
  bench->add_option("--m", ba.m)->required();
  bench->add_option("--q", ba.q)->required();
  bench->add_option("--r", ba.r)->required();
  bench->add_option("--trials", ba.trials)->required()->check(CLI::PositiveNumber);
  bench->add_option("--seed", ba.seed)->required();
  bench->add_option("--out", ba.out, "CSV output file")->required();
  bench->add_option("--mode", ba.mode, "attack | exchange | oracle-check");
  bench->add_option("--threads", ba.threads, "Worker threads (0 = all cores)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(pa, out, err);
    if (*exch) return cmd_exchange(ea, out);
    if (*attack) return cmd_attack(aa, out);
    if (*oracle) return cmd_oracle(oa, out);
    if (*bench) return cmd_bench(ba, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace truncmul::cli
