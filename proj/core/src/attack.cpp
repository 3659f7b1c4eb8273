#include "truncmul/attack.hpp"

#include <algorithm>

#include "truncmul/error.hpp"
#include "truncmul/protocol.hpp"

namespace truncmul {

Bounds attack_bounds(unsigned m, unsigned q, const Int& u) {
  Bounds b{pow2(m), pow2(q)};
  // The unclamped min{2^q, 2^m - 2^q u} is non-positive whenever 2^q u >= 2^m,
  // which includes ordinary instances; fall back to 2^q there.
  const Int headroom = b.b1 - u * b.b2;
  if (sgn(headroom) > 0 && headroom < b.b2) b.b2 = headroom;
  return b;
}

LatticeProblem build_problem(const AttackInput& in) {
  if (sgn(in.z) <= 0) {
    throw Error(ErrorKind::DegenerateInput, "z must be >= 1");
  }
  if (in.p < in.q || in.p == 0) {
    throw Error(ErrorKind::DegenerateInput, "need p >= q and p >= 1");
  }
  if (sgn(in.token) < 0) {
    throw Error(ErrorKind::DegenerateInput, "token must be >= 0");
  }

  LatticeProblem pr;
  pr.z = in.z;
  pr.p = in.p;
  pr.q = in.q;
  pr.u = in.token_is_scaled ? shift_down(in.token, in.q) : in.token;
  pr.bounds = attack_bounds(in.m, in.q, pr.u);
  pr.family = solution_basis(in.z, in.p, in.q, pr.u);
  pr.form = WeightedForm::from_bounds(pr.bounds.b1, pr.bounds.b2);
  return pr;
}

AttackResult search_problem(const LatticeProblem& problem,
                            const ReductionResult& reduction, std::uint64_t cap) {
  const auto hits = rect_search(reduction.basis, problem.family.v0,
                                problem.bounds.b1, problem.bounds.b2, cap);

  AttackResult out;
  out.reduce_iterations = reduction.iterations;
  out.searched = hits.searched;
  out.reduced = reduction.basis;
  for (const auto& s : hits.points) {
    if (trunc_f(s.x, problem.z, problem.p, problem.q) != problem.u) continue;
    out.candidates.push_back({s.x, s.y, sgn(s.x) > 0});
  }
  out.unique = out.candidates.size() == 1;
  return out;
}

AttackResult recover_preimages(const AttackInput& in, std::uint64_t cap) {
  const LatticeProblem problem = build_problem(in);
  const ReductionResult reduction =
      gauss_reduce(problem.family.basis(problem.p), problem.form);
  return search_problem(problem, reduction, cap);
}

std::vector<RecoveredKey> keys_from_candidates(const AttackResult& result,
                                               const AttackInput& in,
                                               const Int& other_token, unsigned r) {
  if (result.candidates.empty()) {
    throw Error(ErrorKind::NoCandidates, "no preimage in the feasible rectangle");
  }
  std::vector<RecoveredKey> keys;
  for (const auto& c : result.candidates) {
    Int key = shared_key(c.x, other_token, in.p, in.q, r, in.m);
    auto it = std::find_if(keys.begin(), keys.end(),
                           [&](const RecoveredKey& k) { return k.key == key; });
    if (it == keys.end()) {
      keys.push_back({std::move(key), 1});
    } else {
      ++it->multiplicity;
    }
  }
  return keys;
}

std::vector<RecoveredKey> recover_shared_key(const AttackInput& in,
                                             const Int& other_token, unsigned r,
                                             std::uint64_t cap) {
  return keys_from_candidates(recover_preimages(in, cap), in, other_token, r);
}

}  // namespace truncmul
