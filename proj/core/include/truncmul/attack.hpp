#pragma once

#include <cstdint>
#include <vector>

#include "truncmul/bigint.hpp"
#include "truncmul/lattice2d.hpp"

namespace truncmul {

/// What an eavesdropper sees: the public parameters and one token.
struct AttackInput {
  Int z;
  unsigned p = 0;
  unsigned q = 0;
  unsigned m = 0;
  Int token;
  /// The token is 2^q * u rather than u; it is normalized as floor(token / 2^q).
  bool token_is_scaled = false;
};

/// Feasible rectangle 0 <= x < b1, 0 <= y < b2.
struct Bounds {
  Int b1;
  Int b2;
};

/// b1 = 2^m. b2 = 2^m - 2^q*u when that lies strictly inside (0, 2^q),
/// otherwise 2^q.
Bounds attack_bounds(unsigned m, unsigned q, const Int& u);

/// Lattice formulation of one attack instance.
struct LatticeProblem {
  Int z;
  unsigned p = 0;
  unsigned q = 0;
  Int u;
  Bounds bounds;
  SolutionFamily family;
  WeightedForm form;
};

LatticeProblem build_problem(const AttackInput& in);

struct Candidate {
  Int x;
  Int y;
  /// False for x == 0, which the protocol never uses as a secret.
  bool positive = false;

  friend bool operator==(const Candidate& a, const Candidate& b) {
    return a.x == b.x && a.y == b.y && a.positive == b.positive;
  }
};

struct AttackResult {
  std::vector<Candidate> candidates;
  bool unique = false;
  std::size_t reduce_iterations = 0;
  std::uint64_t searched = 0;
  LatticeBasis reduced;
};

/// Search stage: rectangle enumeration on an already reduced basis. Points
/// whose x does not map back to u (possible only when u is outside the range
/// of the truncation map) are dropped.
AttackResult search_problem(const LatticeProblem& problem,
                            const ReductionResult& reduction,
                            std::uint64_t cap = kDefaultSearchCap);

/// All x in [0, 2^m) (with y < B2) whose token is `in.token`. Throws
/// DegenerateInput for z < 1 or p < q, and SearchSpaceExceeded past `cap`.
AttackResult recover_preimages(const AttackInput& in,
                               std::uint64_t cap = kDefaultSearchCap);

struct RecoveredKey {
  Int key;
  std::size_t multiplicity = 0;
};

/// Shared key candidates obtained by combining each recovered preimage with the
/// other party's token. Keys are deduplicated in candidate order. Throws
/// NoCandidates when the preimage list is empty.
std::vector<RecoveredKey> recover_shared_key(const AttackInput& in,
                                             const Int& other_token, unsigned r,
                                             std::uint64_t cap = kDefaultSearchCap);

/// Same, reusing an already computed AttackResult.
std::vector<RecoveredKey> keys_from_candidates(const AttackResult& result,
                                               const AttackInput& in,
                                               const Int& other_token, unsigned r);

}  // namespace truncmul
