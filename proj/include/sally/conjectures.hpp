#pragma once

#include <string>
#include <vector>

#include "sally/semigroup.hpp"

namespace sally {

enum class Verdict { Holds, Fails, Inapplicable };

const char* to_string(Verdict v);

/// One instance of a conjectured identity: both sides are always computed.
struct ConjectureCase {
  std::string params;
  Integer j = 0;
  std::string relation;
  Integer lhs = 0;
  Integer rhs = 0;
  Verdict verdict = Verdict::Inapplicable;
};

struct ConjectureReport {
  int conjecture_id = 0;
  Integer e = 0;
  std::vector<ConjectureCase> cases;

  std::size_t count(Verdict v) const;
};

constexpr int kConjectureCount = 5;

/// Evaluates every instance of the trailing-Betti-number conjecture
/// `conjecture_id` (1..5) at multiplicity e >= 6, with Betti sequences from
/// the divisor-complex engine. Cases come out in canonical parameter order
/// regardless of `jobs`.
///
///   1: beta_j(m) = beta_j(1) for j <= m-2, and
///      beta_j(m) = beta_j(1) + C(e-m, j+1-m) for m-1 <= j <= e-2; m in [2, e-1].
///   2: beta_j(2,n) = beta_j(2,3) for j <= n-5 and +1 at j = n-4, n in [6, e-1];
///      for n = e-1 also +3 at j = e-4 and +2 at j = e-3.
///   3: beta_j(2,n) = j C(e-2, j+1) for n in {4,5}, 1 <= j <= e-3.
///   4: beta_j(n,n+1) = beta_j(m,m+1) for 4 <= m <= n <= e-2, j <= m-3.
///   5: beta_j(1,e-1) = j C(e-3,j+1) + (e-4-j) C(e-3,e-2-j) for 0 <= j <= e-5,
///      beta_{e-4}(1,e-1) = 2e-7, beta_{e-3}(1,e-1) = 2, and
///      beta_j(m,e-1) = beta_j(1,e-1) for m in [3, e-2], j <= m-2.
///
/// The e-4 and e-3 values of conjecture 5 are compared against the constants
/// 2e-7 and 2.
ConjectureReport scan(int conjecture_id, Integer e, unsigned jobs = 1);

}  // namespace sally
