#pragma once

#include <set>
#include <string>
#include <vector>

#include "sally/semigroup.hpp"

namespace sally {

/// A closed-form value together with the branch of the formula that fired.
struct ClosedFormResult {
  Integer value = 0;
  std::string case_tag;

  friend bool operator==(const ClosedFormResult&, const ClosedFormResult&) = default;
};

/// C(n, k), zero outside 0 <= k <= n. Exact; throws on 64-bit overflow.
Integer binomial(Integer n, Integer k);

ClosedFormResult frobenius_m(Integer e, Integer m);
ClosedFormResult type_m(Integer e, Integer m);
ClosedFormResult frobenius_mn(Integer e, Integer m, Integer n);
ClosedFormResult type_mn(Integer e, Integer m, Integer n);

/// Minimal number of generators of the defining ideal of S_e<m>.
Integer mu_m(Integer e, Integer m);

/// Gap set of S_e<m> / S_e<m,n> read off the explicit descriptions.
std::set<Integer> gaps_closed(const SallyParams& params);
/// Pseudo-Frobenius set of S_e<m> / S_e<m,n>.
std::set<Integer> pseudo_frobenius_closed(const SallyParams& params);
/// Symmetric exactly for S_e<1>, S_e<e-1> and S_e<2,3>.
bool is_symmetric_closed(const SallyParams& params);
/// 2 * |gaps| == F + t using the closed gap set, Frobenius number and type.
bool is_almost_symmetric_closed(const SallyParams& params);
/// Literal "almost symmetric iff m >= 2 and n > 2m" for two-drop families.
/// Disagrees with the definition for S_e<2,3> and for S_e<1,n> of type 3;
/// kept for reporting that discrepancy.
bool almost_symmetric_as_stated(Integer e, Integer m, Integer n);

enum class BettiFamily { S1, S2, S23, S34, SeMinus1 };

const char* to_string(BettiFamily family);

/// Largest homological index of the family: e-2 for S1, S2, Se-1 and e-3
/// for S23, S34.
Integer betti_top_index(BettiFamily family, Integer e);

/// Total Betti number beta_t from the family's closed form; beta_0 = 1.
/// Throws ParamOutOfRange outside [0, top] and NonIntegerFormulaValue if a
/// rational prefactor does not divide exactly.
Integer betti_closed(BettiFamily family, Integer e, Integer t);

/// beta_0 .. beta_top for the family.
std::vector<Integer> betti_sequence_closed(BettiFamily family, Integer e);

/// t * C(width + 1, t + 1).
Integer cms_bound(Integer width, Integer t);

}  // namespace sally
