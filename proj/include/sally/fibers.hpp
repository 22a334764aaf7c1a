#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sally/monomial.hpp"
#include "sally/semigroup.hpp"

namespace sally {

/// All monomials of S-degree lambda, in decreasing lexicographic order
/// (X_0 > X_1 > ...). Empty iff lambda has no factorization.
std::vector<Monomial> fiber(const NumericalSemigroup& s, Integer lambda);

/// Number of connected components of the fiber graph whose edges join
/// monomials sharing a variable. beta_{1,lambda} is this count minus one.
std::size_t gcd_components(const std::vector<Monomial>& fiber);

/// Degrees of minimal binomial generators lie at or below F(S) + s_1 + s_g:
/// above it every vertex of Delta_lambda is joined to s_1.
Integer generator_degree_bound(const NumericalSemigroup& s);

struct MinimalGenerators {
  std::vector<Binomial> binomials;
  /// degree -> number of minimal generators in that degree.
  std::map<Integer, Integer> per_degree;
};

/// One binomial per extra component of each disconnected fiber: the first
/// monomial of each later component paired against the first monomial of
/// the fiber (first in fiber order).
MinimalGenerators minimal_generators(const NumericalSemigroup& s);

struct GenerationReport {
  bool generates = false;
  std::optional<Integer> failing_degree;
  std::optional<std::pair<Monomial, Monomial>> witness;
  /// Largest degree with beta_{1,lambda} > 0; connectivity is checked up to it.
  Integer checked_up_to = 0;
};

/// Degree -> beta_{1,lambda} from the divisor complexes, for every degree up
/// to generator_degree_bound(s).
std::map<Integer, Integer> first_graded_betti(const NumericalSemigroup& s);

/// Decides whether `candidates` generate I_S by checking that each fiber up
/// to the largest minimal-generator degree is connected under the moves
/// u*w <-> v*w for u - v in +-candidates. Throws InhomogeneousBinomial if a
/// candidate is not S-homogeneous or uses a variable outside S.
GenerationReport verify_generating_set(const NumericalSemigroup& s, const std::vector<Binomial>& candidates);

/// True iff the candidates have the per-degree counts of a minimal
/// generating set. Throws NotGenerating if they do not generate I_S.
bool verify_minimality(const NumericalSemigroup& s, const std::vector<Binomial>& candidates);

}  // namespace sally
