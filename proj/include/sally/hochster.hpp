#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sally/linalg.hpp"
#include "sally/semigroup.hpp"

namespace sally {

using FaceMask = std::uint64_t;

/// A simplicial complex on the minimal generators of a semigroup, faces
/// stored as bitmasks over vertex positions. For the divisor complex of
/// degree lambda, F is a face iff lambda minus the sum of F lies in S.
struct SquarefreeComplex {
  std::vector<Integer> vertex_labels;
  /// Sorted by (cardinality, mask).
  std::vector<FaceMask> faces;

  std::size_t vertex_count() const noexcept { return vertex_labels.size(); }
  bool contains(FaceMask face) const;
  bool is_void() const noexcept { return faces.empty(); }
  /// Largest face cardinality minus one; -1 for {empty set}.
  int dimension() const;
  /// Faces with exactly `dim + 1` vertices, ascending by mask.
  std::vector<FaceMask> faces_of_dimension(int dim) const;
  /// A vertex v with F + v a face for every face F, if any.
  std::optional<std::size_t> cone_apex() const;
  bool is_downward_closed() const;
};

/// Builds Delta_lambda. Requires lambda >= 0 and at most 63 generators.
SquarefreeComplex divisor_complex(const NumericalSemigroup& s, Integer lambda);

/// Matrix of the simplicial boundary C_dim -> C_{dim-1} with the usual
/// alternating signs; dim = 0 gives the augmentation row onto the empty face.
linalg::IntMatrix boundary_matrix(const SquarefreeComplex& c, int dim);

/// Reduced Betti numbers [dim H~_{-1}, dim H~_0, ..., dim H~_{n-2}] over Q,
/// n = vertex count. A cone short-circuits to all zeros. Throws VoidComplex
/// for the complex with no faces.
std::vector<Integer> reduced_betti(const SquarefreeComplex& c);

/// Same, always by boundary ranks (no cone shortcut).
std::vector<Integer> reduced_betti_by_ranks(const SquarefreeComplex& c);

/// beta_{i,lambda}(k[S]) for i = 0 .. g-1; all zero when lambda is not in S.
std::vector<Integer> graded_betti(const NumericalSemigroup& s, Integer lambda);

struct BettiTable {
  /// lambda -> beta_{i,lambda} over i; only degrees with a nonzero entry.
  std::map<Integer, std::vector<Integer>> graded;
  std::vector<Integer> totals;
  Integer lambda_max = 0;

  Integer at(std::size_t i, Integer lambda) const;
  std::size_t projective_dimension() const { return totals.empty() ? 0 : totals.size() - 1; }
};

/// F(S) + sum of the generators (0 contribution from F when S = N).
Integer default_lambda_max(const NumericalSemigroup& s);

/// Graded and total Betti numbers over all lambda in S up to lambda_max.
/// Degrees are evaluated independently on `jobs` workers; the result does
/// not depend on the worker count.
BettiTable betti_table(const NumericalSemigroup& s, std::optional<Integer> lambda_max = std::nullopt,
                       unsigned jobs = 1);

/// Checks sum_i (-1)^i beta_{i,lambda} against the coefficient of t^lambda in
/// (1 - t^{s_1}) ... (1 - t^{s_g}) * H_S(t) for every lambda <= lambda_max.
bool k_polynomial_identity_holds(const NumericalSemigroup& s, const BettiTable& table);

/// Every beta_{i,lambda} vanishes for lambda in (lambda_max, lambda_max + window].
bool tail_window_vanishes(const NumericalSemigroup& s, const BettiTable& table, Integer window,
                          unsigned jobs = 1);

}  // namespace sally
