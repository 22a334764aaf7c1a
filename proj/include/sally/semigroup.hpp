#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

#include "sally/error.hpp"

namespace sally {

using Integer = std::int64_t;

/// A numerical semigroup given by its minimal generators s_1 < ... < s_g.
///
/// Membership is answered from the Apery set with respect to the
/// multiplicity: apery()[r] is the least element of S congruent to r mod s_1,
/// so x is in S iff x >= apery()[x mod s_1]. The object is immutable once
/// built and every query is const.
class NumericalSemigroup {
 public:
  /// Builds the semigroup spanned by `gens`, discarding redundant entries.
  /// Throws EmptyInput for an empty list (or one containing non-positive
  /// values) and GcdNotOne when the generators share a factor.
  static NumericalSemigroup from_generators(std::span<const Integer> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Integer> gens) {
    return from_generators(std::span<const Integer>(gens.begin(), gens.size()));
  }

  const std::vector<Integer>& generators() const noexcept { return generators_; }
  Integer multiplicity() const noexcept { return generators_.front(); }
  Integer width() const noexcept { return generators_.back() - generators_.front(); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  const std::vector<Integer>& apery() const noexcept { return apery_; }

  bool contains(Integer x) const noexcept {
    if (x < 0) return false;
    return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
  }

  /// True for S = N (no gaps at all).
  bool is_whole_line() const noexcept { return multiplicity() == 1; }

  std::vector<Integer> gaps() const;
  Integer genus() const;
  Integer frobenius() const;
  std::vector<Integer> pseudo_frobenius() const;
  Integer cm_type() const;
  bool is_symmetric() const;
  bool is_almost_symmetric() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup(std::vector<Integer> generators, std::vector<Integer> apery)
      : generators_(std::move(generators)), apery_(std::move(apery)) {}

  void require_gaps(const char* op) const;

  std::vector<Integer> generators_;
  std::vector<Integer> apery_;
};

/// Dropped offsets for a Sally-type semigroup S_e<m> or S_e<m,n>.
struct SallyParams {
  Integer e = 0;
  std::set<Integer> dropped;

  /// Rejects e < 4, an empty or oversized dropped set, offsets outside
  /// [1, e-1], and two-drop families with e < 6.
  void validate() const;
};

/// S_e<m>: generated by e+i for i in [0, e-1], i != m. Requires e >= 4.
NumericalSemigroup sally_one(Integer e, Integer m);

/// S_e<m,n>: generated by e+i for i in [0, e-1] minus {m, n}. Requires e >= 6.
NumericalSemigroup sally_two(Integer e, Integer m, Integer n);

NumericalSemigroup sally(const SallyParams& params);

}  // namespace sally
