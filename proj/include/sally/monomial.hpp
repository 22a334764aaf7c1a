#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sally/semigroup.hpp"

namespace sally {

/// Monomial in the variables X_i of a semigroup with multiplicity e, where
/// X_i stands for the generator e + i. exponents[i] is the power of X_i;
/// trailing zeros are trimmed so equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Integer> exponents);

  static Monomial variable(std::size_t index, Integer power = 1);

  const std::vector<Integer>& exponents() const noexcept { return exponents_; }
  Integer exponent(std::size_t index) const noexcept {
    return index < exponents_.size() ? exponents_[index] : 0;
  }
  Integer total_degree() const;
  /// S-degree sum_i a_i * (base + i).
  Integer degree(Integer base) const;
  bool is_one() const noexcept { return exponents_.empty(); }

  bool divides(const Monomial& other) const;
  bool shares_variable(const Monomial& other) const;
  /// Uses only variables that are minimal generators of s.
  bool lives_in(const NumericalSemigroup& s) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  /// Lexicographic on exponent vectors (a_0, a_1, ...).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// Renders as X_0^2X_5, or 1 for the unit monomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> exponents_;
};

/// lhs - rhs, an element of the toric ideal when both sides share an S-degree.
struct Binomial {
  Monomial lhs;
  Monomial rhs;

  bool is_homogeneous(Integer base) const { return lhs.degree(base) == rhs.degree(base); }
  Integer degree(Integer base) const { return lhs.degree(base); }
  std::string to_string() const { return lhs.to_string() + " - " + rhs.to_string(); }

  friend bool operator==(const Binomial& a, const Binomial& b) = default;
};

}  // namespace sally
