#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace sally::linalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Boundary maps are assembled as small-integer matrices.
using IntMatrix = Matrix<std::int64_t>;
/// Exact matrices over Q.
using ExactMatrix = Matrix<Rational>;

/// Element of Z/pZ for a runtime prime p < 2^31.
struct ModP {
  std::uint32_t value = 0;
  std::uint32_t prime = 0;

  bool is_zero() const noexcept { return value == 0; }
};

inline ModP mod_mul(ModP a, ModP b) noexcept {
  return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % a.prime), a.prime};
}

inline ModP mod_sub(ModP a, ModP b) noexcept {
  return {a.value >= b.value ? a.value - b.value : a.value + a.prime - b.value, a.prime};
}

inline ModP mod_inverse(ModP a) noexcept {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a.value, exp = a.prime - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % a.prime;
    base = base * base % a.prime;
    exp >>= 1;
  }
  return {static_cast<std::uint32_t>(result), a.prime};
}

/// Rank over Q of an integer matrix by fraction-free elimination.
///
/// Runs in checked 64-bit arithmetic first and restarts on arbitrary-precision
/// integers if any intermediate value would overflow, so the answer is always
/// exact.
std::size_t rank(const IntMatrix& m);

/// Rank over Q of a rational matrix. Each row is scaled by the lcm of its
/// denominators and the integer routine does the rest.
std::size_t rank(const ExactMatrix& m);

/// Rank over Z/pZ; only used as an independent cross-check.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t prime = 32003);

/// Fraction-free elimination on a working copy. Returns std::nullopt when
/// a 64-bit intermediate overflows (only possible for Scalar = int64_t).
template <typename Scalar>
std::optional<std::size_t> fraction_free_rank(RowMajorMatrix<Scalar> work);

/// Textbook Gaussian elimination over a field. Field must provide
/// field_is_zero, field_mul, field_sub and field_inverse overloads.
template <typename Field>
std::size_t field_rank(RowMajorMatrix<Field> work);

}  // namespace sally::linalg

namespace Eigen {

template <>
struct NumTraits<sally::linalg::ModP> : GenericNumTraits<sally::linalg::ModP> {
  using Real = sally::linalg::ModP;
  using NonInteger = sally::linalg::ModP;
  using Literal = sally::linalg::ModP;
  using Nested = sally::linalg::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
};

}  // namespace Eigen
