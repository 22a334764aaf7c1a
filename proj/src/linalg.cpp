#include "sally/linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace sally::linalg {

namespace {

struct Overflow {};

// a*x - b*y with overflow detection.
inline std::int64_t mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  std::int64_t ax = 0, by = 0, out = 0;
  if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) ||
      __builtin_sub_overflow(ax, by, &out)) {
    throw Overflow{};
  }
  return out;
}

inline BigInt mul_sub(const BigInt& a, const BigInt& x, const BigInt& b, const BigInt& y) {
  return a * x - b * y;
}

inline std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}

inline BigInt magnitude(const BigInt& v) { return abs(v); }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
  a = magnitude(a);
  b = magnitude(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline bool field_is_zero(const Rational& v) { return v == 0; }
inline Rational field_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational field_sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational field_inverse(const Rational& a) { return Rational(1) / a; }

inline bool field_is_zero(ModP v) { return v.is_zero(); }
inline ModP field_mul(ModP a, ModP b) { return mod_mul(a, b); }
inline ModP field_sub(ModP a, ModP b) { return mod_sub(a, b); }
inline ModP field_inverse(ModP a) { return mod_inverse(a); }

}  // namespace

template <typename Scalar>
std::optional<std::size_t> fraction_free_rank(RowMajorMatrix<Scalar> work) {
  const Eigen::Index rows = work.rows();
  const Eigen::Index cols = work.cols();
  Eigen::Index rank = 0;
  try {
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
      // Smallest nonzero magnitude keeps unit pivots whenever one exists.
      Eigen::Index pivot = -1;
      Scalar best = 0;
      for (Eigen::Index r = rank; r < rows; ++r) {
        if (work(r, col) == 0) continue;
        Scalar mag = magnitude(Scalar(work(r, col)));
        if (pivot < 0 || mag < best) {
          pivot = r;
          best = mag;
          if (best == 1) break;
        }
      }
      if (pivot < 0) continue;
      if (pivot != rank) work.row(pivot).swap(work.row(rank));

      const Scalar p = work(rank, col);
      for (Eigen::Index r = rank + 1; r < rows; ++r) {
        if (work(r, col) == 0) continue;
        const Scalar a = work(r, col);
        const Scalar g = gcd_of(p, a);
        const Scalar pp = p / g;
        const Scalar aa = a / g;
        // row_r <- pp*row_r - aa*row_rank: a nonzero multiple of row_r plus a
        // multiple of the pivot row, so the row space rank is unchanged.
        Scalar content = 0;
        for (Eigen::Index c = col; c < cols; ++c) {
          work(r, c) = mul_sub(pp, Scalar(work(r, c)), aa, Scalar(work(rank, c)));
          if (content != 1 && work(r, c) != 0) content = gcd_of(content, Scalar(work(r, c)));
        }
        if (content > 1) {
          for (Eigen::Index c = col; c < cols; ++c) work(r, c) /= content;
        }
      }
      ++rank;
    }
  } catch (const Overflow&) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(rank);
}

template <typename Field>
std::size_t field_rank(RowMajorMatrix<Field> work) {
  const Eigen::Index rows = work.rows();
  const Eigen::Index cols = work.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (!field_is_zero(work(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) work.row(pivot).swap(work.row(rank));
    const Field inv = field_inverse(work(rank, col));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (field_is_zero(work(r, col))) continue;
      const Field factor = field_mul(work(r, col), inv);
      for (Eigen::Index c = col; c < cols; ++c) {
        work(r, c) = field_sub(work(r, c), field_mul(factor, work(rank, c)));
      }
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

template std::optional<std::size_t> fraction_free_rank<std::int64_t>(RowMajorMatrix<std::int64_t>);
template std::optional<std::size_t> fraction_free_rank<BigInt>(RowMajorMatrix<BigInt>);
template std::size_t field_rank<Rational>(RowMajorMatrix<Rational>);
template std::size_t field_rank<ModP>(RowMajorMatrix<ModP>);

std::size_t rank(const IntMatrix& m) {
  if (m.size() == 0) return 0;
  if (auto r = fraction_free_rank<std::int64_t>(m)) return *r;
  return *fraction_free_rank<BigInt>(m.cast<BigInt>());
}

std::size_t rank(const ExactMatrix& m) {
  if (m.size() == 0) return 0;
  RowMajorMatrix<BigInt> scaled(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    BigInt lcm = 1;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const BigInt den = boost::multiprecision::denominator(m(r, c));
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      scaled(r, c) = boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v));
    }
  }
  return *fraction_free_rank<BigInt>(std::move(scaled));
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t prime) {
  if (m.size() == 0) return 0;
  RowMajorMatrix<ModP> work(m.rows(), m.cols());
  const auto p = static_cast<std::int64_t>(prime);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::int64_t v = ((m(r, c) % p) + p) % p;
      work(r, c) = ModP{static_cast<std::uint32_t>(v), prime};
    }
  }
  return field_rank<ModP>(std::move(work));
}

}  // namespace sally::linalg
