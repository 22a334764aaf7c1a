#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sally/monomial.hpp"

namespace sally {

/// Maps a matrix symbol X_k to a monomial in the true variables. Symbols
/// k < e are variables themselves; k >= e are products such as X_e = X_0^2.
/// Each construction carries its own table because the same symbol means
/// different products in different families (X_{e+2} is X_1^2 for the one-
/// drop and (2,3) matrices but X_0 X_2 for the (3,4) matrices).
class SymbolTable {
 public:
  SymbolTable(Integer e, std::set<Integer> dropped, std::map<Integer, Monomial> products);

  /// Substitution X_e = X_0^2, X_{e+1} = X_0 X_1, X_{e+2} = X_1^2.
  static SymbolTable squares(Integer e, std::set<Integer> dropped);
  /// Substitution X_e = X_0^2, X_{e+1} = X_0 X_1, X_{e+2} = X_0 X_2,
  /// X_{e+3} = X_1 X_2, X_{e+4} = X_2^2.
  static SymbolTable for_34(Integer e);

  /// Throws ParamOutOfRange for a dropped variable or an unknown product.
  Monomial operator()(Integer symbol) const;
  Integer e() const noexcept { return e_; }
  const std::set<Integer>& dropped() const noexcept { return dropped_; }

 private:
  Integer e_;
  std::set<Integer> dropped_;
  std::map<Integer, Monomial> products_;
};

/// Two-row matrix of monomials whose 2x2 minors are binomials.
struct MonomialMatrix {
  std::string name;
  std::array<std::vector<Monomial>, 2> rows;
  /// Symbols as displayed, kept for printing and column lookup.
  std::array<std::vector<Integer>, 2> symbols;
  /// Column whose minors enter the minimal generating set, if any.
  std::optional<std::size_t> special_column;

  std::size_t cols() const noexcept { return rows[0].size(); }
  /// Every column has the same S-degree gap between its rows.
  bool is_homogeneous(Integer base) const;
  /// Column whose displayed symbols are (top, bottom).
  std::optional<std::size_t> find_column(Integer top, Integer bottom) const;
  std::string to_string() const;
};

/// Builds a matrix whose columns are [X_k ; X_{k+shift}] for k in `tops`.
MonomialMatrix make_shift_matrix(std::string name, const SymbolTable& table, const std::vector<Integer>& tops,
                                 Integer shift);

MonomialMatrix matrix_A(Integer e, Integer m);
MonomialMatrix matrix_B(Integer e, Integer m);
MonomialMatrix matrix_A_mm1(Integer e, Integer m);
std::pair<MonomialMatrix, MonomialMatrix> matrix_pair_23(Integer e);
std::pair<MonomialMatrix, MonomialMatrix> matrix_pair_34(Integer e);
/// The (3,4) companion matrix A' with columns [X_e;X_{e+1}], [X_{e+1};X_{e+2}],
/// [X_k;X_{k+1}] for k in [5, e-1].
MonomialMatrix matrix_A_prime_34(Integer e);

/// All 2x2 minors a*d - b*c as binomials, or only those using column
/// `column_filter`. Zero minors (equal products) are skipped.
std::vector<Binomial> minors2(const MonomialMatrix& mx, std::optional<std::size_t> column_filter = std::nullopt);

/// Minors of A_m plus the minors of B_m through its special column.
std::vector<Binomial> claimed_generators(Integer e, Integer m);
/// Minors of A_{2,3} plus the minors of B_{2,3} through its first column.
std::vector<Binomial> claimed_generators_23(Integer e);
/// Minors of A_{3,4} plus the minors of B_{3,4} through its first column.
std::vector<Binomial> claimed_generators_34(Integer e);

}  // namespace sally
