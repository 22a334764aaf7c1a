#include "sally/sallymatrices.hpp"

#include <algorithm>

namespace sally {

namespace {

Monomial product(std::size_t a, std::size_t b) { return Monomial::variable(a) * Monomial::variable(b); }

std::vector<Integer> range(Integer lo, Integer hi) {
  std::vector<Integer> out;
  for (Integer k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::vector<Integer> concat(std::vector<Integer> a, const std::vector<Integer>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::ParamOutOfRange, message);
}

std::string symbol_name(Integer k) { return "X_" + std::to_string(k); }

}  // namespace

SymbolTable::SymbolTable(Integer e, std::set<Integer> dropped, std::map<Integer, Monomial> products)
    : e_(e), dropped_(std::move(dropped)), products_(std::move(products)) {}

SymbolTable SymbolTable::squares(Integer e, std::set<Integer> dropped) {
  return SymbolTable(e, std::move(dropped),
                     {{e, product(0, 0)}, {e + 1, product(0, 1)}, {e + 2, product(1, 1)}});
}

SymbolTable SymbolTable::for_34(Integer e) {
  return SymbolTable(e, {3, 4},
                     {{e, product(0, 0)},
                      {e + 1, product(0, 1)},
                      {e + 2, product(0, 2)},
                      {e + 3, product(1, 2)},
                      {e + 4, product(2, 2)}});
}

Monomial SymbolTable::operator()(Integer symbol) const {
  Monomial out;
  if (symbol >= 0 && symbol < e_) {
    out = Monomial::variable(static_cast<std::size_t>(symbol));
  } else {
    const auto it = products_.find(symbol);
    require(it != products_.end(), "no substitution for " + symbol_name(symbol));
    out = it->second;
  }
  for (Integer d : dropped_) {
    require(out.exponent(static_cast<std::size_t>(d)) == 0,
            symbol_name(symbol) + " involves the dropped variable " + symbol_name(d));
  }
  return out;
}

bool MonomialMatrix::is_homogeneous(Integer base) const {
  std::optional<Integer> gap;
  for (std::size_t j = 0; j < cols(); ++j) {
    const Integer g = rows[1][j].degree(base) - rows[0][j].degree(base);
    if (gap && *gap != g) return false;
    gap = g;
  }
  return true;
}

std::optional<std::size_t> MonomialMatrix::find_column(Integer top, Integer bottom) const {
  for (std::size_t j = 0; j < cols(); ++j) {
    if (symbols[0][j] == top && symbols[1][j] == bottom) return j;
  }
  return std::nullopt;
}

std::string MonomialMatrix::to_string() const {
  std::string out = name + " = [";
  for (int r = 0; r < 2; ++r) {
    out += r == 0 ? "[" : "; [";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j > 0) out += ", ";
      out += rows[static_cast<std::size_t>(r)][j].to_string();
    }
    out += "]";
  }
  return out + "]";
}

MonomialMatrix make_shift_matrix(std::string name, const SymbolTable& table, const std::vector<Integer>& tops,
                                 Integer shift) {
  MonomialMatrix mx;
  mx.name = std::move(name);
  for (Integer k : tops) {
    mx.symbols[0].push_back(k);
    mx.symbols[1].push_back(k + shift);
    mx.rows[0].push_back(table(k));
    mx.rows[1].push_back(table(k + shift));
  }
  return mx;
}

MonomialMatrix matrix_A(Integer e, Integer m) {
  require(e >= 4 && m >= 1 && m <= e - 1, "A_m needs e >= 4 and 1 <= m <= e-1");
  const auto tops = concat(range(0, m - 2), range(m + 1, e - 1));
  return make_shift_matrix("A_" + std::to_string(m), SymbolTable::squares(e, {m}), tops, 1);
}

MonomialMatrix matrix_B(Integer e, Integer m) {
  require(e >= 4 && m >= 1 && m <= e - 1, "B_m needs e >= 4 and 1 <= m <= e-1");
  // Rows differ by two in every column; m = 1, 2, e-1 have their own column sets.
  std::vector<Integer> tops;
  if (m == 1) {
    tops = concat({0}, range(2, e - 2));
  } else if (m == 2) {
    tops = concat({1}, range(3, e));
  } else if (m == e - 1) {
    tops = concat(range(0, e - 4), {e - 2});
  } else {
    for (Integer k = 0; k <= e - 1; ++k) {
      if (k != m && k + 2 != m) tops.push_back(k);
    }
  }
  auto mx = make_shift_matrix("B_" + std::to_string(m), SymbolTable::squares(e, {m}), tops, 2);
  mx.special_column = mx.find_column(m - 1, m + 1);
  return mx;
}

MonomialMatrix matrix_A_mm1(Integer e, Integer m) {
  require(e >= 6 && m >= 2 && m <= e - 2, "A_{m,m+1} needs e >= 6 and 2 <= m <= e-2");
  const auto tops = concat(range(0, m - 2), range(m + 2, e - 1));
  return make_shift_matrix("A_{" + std::to_string(m) + "," + std::to_string(m + 1) + "}",
                           SymbolTable::squares(e, {m, m + 1}), tops, 1);
}

std::pair<MonomialMatrix, MonomialMatrix> matrix_pair_23(Integer e) {
  require(e >= 6, "A_{2,3}, B_{2,3} need e >= 6");
  const auto table = SymbolTable::squares(e, {2, 3});
  auto a = make_shift_matrix("A_{2,3}", table, concat({0}, range(4, e - 1)), 1);
  auto b = make_shift_matrix("B_{2,3}", table, concat({1}, range(4, e - 1)), 3);
  b.special_column = 0;
  return {std::move(a), std::move(b)};
}

std::pair<MonomialMatrix, MonomialMatrix> matrix_pair_34(Integer e) {
  require(e >= 6, "A_{3,4}, B_{3,4} need e >= 6");
  const auto table = SymbolTable::for_34(e);
  auto a = make_shift_matrix("A_{3,4}", table, concat({0, 1}, range(5, e - 1)), 1);
  auto b = make_shift_matrix("B_{3,4}", table, concat({2}, range(5, e + 1)), 3);
  b.special_column = 0;
  return {std::move(a), std::move(b)};
}

MonomialMatrix matrix_A_prime_34(Integer e) {
  require(e >= 6, "A' needs e >= 6");
  return make_shift_matrix("A'", SymbolTable::for_34(e), concat({e, e + 1}, range(5, e - 1)), 1);
}

std::vector<Binomial> minors2(const MonomialMatrix& mx, std::optional<std::size_t> column_filter) {
  std::vector<Binomial> out;
  for (std::size_t j = 0; j < mx.cols(); ++j) {
    for (std::size_t k = j + 1; k < mx.cols(); ++k) {
      if (column_filter && *column_filter != j && *column_filter != k) continue;
      Binomial b{mx.rows[0][j] * mx.rows[1][k], mx.rows[0][k] * mx.rows[1][j]};
      if (b.lhs != b.rhs) out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Binomial> claimed_generators(Integer e, Integer m) {
  const auto a = matrix_A(e, m);
  const auto b = matrix_B(e, m);
  auto out = minors2(a);
  const auto through = minors2(b, b.special_column.value());
  out.insert(out.end(), through.begin(), through.end());
  return out;
}

std::vector<Binomial> claimed_generators_23(Integer e) {
  const auto [a, b] = matrix_pair_23(e);
  auto out = minors2(a);
  const auto through = minors2(b, 0);
  out.insert(out.end(), through.begin(), through.end());
  return out;
}

std::vector<Binomial> claimed_generators_34(Integer e) {
  const auto [a, b] = matrix_pair_34(e);
  auto out = minors2(a);
  const auto through = minors2(b, 0);
  out.insert(out.end(), through.begin(), through.end());
  return out;
}

}  // namespace sally
