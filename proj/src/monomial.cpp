#include "sally/monomial.hpp"

#include <algorithm>

namespace sally {

Monomial::Monomial(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {
  for (Integer a : exponents_) {
    if (a < 0) throw Error(ErrorCode::ParamOutOfRange, "negative exponent");
  }
  trim();
}

Monomial Monomial::variable(std::size_t index, Integer power) {
  std::vector<Integer> exps(index + 1, 0);
  exps[index] = power;
  return Monomial(std::move(exps));
}

void Monomial::trim() {
  while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
}

Integer Monomial::total_degree() const {
  Integer sum = 0;
  for (Integer a : exponents_) sum += a;
  return sum;
}

Integer Monomial::degree(Integer base) const {
  Integer sum = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) sum += exponents_[i] * (base + static_cast<Integer>(i));
  return sum;
}

bool Monomial::divides(const Monomial& other) const {
  if (exponents_.size() > other.exponents_.size()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::shares_variable(const Monomial& other) const {
  const std::size_t n = std::min(exponents_.size(), other.exponents_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (exponents_[i] > 0 && other.exponents_[i] > 0) return true;
  }
  return false;
}

bool Monomial::lives_in(const NumericalSemigroup& s) const {
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    const Integer value = s.multiplicity() + static_cast<Integer>(i);
    if (!std::binary_search(gens.begin(), gens.end(), value)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Integer> out(std::max(exponents_.size(), other.exponents_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponent(i) + other.exponent(i);
  return Monomial(std::move(out));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<Integer> out(exponents_);
  for (std::size_t i = 0; i < other.exponents_.size(); ++i) out[i] -= other.exponents_[i];
  return Monomial(std::move(out));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.exponents_.size(), b.exponents_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    out += "X_" + std::to_string(i);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out;
}

}  // namespace sally
