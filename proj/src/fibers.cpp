#include "sally/fibers.hpp"

#include <algorithm>
#include <numeric>

#include "sally/hochster.hpp"

namespace sally {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void enumerate(const std::vector<Integer>& gens, Integer base, std::size_t k, Integer remaining,
               std::vector<Integer>& exps, std::vector<Monomial>& out) {
  if (k == gens.size()) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  const Integer g = gens[k];
  const auto var = static_cast<std::size_t>(g - base);
  for (Integer a = remaining / g; a >= 0; --a) {
    exps[var] = a;
    enumerate(gens, base, k + 1, remaining - a * g, exps, out);
  }
  exps[var] = 0;
}

// Component label per fiber index; labels are the smallest index in the
// component, so component order follows fiber order.
std::vector<std::size_t> component_roots(DisjointSets& sets, std::size_t n) {
  std::vector<std::size_t> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = sets.find(i);
  return roots;
}

// Monomials sharing a variable end up in one set.
DisjointSets gcd_graph(const std::vector<Monomial>& fib) {
  DisjointSets sets(fib.size());
  std::map<std::size_t, std::size_t> first_with_var;
  for (std::size_t i = 0; i < fib.size(); ++i) {
    const auto& exps = fib[i].exponents();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      auto [it, inserted] = first_with_var.emplace(v, i);
      if (!inserted) sets.unite(it->second, i);
    }
  }
  return sets;
}

}  // namespace

std::vector<Monomial> fiber(const NumericalSemigroup& s, Integer lambda) {
  if (lambda < 0) throw Error(ErrorCode::ParamOutOfRange, "degree must be nonnegative");
  std::vector<Monomial> out;
  std::vector<Integer> exps(static_cast<std::size_t>(s.width()) + 1, 0);
  enumerate(s.generators(), s.multiplicity(), 0, lambda, exps, out);
  return out;
}

std::size_t gcd_components(const std::vector<Monomial>& fib) {
  auto sets = gcd_graph(fib);
  std::size_t count = 0;
  for (std::size_t i = 0; i < fib.size(); ++i) count += sets.find(i) == i ? 1 : 0;
  return count;
}

Integer generator_degree_bound(const NumericalSemigroup& s) {
  const Integer f = s.is_whole_line() ? -1 : s.frobenius();
  return f + s.generators().front() + s.generators().back();
}

MinimalGenerators minimal_generators(const NumericalSemigroup& s) {
  MinimalGenerators result;
  const Integer bound = generator_degree_bound(s);
  for (Integer lambda = 1; lambda <= bound; ++lambda) {
    if (!s.contains(lambda)) continue;
    const auto fib = fiber(s, lambda);
    if (fib.size() < 2) continue;

    auto sets = gcd_graph(fib);
    const auto roots = component_roots(sets, fib.size());
    Integer added = 0;
    for (std::size_t i = 1; i < fib.size(); ++i) {
      if (roots[i] == i && roots[i] != roots[0]) {
        result.binomials.push_back({fib[0], fib[i]});
        ++added;
      }
    }
    if (added > 0) result.per_degree[lambda] = added;
  }
  return result;
}

std::map<Integer, Integer> first_graded_betti(const NumericalSemigroup& s) {
  std::map<Integer, Integer> out;
  const Integer bound = generator_degree_bound(s);
  if (s.embedding_dimension() < 2) return out;
  for (Integer lambda = 1; lambda <= bound; ++lambda) {
    const Integer b1 = graded_betti(s, lambda)[1];
    if (b1 > 0) out[lambda] = b1;
  }
  return out;
}

GenerationReport verify_generating_set(const NumericalSemigroup& s, const std::vector<Binomial>& candidates) {
  const Integer base = s.multiplicity();
  for (const auto& b : candidates) {
    if (!b.lhs.lives_in(s) || !b.rhs.lives_in(s)) {
      throw Error(ErrorCode::InhomogeneousBinomial, b.to_string() + " uses a variable outside the semigroup");
    }
    if (!b.is_homogeneous(base)) {
      throw Error(ErrorCode::InhomogeneousBinomial,
                  b.to_string() + " has degrees " + std::to_string(b.lhs.degree(base)) + " and " +
                      std::to_string(b.rhs.degree(base)));
    }
  }

  GenerationReport report;
  const auto betti1 = first_graded_betti(s);
  report.checked_up_to = betti1.empty() ? 0 : betti1.rbegin()->first;

  for (Integer lambda = 1; lambda <= report.checked_up_to; ++lambda) {
    if (!s.contains(lambda)) continue;
    const auto fib = fiber(s, lambda);
    if (fib.size() < 2) continue;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < fib.size(); ++i) index.emplace(fib[i], i);

    DisjointSets sets(fib.size());
    for (std::size_t i = 0; i < fib.size(); ++i) {
      for (const auto& b : candidates) {
        if (b.lhs.degree(base) > lambda) continue;
        if (b.lhs.divides(fib[i])) sets.unite(i, index.at(fib[i] / b.lhs * b.rhs));
        if (b.rhs.divides(fib[i])) sets.unite(i, index.at(fib[i] / b.rhs * b.lhs));
      }
    }
    for (std::size_t i = 1; i < fib.size(); ++i) {
      if (sets.find(i) != sets.find(0)) {
        report.failing_degree = lambda;
        report.witness = std::make_pair(fib[0], fib[i]);
        return report;
      }
    }
  }
  report.generates = true;
  return report;
}

bool verify_minimality(const NumericalSemigroup& s, const std::vector<Binomial>& candidates) {
  const auto generation = verify_generating_set(s, candidates);
  if (!generation.generates) {
    throw Error(ErrorCode::NotGenerating,
                "candidates do not generate the toric ideal (first failure in degree " +
                    std::to_string(*generation.failing_degree) + ")");
  }
  std::map<Integer, Integer> counts;
  for (const auto& b : candidates) ++counts[b.degree(s.multiplicity())];
  return counts == first_graded_betti(s);
}

}  // namespace sally
