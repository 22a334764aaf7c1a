#include "sally/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace sally {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::NoGaps: return "NoGaps";
    case ErrorCode::VoidComplex: return "VoidComplex";
    case ErrorCode::InhomogeneousBinomial: return "InhomogeneousBinomial";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NonIntegerFormulaValue: return "NonIntegerFormulaValue";
  }
  return "Unknown";
}

namespace {

constexpr Integer kUnreached = std::numeric_limits<Integer>::max();

// Dijkstra over residues mod the multiplicity: apery[r] is the cheapest way
// to reach residue r using the generators.
std::vector<Integer> build_apery(const std::vector<Integer>& gens) {
  const Integer mult = gens.front();
  std::vector<Integer> dist(static_cast<std::size_t>(mult), kUnreached);
  dist[0] = 0;
  using Entry = std::pair<Integer, Integer>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [cost, residue] = queue.top();
    queue.pop();
    if (cost != dist[static_cast<std::size_t>(residue)]) continue;
    for (Integer g : gens) {
      const Integer next = cost + g;
      const auto r = static_cast<std::size_t>(next % mult);
      if (next < dist[r]) {
        dist[r] = next;
        queue.emplace(next, static_cast<Integer>(r));
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Integer> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  std::vector<Integer> sorted(gens.begin(), gens.end());
  for (Integer g : sorted) {
    if (g <= 0) throw Error(ErrorCode::EmptyInput, "generators must be positive, got " + std::to_string(g));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Integer g = 0;
  for (Integer s : sorted) g = std::gcd(g, s);
  if (g != 1) throw Error(ErrorCode::GcdNotOne, "generators share the factor " + std::to_string(g));

  // With the full list, apery-based membership decides minimality: s is
  // redundant iff s is reachable without using s itself, i.e. iff s minus some
  // smaller generator is in S.
  const auto full = build_apery(sorted);
  const Integer mult = sorted.front();
  auto in_full = [&](Integer x) {
    return x >= 0 && x >= full[static_cast<std::size_t>(x % mult)];
  };
  std::vector<Integer> minimal;
  for (Integer s : sorted) {
    bool redundant = false;
    for (Integer t : minimal) {
      if (in_full(s - t)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(s);
  }
  auto apery = build_apery(minimal);
  return NumericalSemigroup(std::move(minimal), std::move(apery));
}

void NumericalSemigroup::require_gaps(const char* op) const {
  if (is_whole_line()) throw Error(ErrorCode::NoGaps, std::string(op) + " is undefined for S = N");
}

std::vector<Integer> NumericalSemigroup::gaps() const {
  std::vector<Integer> out;
  if (is_whole_line()) return out;
  const Integer top = *std::max_element(apery_.begin(), apery_.end());
  for (Integer x = 1; x < top; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

Integer NumericalSemigroup::genus() const {
  Integer sum = 0;
  for (std::size_t r = 0; r < apery_.size(); ++r) sum += apery_[r] - static_cast<Integer>(r);
  return sum / multiplicity();
}

Integer NumericalSemigroup::frobenius() const {
  require_gaps("frobenius");
  return *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
}

std::vector<Integer> NumericalSemigroup::pseudo_frobenius() const {
  require_gaps("pseudo_frobenius");
  std::vector<Integer> out;
  for (Integer x : gaps()) {
    const bool closed = std::all_of(generators_.begin(), generators_.end(),
                                    [&](Integer s) { return contains(x + s); });
    if (closed) out.push_back(x);
  }
  return out;
}

Integer NumericalSemigroup::cm_type() const {
  return static_cast<Integer>(pseudo_frobenius().size());
}

bool NumericalSemigroup::is_symmetric() const {
  const Integer f = frobenius();
  for (Integer x = 0; x <= f; ++x) {
    if (contains(x) == contains(f - x)) return false;
  }
  return true;
}

bool NumericalSemigroup::is_almost_symmetric() const {
  return 2 * genus() == frobenius() + cm_type();
}

void SallyParams::validate() const {
  if (e < 4) throw Error(ErrorCode::ParamOutOfRange, "multiplicity e must be at least 4, got " + std::to_string(e));
  if (dropped.empty() || dropped.size() > 2) {
    throw Error(ErrorCode::ParamOutOfRange, "one or two offsets must be dropped");
  }
  for (Integer d : dropped) {
    if (d < 1 || d > e - 1) {
      throw Error(ErrorCode::ParamOutOfRange,
                  "dropped offset " + std::to_string(d) + " outside [1, " + std::to_string(e - 1) + "]");
    }
  }
  if (dropped.size() == 2 && e < 6) {
    throw Error(ErrorCode::ParamOutOfRange, "S_e<m,n> requires e >= 6, got " + std::to_string(e));
  }
}

NumericalSemigroup sally(const SallyParams& params) {
  params.validate();
  std::vector<Integer> gens;
  for (Integer i = 0; i < params.e; ++i) {
    if (!params.dropped.contains(i)) gens.push_back(params.e + i);
  }
  return NumericalSemigroup::from_generators(gens);
}

NumericalSemigroup sally_one(Integer e, Integer m) { return sally({e, {m}}); }

NumericalSemigroup sally_two(Integer e, Integer m, Integer n) {
  if (m >= n) {
    throw Error(ErrorCode::ParamOutOfRange,
                "S_e<m,n> requires m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  return sally({e, {m, n}});
}

}  // namespace sally
