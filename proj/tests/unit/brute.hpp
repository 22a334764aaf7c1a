#pragma once

// Slow reference computations that share no code with the library: plain
// knapsack membership, gaps and pseudo-Frobenius numbers straight from the
// definitions, and the Sally generators written out by hand.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using Int = std::int64_t;

struct Semigroup {
  std::vector<Int> gens;
  std::vector<bool> member;  // member[x] for x <= limit
  Int limit = 0;

  explicit Semigroup(std::vector<Int> g) : gens(std::move(g)) {
    Int lo = *std::min_element(gens.begin(), gens.end());
    Int hi = *std::max_element(gens.begin(), gens.end());
    // Frobenius number is below lo * hi for gcd-1 sets.
    limit = lo * hi + hi;
    member.assign(static_cast<std::size_t>(limit + 1), false);
    member[0] = true;
    for (Int x = 1; x <= limit; ++x) {
      for (Int s : gens) {
        if (s <= x && member[static_cast<std::size_t>(x - s)]) {
          member[static_cast<std::size_t>(x)] = true;
          break;
        }
      }
    }
  }

  bool contains(Int x) const { return x >= 0 && (x > limit || member[static_cast<std::size_t>(x)]); }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    for (Int x = 1; x <= limit; ++x) {
      if (!contains(x)) out.push_back(x);
    }
    return out;
  }

  Int frobenius() const {
    auto g = gaps();
    return g.empty() ? -1 : g.back();
  }

  // x + s in S for every nonzero s in S, checked against every element up to
  // the conductor plus one multiplicity (not just the generators).
  std::vector<Int> pseudo_frobenius() const {
    std::vector<Int> out;
    const Int f = frobenius();
    for (Int x : gaps()) {
      bool ok = true;
      for (Int s = 1; s <= f + 1 && ok; ++s) {
        if (contains(s) && !contains(x + s)) ok = false;
      }
      if (ok) out.push_back(x);
    }
    return out;
  }

  std::vector<Int> minimal_generators() const {
    std::vector<Int> out;
    for (Int s = 1; s <= limit; ++s) {
      if (!contains(s)) continue;
      bool decomposable = false;
      for (Int a = 1; a < s && !decomposable; ++a) {
        decomposable = contains(a) && contains(s - a);
      }
      if (!decomposable) out.push_back(s);
    }
    return out;
  }
};

inline std::vector<Int> sally_gens(Int e, const std::set<Int>& dropped) {
  std::vector<Int> out;
  for (Int i = 0; i < e; ++i) {
    if (!dropped.count(i)) out.push_back(e + i);
  }
  return out;
}

}  // namespace brute
