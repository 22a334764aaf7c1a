#include "sally/conjectures.hpp"

#include <algorithm>
#include <map>

#include "sally/error.hpp"
#include "sally/formulas.hpp"
#include "sally/hochster.hpp"
#include "sally/parallel.hpp"

namespace sally {

namespace {

using Key = std::set<Integer>;
using Totals = std::map<Key, std::vector<Integer>>;

struct Pending {
  std::string params;
  Integer j;
  std::string relation;
  Key lhs_family;
  // rhs = base(rhs_family) + offset; rhs_family empty means a pure formula.
  Key rhs_family;
  Integer offset;
};

std::string kv(const char* name, Integer value) { return std::string(name) + "=" + std::to_string(value); }

std::vector<Pending> enumerate(int id, Integer e) {
  std::vector<Pending> out;
  switch (id) {
    case 1:
      for (Integer m = 2; m <= e - 1; ++m) {
        for (Integer j = 0; j <= e - 2; ++j) {
          if (j <= m - 2) {
            out.push_back({kv("m", m), j, "beta_j(m) = beta_j(1)", {m}, {1}, 0});
          } else {
            out.push_back({kv("m", m), j, "beta_j(m) = beta_j(1) + C(e-m,j+1-m)", {m}, {1},
                           binomial(e - m, j + 1 - m)});
          }
        }
      }
      break;
    case 2:
      for (Integer n = 6; n <= e - 1; ++n) {
        for (Integer j = 0; j <= n - 5; ++j) {
          out.push_back({kv("n", n), j, "beta_j(2,n) = beta_j(2,3)", {2, n}, {2, 3}, 0});
        }
        out.push_back({kv("n", n), n - 4, "beta_j(2,n) = beta_j(2,3) + 1", {2, n}, {2, 3}, 1});
        if (n == e - 1) {
          out.push_back({kv("n", n), e - 4, "beta_j(2,e-1) = beta_j(2,3) + 3", {2, n}, {2, 3}, 3});
          out.push_back({kv("n", n), e - 3, "beta_j(2,e-1) = beta_j(2,3) + 2", {2, n}, {2, 3}, 2});
        }
      }
      break;
    case 3:
      for (Integer n : {4, 5}) {
        for (Integer j = 1; j <= e - 3; ++j) {
          out.push_back({kv("n", n), j, "beta_j(2,n) = j*C(e-2,j+1)", {2, n}, {}, j * binomial(e - 2, j + 1)});
        }
      }
      break;
    case 4:
      for (Integer m = 4; m <= e - 2; ++m) {
        for (Integer n = m; n <= e - 2; ++n) {
          for (Integer j = 1; j <= m - 3; ++j) {
            out.push_back({kv("m", m) + "," + kv("n", n), j, "beta_j(n,n+1) = beta_j(m,m+1)", {n, n + 1},
                           {m, m + 1}, 0});
          }
        }
      }
      break;
    case 5:
      for (Integer j = 0; j <= e - 5; ++j) {
        out.push_back({kv("m", 1), j, "beta_j(1,e-1) = j*C(e-3,j+1) + (e-4-j)*C(e-3,e-2-j)", {1, e - 1}, {},
                       j * binomial(e - 3, j + 1) + (e - 4 - j) * binomial(e - 3, e - 2 - j)});
      }
      out.push_back({kv("m", 1), e - 4, "beta_j(1,e-1) = 2e-7", {1, e - 1}, {}, 2 * e - 7});
      out.push_back({kv("m", 1), e - 3, "beta_j(1,e-1) = 2", {1, e - 1}, {}, 2});
      for (Integer m = 3; m <= e - 2; ++m) {
        for (Integer j = 0; j <= m - 2; ++j) {
          out.push_back({kv("m", m), j, "beta_j(m,e-1) = beta_j(1,e-1)", {m, e - 1}, {1, e - 1}, 0});
        }
      }
      break;
  }
  return out;
}

std::optional<Integer> lookup(const Totals& totals, const Key& family, Integer j) {
  const auto& seq = totals.at(family);
  if (j < 0 || j >= static_cast<Integer>(seq.size())) return std::nullopt;
  return seq[static_cast<std::size_t>(j)];
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::size_t ConjectureReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [v](const ConjectureCase& c) { return c.verdict == v; }));
}

ConjectureReport scan(int conjecture_id, Integer e, unsigned jobs) {
  if (conjecture_id < 1 || conjecture_id > kConjectureCount) {
    throw Error(ErrorCode::ParamOutOfRange, "conjecture id must be in [1, 5], got " + std::to_string(conjecture_id));
  }
  if (e < 6) throw Error(ErrorCode::ParamOutOfRange, "conjecture scans need e >= 6, got " + std::to_string(e));

  const auto pending = enumerate(conjecture_id, e);

  std::vector<Key> families;
  for (const auto& p : pending) {
    families.push_back(p.lhs_family);
    if (!p.rhs_family.empty()) families.push_back(p.rhs_family);
  }
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());

  std::vector<std::vector<Integer>> sequences(families.size());
  parallel_for(families.size(), jobs, [&](std::size_t i) {
    const auto s = sally(SallyParams{e, families[i]});
    sequences[i] = betti_table(s).totals;
  });
  Totals totals;
  for (std::size_t i = 0; i < families.size(); ++i) totals.emplace(families[i], std::move(sequences[i]));

  ConjectureReport report;
  report.conjecture_id = conjecture_id;
  report.e = e;
  for (const auto& p : pending) {
    ConjectureCase c{p.params, p.j, p.relation, 0, 0, Verdict::Inapplicable};
    const auto lhs = lookup(totals, p.lhs_family, p.j);
    std::optional<Integer> base = Integer{0};
    if (!p.rhs_family.empty()) base = lookup(totals, p.rhs_family, p.j);
    if (lhs && base) {
      c.lhs = *lhs;
      c.rhs = *base + p.offset;
      c.verdict = c.lhs == c.rhs ? Verdict::Holds : Verdict::Fails;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace sally
