#include "doctest.h"
#include "sally/conjectures.hpp"
#include "sally/formulas.hpp"

using namespace sally;

namespace {

bool same(const ConjectureReport& a, const ConjectureReport& b) {
  if (a.conjecture_id != b.conjecture_id || a.e != b.e || a.cases.size() != b.cases.size()) return false;
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    const auto &x = a.cases[i], &y = b.cases[i];
    if (x.params != y.params || x.j != y.j || x.relation != y.relation || x.lhs != y.lhs || x.rhs != y.rhs ||
        x.verdict != y.verdict) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("conjecture 3 at e = 7") {
  const auto r = scan(3, 7);
  const std::vector<Integer> expected{10, 20, 15, 4};
  REQUIRE(r.cases.size() == 8);
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const auto& c = r.cases[i];
    CHECK(c.params == (i < 4 ? "n=4" : "n=5"));
    CHECK(c.j == static_cast<Integer>(i % 4) + 1);
    CHECK(c.rhs == expected[i % 4]);
  }
}

TEST_CASE("conjecture 4 with n = m compares a semigroup with itself") {
  for (Integer e = 8; e <= 9; ++e) {
    const auto r = scan(4, e);
    for (const auto& c : r.cases) {
      const auto comma = c.params.find(',');
      if (c.params.substr(2, comma - 2) == c.params.substr(comma + 3)) CHECK(c.verdict == Verdict::Holds);
    }
  }
}

TEST_CASE("conjecture 1 at m = 2 below the top index follows from the two Betti corollaries") {
  for (Integer e = 6; e <= 9; ++e) {
    const auto r = scan(1, e);
    for (const auto& c : r.cases) {
      if (c.params != "m=2") continue;
      CAPTURE(e);
      CAPTURE(c.j);
      CHECK(c.lhs == betti_closed(BettiFamily::S2, e, c.j));
      if (c.j <= e - 3) CHECK(c.verdict == Verdict::Holds);
      // At j = e-2 both corollaries give beta(2) = e-2 and beta(1) = 1, while
      // the conjectured right side is 1 + C(e-2, e-3) = e-1.
      if (c.j == e - 2) CHECK(c.rhs == e - 1);
    }
  }
}

TEST_CASE("every case carries both sides and a consistent verdict") {
  for (int id = 1; id <= kConjectureCount; ++id) {
    const auto r = scan(id, 8);
    CHECK(r.count(Verdict::Holds) + r.count(Verdict::Fails) + r.count(Verdict::Inapplicable) == r.cases.size());
    for (const auto& c : r.cases) {
      if (c.verdict != Verdict::Inapplicable) CHECK((c.lhs == c.rhs) == (c.verdict == Verdict::Holds));
    }
  }
}

TEST_CASE("scans are deterministic across job counts") {
  for (int id = 1; id <= kConjectureCount; ++id) CHECK(same(scan(id, 8, 1), scan(id, 8, 4)));
}

TEST_CASE("scan arguments") {
  CHECK_THROWS_AS(scan(0, 8), Error);
  CHECK_THROWS_AS(scan(6, 8), Error);
  CHECK_THROWS_AS(scan(1, 5), Error);
  CHECK(scan(2, 6).cases.empty());
  CHECK(to_string(Verdict::Inapplicable) == std::string("inapplicable"));
}
