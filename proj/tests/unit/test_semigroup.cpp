#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "sally/semigroup.hpp"

using namespace sally;

namespace {

std::vector<Integer> gens_of(const NumericalSemigroup& s) { return s.generators(); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::EmptyInput;
}

std::vector<NumericalSemigroup> random_semigroups(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<NumericalSemigroup> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<Integer> size(2, 5), value(3, 30);
    std::vector<Integer> g(static_cast<std::size_t>(size(rng)));
    for (auto& x : g) x = value(rng);
    Integer d = 0;
    for (Integer x : g) d = std::gcd(d, x);
    if (d != 1) continue;
    out.push_back(NumericalSemigroup::from_generators(g));
  }
  return out;
}

}  // namespace

TEST_CASE("from_generators examples") {
  auto s = NumericalSemigroup::from_generators({6, 8, 9, 10, 11});
  CHECK(s.multiplicity() == 6);
  CHECK(s.embedding_dimension() == 5);

  auto n = NumericalSemigroup::from_generators({1});
  CHECK(n.apery() == std::vector<Integer>{0});
  CHECK(n.is_whole_line());

  auto reduced = NumericalSemigroup::from_generators({6, 8, 9, 10, 11, 14});
  CHECK(gens_of(reduced) == std::vector<Integer>{6, 8, 9, 10, 11});

  auto unsorted = NumericalSemigroup::from_generators({11, 6, 9, 9, 8, 10});
  CHECK(unsorted == s);
}

TEST_CASE("from_generators errors") {
  CHECK(code_of([] { NumericalSemigroup::from_generators(std::vector<Integer>{}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { NumericalSemigroup::from_generators({4, 6, 10}); }) == ErrorCode::GcdNotOne);
  CHECK(code_of([] { NumericalSemigroup::from_generators({0, 3}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { NumericalSemigroup::from_generators({-2, 3}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("sally constructors") {
  CHECK(gens_of(sally_one(6, 1)) == std::vector<Integer>{6, 8, 9, 10, 11});
  auto top = sally_one(6, 5);
  CHECK(gens_of(top) == std::vector<Integer>{6, 7, 8, 9, 10});
  CHECK(top.width() == 4);
  CHECK(gens_of(sally_one(6, 3)) == std::vector<Integer>{6, 7, 8, 10, 11});
  CHECK(gens_of(sally_two(7, 2, 3)) == std::vector<Integer>{7, 8, 11, 12, 13});
  CHECK(gens_of(sally_two(8, 2, 6)) == std::vector<Integer>{8, 9, 11, 12, 13, 15});
  CHECK(gens_of(sally_two(6, 2, 3)) == std::vector<Integer>{6, 7, 10, 11});
  CHECK(sally::sally(SallyParams{6, {3}}) == sally_one(6, 3));
}

TEST_CASE("sally parameter validation") {
  CHECK(code_of([] { sally_one(3, 1); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally_one(6, 0); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally_one(6, 6); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally_two(5, 1, 2); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally_two(7, 3, 3); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally_two(7, 4, 3); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally::sally(SallyParams{7, {}}); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { sally::sally(SallyParams{7, {1, 2, 3}}); }) == ErrorCode::ParamOutOfRange);
  CHECK_NOTHROW(sally_one(4, 2));
}

TEST_CASE("membership") {
  CHECK_FALSE(sally_one(6, 1).contains(13));
  CHECK(sally_one(6, 1).contains(0));
  CHECK(sally_one(6, 3).contains(17));
  CHECK_FALSE(sally_one(6, 3).contains(-4));
}

TEST_CASE("gaps, Frobenius number, pseudo-Frobenius numbers, type") {
  CHECK(sally_one(6, 1).gaps() == std::vector<Integer>{1, 2, 3, 4, 5, 7, 13});
  CHECK(sally_one(6, 3).gaps() == std::vector<Integer>{1, 2, 3, 4, 5, 9});
  CHECK(NumericalSemigroup::from_generators({1}).genus() == 0);

  CHECK(sally_one(6, 1).frobenius() == 13);
  CHECK(sally_two(7, 2, 3).frobenius() == 17);
  CHECK(sally_two(8, 3, 5).frobenius() == 13);

  CHECK(sally_one(6, 3).pseudo_frobenius() == std::vector<Integer>{4, 5, 9});
  CHECK(sally_two(10, 1, 6).pseudo_frobenius() == std::vector<Integer>{5, 16, 21});
  CHECK(sally_two(8, 2, 6).pseudo_frobenius() == std::vector<Integer>{4, 7, 10, 14});

  CHECK(sally_one(6, 3).cm_type() == 3);
  CHECK(sally_one(6, 5).cm_type() == 1);
  CHECK(sally_two(8, 2, 6).cm_type() == 4);
}

TEST_CASE("symmetric and almost symmetric") {
  CHECK(sally_one(6, 1).is_symmetric());
  CHECK(sally_two(7, 2, 3).is_symmetric());
  CHECK_FALSE(sally_one(6, 3).is_symmetric());

  CHECK(sally_one(6, 3).is_almost_symmetric());
  CHECK(sally_one(6, 1).is_almost_symmetric());
  CHECK_FALSE(sally_two(8, 3, 5).is_almost_symmetric());
}

TEST_CASE("S = N has no gaps") {
  auto n = NumericalSemigroup::from_generators({1, 5});
  CHECK(n.gaps().empty());
  CHECK(code_of([&] { (void)n.frobenius(); }) == ErrorCode::NoGaps);
  CHECK(code_of([&] { (void)n.pseudo_frobenius(); }) == ErrorCode::NoGaps);
  CHECK(code_of([&] { (void)n.cm_type(); }) == ErrorCode::NoGaps);
}

TEST_CASE("random semigroups agree with the brute-force oracle") {
  for (const auto& s : random_semigroups(20240611u, 60)) {
    CAPTURE(s.generators());
    brute::Semigroup b(s.generators());
    CHECK(s.generators() == b.minimal_generators());
    for (Integer x = -3; x <= b.limit; ++x) REQUIRE(s.contains(x) == b.contains(x));
    if (s.is_whole_line()) continue;
    const auto gaps = s.gaps();
    CHECK(gaps == b.gaps());
    CHECK(s.genus() == static_cast<Integer>(gaps.size()));
    CHECK(s.frobenius() == gaps.back());
    const auto pf = s.pseudo_frobenius();
    CHECK(pf == b.pseudo_frobenius());
    CHECK(std::find(pf.begin(), pf.end(), s.frobenius()) != pf.end());
    if (s.is_symmetric()) {
      CHECK(s.cm_type() == 1);
      CHECK(2 * s.genus() == s.frobenius() + 1);
    }
    CHECK(s.is_almost_symmetric() == (2 * s.genus() == s.frobenius() + s.cm_type()));
  }
}

TEST_CASE("Apery set characterizes membership") {
  for (const auto& s : random_semigroups(7u, 30)) {
    const auto& ap = s.apery();
    const Integer m = s.multiplicity();
    Integer sum = 0;
    for (std::size_t r = 0; r < ap.size(); ++r) {
      CHECK(s.contains(ap[r]));
      CHECK(ap[r] % m == static_cast<Integer>(r));
      CHECK_FALSE(s.contains(ap[r] - m));
      sum += ap[r] - static_cast<Integer>(r);
    }
    CHECK(sum / m == s.genus());
  }
}

TEST_CASE("Sally semigroups match the oracle for e in [6, 12]") {
  for (Integer e = 6; e <= 12; ++e) {
    for (Integer m = 1; m < e; ++m) {
      brute::Semigroup b(brute::sally_gens(e, {m}));
      const auto s = sally_one(e, m);
      CHECK(s.gaps() == b.gaps());
      CHECK(s.pseudo_frobenius() == b.pseudo_frobenius());
      for (Integer n = m + 1; n < e; ++n) {
        brute::Semigroup b2(brute::sally_gens(e, {m, n}));
        const auto s2 = sally_two(e, m, n);
        CHECK(s2.generators() == b2.minimal_generators());
        CHECK(s2.pseudo_frobenius() == b2.pseudo_frobenius());
      }
    }
  }
}
