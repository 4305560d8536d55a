#include <fstream>

#include "helpers.hpp"
#include "json.hpp"
#include "largeness/semigroup.hpp"

using namespace largeness;
using testing::mask;

TEST_CASE("subset masks") {
  auto A = SubsetMask::of(5, {0, 2, 4});
  CHECK(A.count() == 3);
  CHECK(A.to_string() == "{0,2,4}");
  CHECK(A.complement() == SubsetMask::of(5, {1, 3}));
  CHECK(A.min() == 0);
  CHECK(A.max() == 4);
  CHECK(SubsetMask::full(5).is_full());
  CHECK(SubsetMask(5).empty());

  std::vector<SubsetMask> seen;
  for_each_subset_canonical(SubsetMask::of(4, {1, 3}), [&](SubsetMask const& s) {
    seen.push_back(s);
    return false;
  });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0].empty());
  CHECK(seen[1] == SubsetMask::of(4, {1}));
  CHECK(seen[2] == SubsetMask::of(4, {3}));
  CHECK(seen[3] == SubsetMask::of(4, {1, 3}));
  for (std::size_t i = 1; i < seen.size(); ++i) {
    CHECK(canonical_less(seen[i - 1], seen[i]));
  }
}

TEST_CASE("validate_table") {
  CHECK(validate_table(2, {{0, 0}, {0, 1}}).size() == 2);
  CHECK(validate_table(1, {{0}}).size() == 1);

  try {
    validate_table(2, {{1, 0}, {0, 0}});
    FAIL("expected NonAssociative");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::NonAssociative);
    CHECK(e.detail() == std::vector<std::size_t>{0, 0, 1});
  }
  CHECK(testing::error_code([] { validate_table(2, {{0, 0}}); }) == Errc::BadShape);
  CHECK(testing::error_code([] { validate_table(2, {{0, 0, 0}, {0, 0}}); }) == Errc::BadShape);
  try {
    validate_table(2, {{0, 0}, {0, 2}});
    FAIL("expected BadEntry");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::BadEntry);
    CHECK(e.detail() == std::vector<std::size_t>{1, 1});
  }
}

TEST_CASE("builtins") {
  auto z4 = builtin::cyclic(4);
  CHECK(z4(3, 2) == 1);
  CHECK(z4.is_commutative());
  CHECK(z4.identity() == Element{0});
  CHECK(builtin::min2().identity() == Element{1});
  CHECK_FALSE(builtin::left_zero().identity().has_value());
  CHECK_FALSE(builtin::left_zero().is_commutative());
  CHECK(builtin::by_name("Z5")->size() == 5);
  CHECK(builtin::by_name("NULL3")->size() == 3);
  CHECK_FALSE(builtin::by_name("nope").has_value());
}

TEST_CASE("direct_product") {
  auto const M = builtin::min2();
  auto const MM = direct_product(M, M);
  REQUIRE(MM.size() == 4);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      Element const expect = pair_index(M, std::min(a / 2, b / 2), std::min(a % 2, b % 2));
      CHECK(MM(a, b) == expect);
    }
  }

  auto const ZZ = direct_product(builtin::cyclic(4), builtin::cyclic(4));
  CHECK(ZZ.size() == 16);
  CHECK(ZZ.identity() == Element{0});
  for (Element x = 0; x < 16; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < 16; ++y) {
      has_inverse = has_inverse || ZZ(x, y) == 0;
    }
    CHECK(has_inverse);
  }

  auto const LR = direct_product(builtin::left_zero(), builtin::right_zero());
  CHECK(oracle::idempotents(LR, oracle::all(4)) == 0xF);

  auto const A = SubsetMask::of(2, {1});
  auto const B = SubsetMask::of(3, {0, 2});
  auto const AB = cartesian(A, B);
  CHECK(AB == SubsetMask::of(6, {3, 5}));
  CHECK(project_first(AB, 2, 3) == A);
  CHECK(project_second(AB, 2, 3) == B);
}

TEST_CASE("translate_preimage") {
  auto const M = builtin::min2();
  CHECK(translate_preimage(M, 0, SubsetMask::of(2, {0})) == M.full());
  CHECK(translate_preimage(M, 1, SubsetMask::of(2, {1})) == SubsetMask::of(2, {1}));
  for (auto const& S : enumerate_semigroups(3)) {
    for (Element t = 0; t < 3; ++t) {
      CHECK(translate_preimage(S, t, S.full()) == S.full());
      for (oracle::Bits A = 0; A < 8; ++A) {
        CHECK(translate_preimage(S, t, mask(3, A)).bits() == oracle::preimage(S, t, A));
      }
    }
  }
}

TEST_CASE("kernel_report examples") {
  auto const m = kernel_report(builtin::min2());
  CHECK(m.kernel == SubsetMask::of(2, {0}));
  CHECK(m.idempotents == SubsetMask::of(2, {0, 1}));
  CHECK(m.minimal_idempotents == SubsetMask::of(2, {0}));

  auto const lz = kernel_report(builtin::left_zero());
  CHECK(lz.kernel.is_full());
  CHECK(lz.minimal_idempotents.is_full());

  auto const z = kernel_report(builtin::cyclic(4));
  CHECK(z.kernel.is_full());
  CHECK(z.minimal_idempotents == SubsetMask::of(4, {0}));
}

TEST_CASE("kernel_report agrees with the ideal scan on every core up to order 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (oracle::Bits C : oracle::subsemigroups(S)) {
        auto const rep = kernel_report(S, mask(n, C));
        oracle::Bits const K = oracle::kernel(S, C);
        CHECK(rep.kernel.bits() == K);
        CHECK(rep.idempotents.bits() == oracle::idempotents(S, C));
        CHECK(rep.minimal_idempotents.bits() == oracle::idempotents(S, K));
        oracle::Bits lefts = 0;
        for (auto const& L : rep.minimal_left_ideals) {
          CHECK(L.is_subset_of(rep.kernel));
          CHECK((lefts & L.bits()) == 0);
          lefts |= L.bits();
        }
        CHECK(lefts == K);
        oracle::Bits rights = 0;
        for (auto const& R : rep.minimal_right_ideals) {
          rights |= R.bits();
        }
        CHECK(rights == K);
      }
    }
  }
}

TEST_CASE("subsemigroups") {
  auto const z = subsemigroups(builtin::cyclic(4));
  REQUIRE(z.size() == 3);
  CHECK(z[0] == SubsetMask::of(4, {0}));
  CHECK(z[1] == SubsetMask::of(4, {0, 2}));
  CHECK(z[2].is_full());

  auto const m = subsemigroups(builtin::min2());
  REQUIRE(m.size() == 3);
  CHECK(m[0] == SubsetMask::of(2, {0}));
  CHECK(m[1] == SubsetMask::of(2, {1}));
  CHECK(m[2].is_full());

  CHECK(subsemigroups(builtin::trivial()).size() == 1);

  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      std::vector<oracle::Bits> got;
      for (auto const& E : subsemigroups(S)) {
        got.push_back(E.bits());
      }
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::subsemigroups(S));
    }
  }
}

TEST_CASE("enumeration matches the table-testing count") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const all = enumerate_semigroups(n);
    CHECK(all.size() == oracle::count_associative_tables(n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK_NOTHROW(validate_table(n, all[i].rows()));
      if (i > 0) {
        CHECK(all[i - 1].rows() < all[i].rows());
      }
    }
  }
  std::ifstream in(LARGENESS_FIXTURES "/semigroup_counts.json");
  REQUIRE(in);
  auto const doc = nlohmann::json::parse(in);
  CHECK(enumerate_semigroups(4).size() == doc["counts"]["4"].get<std::size_t>());
  CHECK(testing::error_code([] { enumerate_semigroups(5); }) == Errc::BoundExceeded);
}

TEST_CASE("for_each_semigroup streams the same tables and can stop") {
  std::size_t seen = 0;
  for_each_semigroup(3, [&](FiniteSemigroup const&) { return ++seen == 10; });
  CHECK(seen == 10);
}
