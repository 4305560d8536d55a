#include "helpers.hpp"
#include "largeness/largeness.hpp"

using namespace largeness;
using testing::mask;

namespace {

  constexpr LargenessKind filter_kinds[] = {
      LargenessKind::FThick,
      LargenessKind::FSyndetic,
      LargenessKind::PwsFSyndeticCovering,
      LargenessKind::PwsFSyndeticFip,
  };

  constexpr Route routes[] = {Route::ClosedForm, Route::Definitional, Route::Kernel};

  bool oracle_decides(FiniteSemigroup const& S, oracle::Bits C, oracle::Bits A, LargenessKind kind) {
    switch (kind) {
      case LargenessKind::FThick: return oracle::f_thick(S, C, A);
      case LargenessKind::FSyndetic: return oracle::f_syndetic(S, C, A);
      default: return (A & oracle::kernel(S, C)) != 0;
    }
  }

}  // namespace

TEST_CASE("kind and route names round trip") {
  for (auto k : {LargenessKind::Thick, LargenessKind::Syndetic, LargenessKind::PiecewiseSyndetic, LargenessKind::FThick,
                 LargenessKind::FSyndetic, LargenessKind::PwsFSyndeticCovering, LargenessKind::PwsFSyndeticFip,
                 LargenessKind::Central, LargenessKind::FCentral, LargenessKind::FQuasiCentral}) {
    CHECK(parse_kind(kind_name(k)) == k);
  }
  for (auto r : routes) {
    CHECK(parse_route(route_name(r)) == r);
  }
  CHECK_FALSE(parse_kind("large").has_value());
}

TEST_CASE("plain checks on MIN2") {
  auto const M  = builtin::min2();
  auto const A0 = SubsetMask::of(2, {0});
  auto const A1 = SubsetMask::of(2, {1});
  for (auto r : routes) {
    CHECK(check_basic(M, A0, LargenessKind::Thick, r).holds);
    CHECK(check_basic(M, A0, LargenessKind::Syndetic, r).holds);
    CHECK(check_basic(M, A0, LargenessKind::PiecewiseSyndetic, r).holds);
    CHECK_FALSE(check_basic(M, A1, LargenessKind::Thick, r).holds);
    CHECK_FALSE(check_basic(M, A1, LargenessKind::Syndetic, r).holds);
    CHECK_FALSE(check_basic(M, A1, LargenessKind::PiecewiseSyndetic, r).holds);
  }
  auto const syn = check_basic(M, A0, LargenessKind::Syndetic);
  REQUIRE(syn.witness);
  CHECK(syn.witness->kind == "covering-set");
  CHECK(syn.witness->sets.at(0) == A0);
  auto const th = check_basic(M, A0, LargenessKind::Thick);
  REQUIRE(th.witness);
  CHECK(th.witness->elements.at(0) == 0);
}

TEST_CASE("the full set is large in every sense") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (auto k : {LargenessKind::Thick, LargenessKind::Syndetic, LargenessKind::PiecewiseSyndetic}) {
        CHECK(check_basic(S, S.full(), k).holds);
      }
      CHECK(check_central(S, S.full()).holds);
    }
  }
}

TEST_CASE("filter-relative checks on Z4 with core {0,2}") {
  auto const z4 = builtin::cyclic(4);
  auto const F  = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  auto const A  = SubsetMask::of(4, {2});

  auto const syn = check_filter_largeness(z4, F, A, LargenessKind::FSyndetic);
  CHECK(syn.holds);
  REQUIRE(syn.witness);
  CHECK(union_preimage(z4, syn.witness->sets.at(0), A).bits() == 0b0101);
  CHECK(syn.witness->sets.at(0) == SubsetMask::of(4, {0, 2}));

  for (auto r : routes) {
    CHECK(check_filter_largeness(z4, F, A, LargenessKind::PwsFSyndeticCovering, r).holds);
    CHECK(check_filter_largeness(z4, F, A, LargenessKind::PwsFSyndeticFip, r).holds);
  }
  CHECK((A & kernel_report(z4, F.core()).kernel) == A);

  CHECK(testing::error_code([&] {
          check_filter_largeness(z4, principal_filter(z4, SubsetMask::of(4, {1})), A, LargenessKind::FSyndetic);
        })
        == Errc::CoreNotSubsemigroup);
}

TEST_CASE("central") {
  auto const z4 = builtin::cyclic(4);
  for (oracle::Bits A = 0; A < 16; ++A) {
    CHECK(check_central(z4, mask(4, A)).holds == ((A & 1) != 0));
  }
  CHECK_FALSE(check_central(z4, SubsetMask::of(4, {1, 2, 3})).holds);
  auto const F = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  CHECK_FALSE(check_central(z4, SubsetMask::of(4, {2}), F).holds);
  CHECK(check_central(builtin::left_zero(), SubsetMask::of(2, {1})).holds);
}

TEST_CASE("quasi-central") {
  auto const M = builtin::min2();
  auto const v = check_quasi_central(M, full_filter(M), SubsetMask::of(2, {0}));
  CHECK(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->sets.at(0) == SubsetMask::of(2, {0}));

  auto const z4 = builtin::cyclic(4);
  CHECK_FALSE(check_quasi_central(z4, principal_filter(z4, SubsetMask::of(4, {0, 2})), SubsetMask::of(4, {2})).holds);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      CHECK(check_quasi_central(S, full_filter(S), S.full()).holds);
    }
  }
}

TEST_CASE("every route agrees with the brute-force predicates up to order 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (oracle::Bits C : oracle::subsemigroups(S)) {
        auto const F = principal_filter(S, mask(n, C));
        for (oracle::Bits A = 0; A <= oracle::all(n); ++A) {
          for (auto kind : filter_kinds) {
            bool const expect = oracle_decides(S, C, A, kind);
            CHECK(decide(S, mask(n, C), mask(n, A), kind) == expect);
            for (auto r : routes) {
              auto const v = check_filter_largeness(S, F, mask(n, A), kind, r);
              CHECK(v.holds == expect);
              CHECK(reverify(S, &F, mask(n, A), kind, v));
            }
          }
          bool const central = (A & oracle::idempotents(S, oracle::kernel(S, C))) != 0;
          CHECK(check_central(S, mask(n, A), F).holds == central);
          CHECK(check_quasi_central(S, F, mask(n, A)).holds == central);
        }
      }
    }
  }
}

TEST_CASE("with the whole carrier as core the filter notions are the plain ones") {
  std::pair<LargenessKind, LargenessKind> const pairs[] = {
      {LargenessKind::Thick, LargenessKind::FThick},
      {LargenessKind::Syndetic, LargenessKind::FSyndetic},
      {LargenessKind::PiecewiseSyndetic, LargenessKind::PwsFSyndeticCovering},
      {LargenessKind::PiecewiseSyndetic, LargenessKind::PwsFSyndeticFip},
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      if (!oracle::closed(S, oracle::all(n))) {
        continue;
      }
      auto const full = full_filter(S);
      for (oracle::Bits A = 0; A <= oracle::all(n); ++A) {
        for (auto [plain, rel] : pairs) {
          for (auto r : routes) {
            auto const v = check_basic(S, mask(n, A), plain, r);
            CHECK(v.holds == check_filter_largeness(S, full, mask(n, A), rel, r).holds);
            CHECK(reverify(S, nullptr, mask(n, A), plain, v));
          }
        }
        CHECK(check_central(S, mask(n, A)).holds == check_central(S, mask(n, A), full).holds);
      }
    }
  }
}

TEST_CASE("largeness is upward closed in the set") {
  for (auto const& S : enumerate_semigroups(3)) {
    for (oracle::Bits C : oracle::subsemigroups(S)) {
      for (oracle::Bits A = 0; A < 8; ++A) {
        for (oracle::Bits B = A; B < 8; B = (B + 1) | A) {
          for (auto kind : filter_kinds) {
            if (decide(S, mask(3, C), mask(3, A), kind)) {
              CHECK(decide(S, mask(3, C), mask(3, B), kind));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("check_largeness dispatch") {
  auto const z4 = builtin::cyclic(4);
  auto const F  = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  CHECK(check_largeness(z4, &F, SubsetMask::of(4, {0}), LargenessKind::FCentral).holds);
  CHECK(check_largeness(z4, nullptr, SubsetMask::of(4, {0}), LargenessKind::Central).holds);
  auto const full = full_filter(z4);
  for (oracle::Bits A = 0; A < 16; ++A) {
    CHECK(check_largeness(z4, nullptr, mask(4, A), LargenessKind::FSyndetic).holds
          == check_largeness(z4, &full, mask(4, A), LargenessKind::FSyndetic).holds);
  }
  CHECK(testing::error_code([&] { check_basic(z4, SubsetMask::of(3, {0}), LargenessKind::Thick); })
        == Errc::WidthMismatch);
}
