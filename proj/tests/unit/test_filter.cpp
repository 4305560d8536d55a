#include "helpers.hpp"
#include "largeness/filter.hpp"

using namespace largeness;
using testing::mask;

TEST_CASE("make_filter cores") {
  auto const z4 = builtin::cyclic(4);
  CHECK(make_filter(z4, {SubsetMask::of(4, {0, 2})}).core() == SubsetMask::of(4, {0, 2}));
  auto const F = make_filter(z4, {SubsetMask::of(4, {0, 1, 2}), SubsetMask::of(4, {0, 2, 3})});
  CHECK(F.core() == SubsetMask::of(4, {0, 2}));
  CHECK(F.core_is_subsemigroup());
  CHECK(F.base().size() == 2);
  CHECK(testing::error_code([&] { make_filter(z4, {SubsetMask::of(4, {1}), SubsetMask::of(4, {2})}); })
        == Errc::EmptyCore);
  CHECK(testing::error_code([&] { make_filter(z4, {}); }) == Errc::EmptyBase);
  CHECK(testing::error_code([&] { make_filter(z4, {SubsetMask::of(3, {1})}); }) == Errc::WidthMismatch);
  CHECK_FALSE(principal_filter(z4, SubsetMask::of(4, {1})).core_is_subsemigroup());
  CHECK(testing::error_code([&] { require_subsemigroup_core(principal_filter(z4, SubsetMask::of(4, {1}))); })
        == Errc::CoreNotSubsemigroup);
}

TEST_CASE("filter_member") {
  auto const F = principal_filter(builtin::cyclic(4), SubsetMask::of(4, {0, 2}));
  CHECK(filter_member(F, SubsetMask::of(4, {0, 1, 2})));
  CHECK_FALSE(filter_member(F, SubsetMask::of(4, {0})));
  CHECK(filter_member(F, SubsetMask::of(4, {0, 2})));
}

TEST_CASE("membership is the closure of the base under supersets and intersections") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const S   = builtin::null_semigroup(n);
    auto const top = oracle::all(n);
    for (oracle::Bits a = 1; a <= top; ++a) {
      for (oracle::Bits b = a; b <= top; ++b) {
        if ((a & b) == 0) {
          continue;
        }
        auto const F   = make_filter(S, {mask(n, a), mask(n, b)});
        auto const fam = oracle::filter_closure(n, {a, b});
        for (oracle::Bits X = 0; X <= top; ++X) {
          CHECK(filter_member(F, mask(n, X)) == (fam.count(X) == 1));
        }
      }
    }
  }
}

TEST_CASE("filter_product_same_carrier") {
  auto const z4 = builtin::cyclic(4);
  auto const F  = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  CHECK(filter_product_same_carrier(z4, F, F).core() == SubsetMask::of(4, {0, 2}));
  auto const G = principal_filter(z4, SubsetMask::of(4, {1}));
  CHECK(filter_product_same_carrier(z4, G, G).core() == SubsetMask::of(4, {2}));
  auto const full = full_filter(z4);
  CHECK(filter_product_same_carrier(z4, full, full).core().is_full());

  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      auto const P = filter_product_same_carrier(S, full_filter(S), full_filter(S));
      CHECK(P.core() == S.product_set(S.full(), S.full()));
    }
  }
}

TEST_CASE("is_idempotent_filter") {
  auto const z4 = builtin::cyclic(4);
  CHECK(is_idempotent_filter(z4, principal_filter(z4, SubsetMask::of(4, {0, 2}))));
  CHECK_FALSE(is_idempotent_filter(z4, principal_filter(z4, SubsetMask::of(4, {1}))));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (oracle::Bits C = 1; C <= oracle::all(n); ++C) {
        CHECK(is_idempotent_filter(S, principal_filter(S, mask(n, C))) == oracle::closed(S, C));
      }
    }
  }
}

TEST_CASE("product_filter") {
  auto const z4 = builtin::cyclic(4);
  auto const m  = builtin::min2();
  auto const H  = product_filter(z4, principal_filter(z4, SubsetMask::of(4, {0, 2})), m,
                                 principal_filter(m, SubsetMask::of(2, {0})));
  CHECK(H.carrier_size() == 8);
  CHECK(H.core() == SubsetMask::of(8, {pair_index(m, 0, 0), pair_index(m, 2, 0)}));
  CHECK(product_filter(z4, full_filter(z4), m, full_filter(m)).core().is_full());
}
