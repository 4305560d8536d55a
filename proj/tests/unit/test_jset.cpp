#include "helpers.hpp"
#include "largeness/jset.hpp"

using namespace largeness;
using testing::mask;

namespace {

  SequenceFamily constants(std::initializer_list<Element> values) {
    SequenceFamily fam;
    for (Element v : values) {
      fam.push_back(EventuallyPeriodicSeq::constant(v));
    }
    return fam;
  }

}  // namespace

TEST_CASE("sequences") {
  EventuallyPeriodicSeq const f{{1}, {0, 2}};
  CHECK(f.at(1) == 1);
  CHECK(f.at(2) == 0);
  CHECK(f.at(3) == 2);
  CHECK(f.at(4) == 0);
  CHECK(to_string(f) == "1|0,2");
  CHECK(to_string(EventuallyPeriodicSeq::constant(3)) == "|3");

  SequenceFamily const fam{f, EventuallyPeriodicSeq{{}, {1, 1, 0}}};
  CHECK(family_preperiod(fam) == 1);
  CHECK(family_period(fam) == 6);

  auto const z4 = builtin::cyclic(4);
  CHECK(testing::error_code([&] { validate_family(z4, {}); }) == Errc::InvalidArgument);
  CHECK(testing::error_code([&] { validate_family(z4, {EventuallyPeriodicSeq{{1}, {}}}); }) == Errc::InvalidArgument);
  CHECK(testing::error_code([&] { validate_family(z4, constants({4})); }) == Errc::BadEntry);
}

TEST_CASE("canonical sequences and family classes") {
  CHECK(canonical_sequences(2, 1, 2).size() == 8);
  CHECK(canonical_sequences(3, 1, 2).size() == 27);
  CHECK(canonical_sequences(3, 0, 1).size() == 3);
  auto const seqs = canonical_sequences(3, 1, 2);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = i + 1; j < seqs.size(); ++j) {
      bool same = true;
      for (std::size_t t = 1; t <= 8; ++t) {
        same = same && seqs[i].at(t) == seqs[j].at(t);
      }
      CHECK_FALSE(same);
    }
  }
  CHECK(family_class(2, FamilyClass{}).size() == 8 + 28);
  CHECK(family_class(2, FamilyClass{1, 0, 1}).size() == 2);
}

TEST_CASE("zfp examples") {
  auto const z4 = builtin::cyclic(4);
  CHECK(zfp(z4, constants({0, 2})) == SubsetMask::of(4, {0, 2}));
  CHECK(zfp(z4, constants({1, 3})).is_full());
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (Element e = 0; e < n; ++e) {
        if (S.is_idempotent(e)) {
          CHECK(zfp(S, constants({e})) == SubsetMask::single(n, e));
        }
      }
    }
  }
}

TEST_CASE("zfp equals the products over every finite index set") {
  auto check_family = [](FiniteSemigroup const& S, SequenceFamily const& fam) {
    for (std::size_t k : {1, 2}) {
      auto const tr = zfp_traced(S, fam, k);
      std::size_t const last = std::max(tr.horizon, k) + family_period(fam);
      CHECK(tr.result == zfp(S, fam, k));
      CHECK(tr.result.bits() == oracle::zfp(S, fam, k, last));
      CHECK(zfp_enumerate(S, fam, k, last).bits() == oracle::zfp(S, fam, k, last));
    }
  };
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (auto const& fam : family_class(n, FamilyClass{})) {
        check_family(S, fam);
      }
    }
  }
  auto const order3 = enumerate_semigroups(3);
  for (std::size_t i = 0; i < order3.size(); ++i) {
    auto const fams = family_class(3, FamilyClass{});
    for (std::size_t j = i % 11; j < fams.size(); j += 11) {
      check_family(order3[i], fams[j]);
    }
  }
}

TEST_CASE("is_good and good_from") {
  auto const z4 = builtin::cyclic(4);
  auto const F  = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  CHECK(is_good(z4, F, constants({0, 2})));
  CHECK_FALSE(is_good(z4, F, constants({1, 3})));
  CHECK(is_good(z4, full_filter(z4), constants({1, 3})));
  CHECK(testing::error_code([&] { is_good(z4, principal_filter(z4, SubsetMask::of(4, {1})), constants({1})); })
        == Errc::CoreNotSubsemigroup);

  SequenceFamily const tail{EventuallyPeriodicSeq{{1}, {2}}};
  CHECK_FALSE(is_good(z4, F, tail));
  CHECK(good_from(z4, F.core(), tail) == std::size_t{2});
  CHECK_FALSE(good_from(z4, F.core(), constants({1})).has_value());
}

TEST_CASE("j_witness examples") {
  auto const z4 = builtin::cyclic(4);
  auto const w  = j_witness_commutative(z4, SubsetMask::of(4, {3}), constants({1}));
  REQUIRE(w);
  CHECK(w->a == 2);
  CHECK(w->H == std::vector<std::size_t>{1});
  CHECK(verify_j_witness(z4, SubsetMask::of(4, {3}), constants({1}), *w));

  auto const any = j_witness(z4, z4.full(), constants({1, 2}));
  REQUIRE(any.status == SearchStatus::Found);
  CHECK(any.witness->m == 1);

  auto const M = builtin::min2();
  CHECK(j_witness(M, SubsetMask::of(2, {1}), constants({0})).status == SearchStatus::Refuted);
  CHECK(j_witness(M, SubsetMask::of(2, {1}), constants({0}), JBounds{3, 5}).status == SearchStatus::BoundExhausted);
}

TEST_CASE("f_j_witness") {
  auto const z4 = builtin::cyclic(4);
  auto const F  = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  auto const A  = SubsetMask::of(4, {1});
  auto const r  = f_j_witness(z4, F, A, constants({2}));
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(verify_j_witness(z4, A, constants({2}), *r.witness));
  CHECK(r.witness->m == 1);
  CHECK(r.witness->a == std::vector<Element>{0, 3});

  auto const r0 = f_j_witness(z4, F, F.core(), constants({0, 2}));
  REQUIRE(r0.status == SearchStatus::Found);
  CHECK(r0.witness->a == std::vector<Element>(r0.witness->m + 1, 0));

  CHECK(testing::error_code([&] { f_j_witness(z4, F, A, constants({1})); }) == Errc::NotGoodFamily);
}

TEST_CASE("witness search agrees with direct enumeration at order 2") {
  JBounds const bounds{2, 4};
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (auto const& fam : family_class(n, FamilyClass{})) {
        JReachability const reach(S, fam);
        for (oracle::Bits A = 0; A <= oracle::all(n); ++A) {
          auto const bounded = j_witness(S, mask(n, A), fam, bounds);
          CHECK((bounded.status == SearchStatus::Found) == oracle::j_witness_exists(S, A, fam, 2, 4));
          auto const closure = j_witness(S, mask(n, A), fam);
          CHECK((closure.status == SearchStatus::Found) == reach.hits(mask(n, A)));
          if (bounded.witness) {
            CHECK(verify_j_witness(S, mask(n, A), fam, *bounded.witness));
            CHECK(closure.status == SearchStatus::Found);
            for (oracle::Bits B = A; B <= oracle::all(n); B = (B + 1) | A) {
              CHECK(verify_j_witness(S, mask(n, B), fam, *bounded.witness));
            }
          }
          if (closure.witness) {
            CHECK(verify_j_witness(S, mask(n, A), fam, *closure.witness));
            CHECK(reach.min_steps(mask(n, A)) == closure.witness->m);
            auto const theta = in_theta(S, mask(n, A), fam, closure.witness->t);
            REQUIRE(theta);
            CHECK(*theta == closure.witness->a);
          } else {
            CHECK_FALSE(oracle::j_witness_exists(S, A, fam, 3, 6));
          }
        }
      }
    }
  }
}

TEST_CASE("additive witnesses on commutative monoids of order 3") {
  for (auto const& S : enumerate_semigroups(3)) {
    if (!S.is_commutative() || !S.identity()) {
      continue;
    }
    for (auto const& fam : family_class(3, FamilyClass{1, 1, 2})) {
      for (oracle::Bits A = 0; A < 8; ++A) {
        auto const add = j_witness_commutative(S, mask(3, A), fam);
        CHECK(add.has_value() == (j_witness(S, mask(3, A), fam).status == SearchStatus::Found));
        if (add) {
          CHECK(verify_j_witness(S, mask(3, A), fam, *add));
        }
      }
    }
  }
}

TEST_CASE("block unions") {
  auto const z4 = builtin::cyclic(4);
  std::vector<std::vector<std::size_t>> const blocks{{1}, {2}, {3}, {4}};

  auto const full = block_union_witness(z4, z4.full(), constants({1}), blocks, 2);
  REQUIRE(full);
  CHECK(full->K == std::vector<std::size_t>{1});

  auto const zero = block_union_witness(z4, SubsetMask::of(4, {0}), constants({1}), blocks, 4);
  REQUIRE(zero);
  CHECK(verify_j_witness(z4, SubsetMask::of(4, {0}), constants({1}), zero->witness));
  CHECK(zero->K == std::vector<std::size_t>{1});
  CHECK(in_theta(z4, SubsetMask::of(4, {0}), constants({1}), {1, 2, 3, 4}) == std::vector<Element>(5, 0));

  auto const M = builtin::min2();
  CHECK_FALSE(block_union_witness(M, SubsetMask::of(2, {1}), constants({0}), blocks, 4).has_value());

  CHECK(testing::error_code([&] { block_union_witness(z4, z4.full(), constants({1}), {{2}, {1}}, 2); })
        == Errc::BlockOrderViolation);
  CHECK(testing::error_code([&] { block_union_witness(z4, z4.full(), constants({1}), {{1, 3}, {2}}, 2); })
        == Errc::BlockOrderViolation);

  auto const sub = union_subsystem(z4, SubsetMask::of(4, {2}), constants({1}), {{1}, {2}, {3}, {4}, {5}, {6}}, 2, 3);
  REQUIRE(sub.size() == 3);
  std::size_t prev = 0;
  for (auto const& b : sub) {
    CHECK(b.K.front() > prev);
    prev = b.K.back();
    CHECK(verify_j_witness(z4, SubsetMask::of(4, {2}), constants({1}), b.witness));
  }
}
