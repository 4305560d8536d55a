#include "helpers.hpp"
#include "largeness/cpws.hpp"
#include "largeness/largeness.hpp"

using namespace largeness;
using testing::mask;

namespace {

  CpwsMaps uniform_maps(std::size_t r, SubsetMask const& G, SubsetMask const& delta) {
    return CpwsMaps{std::vector<SubsetMask>(subfamily_count(r), G), std::vector<SubsetMask>(subfamily_count(r), delta)};
  }

  HindmanCpwsMaps uniform_hindman(FiniteSemigroup const& S, std::size_t r, SubsetMask const& G, Element x) {
    return HindmanCpwsMaps{std::vector<SubsetMask>(subfamily_count(r), G),
                           std::vector<Element>(subfamily_count(r) << S.size(), x)};
  }

}  // namespace

TEST_CASE("subfamily intersections") {
  std::vector<SubsetMask> const fam{SubsetMask::of(4, {0, 1, 2}), SubsetMask::of(4, {1, 2, 3})};
  CHECK(subfamily_count(2) == 4);
  CHECK(subfamily_intersection(fam, 1) == fam[0]);
  CHECK(subfamily_intersection(fam, 2) == fam[1]);
  CHECK(subfamily_intersection(fam, 3) == SubsetMask::of(4, {1, 2}));
}

TEST_CASE("verify_cpws") {
  auto const z4 = builtin::cyclic(4);
  CHECK(verify_cpws(z4, full_filter(z4), {z4.full()}, uniform_maps(1, SubsetMask::of(4, {0}), z4.full())).holds);

  auto const F     = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  auto const maps  = uniform_maps(1, SubsetMask::of(4, {0}), SubsetMask::of(4, {0, 2}));
  auto const good  = verify_cpws(z4, F, {SubsetMask::of(4, {0, 2})}, maps);
  CHECK(good.holds);
  auto const bad = verify_cpws(z4, F, {SubsetMask::of(4, {1})}, maps);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->kind == "empty-intersection");

  CHECK(testing::error_code([&] { verify_cpws(z4, F, {SubsetMask::of(4, {1}), z4.full()}, maps); })
        == Errc::TableIncomplete);
  CHECK(testing::error_code([&] {
          verify_cpws(z4, F, {z4.full()}, uniform_maps(1, SubsetMask::of(4, {1}), SubsetMask::of(4, {0, 2})));
        })
        == Errc::InvalidArgument);
  CHECK(testing::error_code([&] {
          verify_cpws(z4, F, {z4.full()}, uniform_maps(1, SubsetMask::of(4, {0}), SubsetMask::of(4, {0})));
        })
        == Errc::InvalidArgument);
}

TEST_CASE("search_cpws_maps finds maps exactly when some maps verify") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (oracle::Bits C : oracle::subsemigroups(S)) {
        auto const F = principal_filter(S, mask(n, C));
        for (oracle::Bits A = 1; A <= oracle::all(n); ++A) {
          std::vector<SubsetMask> const fam{mask(n, A)};
          bool any = false;
          for (oracle::Bits G0 = 1; G0 <= C; ++G0) {
            for (oracle::Bits G1 = 1; G1 <= C; ++G1) {
              if ((G0 & ~C) || (G1 & ~C)) {
                continue;
              }
              for (oracle::Bits d = C; d <= oracle::all(n); d = (d + 1) | C) {
                CpwsMaps const m{{mask(n, G0), mask(n, G1)}, {mask(n, d), mask(n, d)}};
                any = any || verify_cpws(S, F, fam, m).holds;
              }
            }
          }
          auto const found = search_cpws_maps(S, F, fam);
          CHECK(found.has_value() == any);
          if (found) {
            CHECK(verify_cpws(S, F, fam, *found).holds);
          }
          CHECK(any == decide(S, mask(n, C), mask(n, A), LargenessKind::PwsFSyndeticCovering));
        }
      }
    }
  }
}

TEST_CASE("verify_directed_family") {
  auto const M = builtin::min2();
  auto const E = SubsetMask::of(2, {0});
  CHECK(verify_directed_family(M, E, DirectedFamilyWitness::constant(E), full_filter(M), CpwsMode::PerMember).holds);
  CHECK(verify_directed_family(M, M.full(), DirectedFamilyWitness::constant(M.full()), full_filter(M),
                               CpwsMode::Collectionwise)
            .holds);

  auto const z4 = builtin::cyclic(4);
  auto const v  = verify_directed_family(z4, SubsetMask::of(4, {1}), DirectedFamilyWitness::constant(SubsetMask::of(4, {1})),
                                         full_filter(z4), CpwsMode::PerMember);
  CHECK_FALSE(v.holds);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->kind == "condition-i-fails");
  CHECK(v.counterexample->elements == std::vector<Element>{0, 1});

  auto const outside = verify_directed_family(z4, SubsetMask::of(4, {0}), DirectedFamilyWitness::constant(z4.full()),
                                              full_filter(z4), CpwsMode::PerMember);
  CHECK(outside.counterexample->kind == "outside-target");

  DirectedFamilyWitness two{{SubsetMask::of(4, {0, 2}), SubsetMask::of(4, {0, 1, 2, 3})}, {0b01, 0b10}};
  auto const nd = verify_directed_family(z4, z4.full(), two, full_filter(z4), CpwsMode::PerMember);
  CHECK(nd.counterexample->kind == "not-directed");

  auto const chain = DirectedFamilyWitness::chain({z4.full(), SubsetMask::of(4, {0, 2})});
  CHECK(verify_directed_family(z4, z4.full(), chain, full_filter(z4), CpwsMode::PerMember).holds);

  DirectedFamilyWitness cyclic_order{{z4.full(), z4.full()}, {0b11, 0b11}};
  CHECK(verify_directed_family(z4, z4.full(), cyclic_order, full_filter(z4), CpwsMode::PerMember).counterexample->kind
        == "not-a-partial-order");
}

TEST_CASE("a verified constant witness makes the set central") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      for (oracle::Bits C : oracle::subsemigroups(S)) {
        auto const F = principal_filter(S, mask(n, C));
        for (oracle::Bits E : oracle::subsemigroups(S)) {
          auto const v = verify_directed_family(S, mask(n, E), DirectedFamilyWitness::constant(mask(n, E)), F,
                                                CpwsMode::PerMember);
          if (v.holds) {
            CHECK(check_central(S, mask(n, E), F).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("product directed witnesses and families") {
  auto const E  = SubsetMask::of(2, {0});
  auto const E2 = SubsetMask::of(3, {1, 2});
  auto const p  = product_directed_witness(DirectedFamilyWitness::constant(E), DirectedFamilyWitness::constant(E2), 3);
  REQUIRE(p.sets.size() == 1);
  CHECK(p.sets[0] == cartesian(E, E2));
  CHECK(p.below == std::vector<std::uint64_t>{1});

  auto const fam = product_family({SubsetMask::of(2, {0}), SubsetMask::of(2, {1})}, {SubsetMask::of(2, {1})});
  REQUIRE(fam.size() == 2);
  CHECK(fam[1] == cartesian(SubsetMask::of(2, {1}), SubsetMask::of(2, {1})));
}

TEST_CASE("product cpws maps") {
  auto const z4 = builtin::cyclic(4);
  auto const M  = builtin::min2();
  auto const ZM = direct_product(z4, M);

  auto const trivial = product_cpws_maps(uniform_maps(1, SubsetMask::of(4, {0}), z4.full()), 1,
                                         uniform_maps(1, SubsetMask::of(2, {1}), M.full()), 1, z4.full(), M.full());
  auto const H = product_filter(ZM, full_filter(z4), full_filter(M));
  CHECK(verify_cpws(ZM, H, {ZM.full()}, trivial).holds);

  auto const Fz    = principal_filter(z4, SubsetMask::of(4, {0, 2}));
  auto const mapsZ = uniform_maps(1, SubsetMask::of(4, {0}), SubsetMask::of(4, {0, 2}));
  auto const Fm    = full_filter(M);
  auto const mapsM = uniform_maps(1, SubsetMask::of(2, {0}), M.full());
  REQUIRE(verify_cpws(z4, Fz, {SubsetMask::of(4, {0, 2})}, mapsZ).holds);
  REQUIRE(verify_cpws(M, Fm, {SubsetMask::of(2, {0})}, mapsM).holds);
  auto const prod = product_cpws_maps(mapsZ, 1, mapsM, 1, Fz.core(), Fm.core());
  auto const fam  = product_family({SubsetMask::of(4, {0, 2})}, {SubsetMask::of(2, {0})});
  CHECK(verify_cpws(ZM, product_filter(ZM, Fz, Fm), fam, prod).holds);
}

TEST_CASE("translator maps") {
  auto const z4 = builtin::cyclic(4);
  auto const id = uniform_hindman(z4, 1, SubsetMask::of(4, {0}), 0);
  CHECK(verify_hindman_cpws(z4, {z4.full()}, id).holds);
  auto const fw = cpws_equiv_forward(z4, {z4.full()}, id);
  CHECK(fw.verdict.holds);
  CHECK(fw.sets.size() == 4);

  auto const disjoint = uniform_hindman(z4, 2, SubsetMask::of(4, {0}), 0);
  auto const v        = verify_hindman_cpws(z4, {SubsetMask::of(4, {1}), SubsetMask::of(4, {2})}, disjoint);
  CHECK_FALSE(v.holds);
  CHECK(v.counterexample->kind == "inclusion-fails");

  auto const lz = builtin::left_zero();
  CHECK(testing::error_code([&] { cpws_equiv_forward(lz, {lz.full()}, uniform_hindman(lz, 1, lz.full(), 0)); })
        == Errc::NoIdentity);
  CHECK(testing::error_code([&] { verify_hindman_cpws(z4, {z4.full()}, HindmanCpwsMaps{{z4.full()}, {}}); })
        == Errc::TableIncomplete);

  std::vector<SubsetMask> const evens{SubsetMask::of(4, {0, 2})};
  std::vector<SubsetMask> const G01(2, SubsetMask::of(4, {0, 1}));
  auto const fw2 = cpws_equiv_forward(z4, evens, uniform_hindman(z4, 1, SubsetMask::of(4, {0, 1}), 3));
  CHECK(fw2.verdict.holds);
  CHECK(has_fip(z4, evens, G01));
  auto const back = cpws_equiv_backward(z4, evens, G01);
  CHECK(back.verdict.holds);
  CHECK(verify_hindman_cpws(z4, evens, back.maps).holds);

  std::vector<SubsetMask> const G0(2, SubsetMask::of(4, {0}));
  CHECK_FALSE(has_fip(z4, evens, G0));
  try {
    cpws_equiv_backward(z4, {SubsetMask::of(4, {1})}, G0);
    FAIL("expected FipViolated");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::FipViolated);
    CHECK(e.detail() == std::vector<std::size_t>{0b11, 1});
  }
}

TEST_CASE("translator maps and intersection maps agree on small monoids") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups(n)) {
      if (!S.identity()) {
        continue;
      }
      for (oracle::Bits A = 1; A <= oracle::all(n); ++A) {
        std::vector<SubsetMask> const fam{mask(n, A)};
        for (oracle::Bits G = 1; G <= oracle::all(n); ++G) {
          std::vector<SubsetMask> const table(2, mask(n, G));
          bool const fip = has_fip(S, fam, table);
          if (fip) {
            auto const back = cpws_equiv_backward(S, fam, table);
            CHECK(verify_hindman_cpws(S, fam, back.maps).holds);
            CHECK(cpws_equiv_forward(S, fam, back.maps).verdict.holds);
          } else {
            CHECK(testing::error_code([&] { cpws_equiv_backward(S, fam, table); }) == Errc::FipViolated);
          }
        }
      }
    }
  }
}
