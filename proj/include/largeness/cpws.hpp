#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "largeness/filter.hpp"
#include "largeness/semigroup.hpp"
#include "largeness/verdict.hpp"

namespace largeness {

  // Subfamilies of an r-member family are indexed by their member mask
  // 1 .. 2^r - 1. Index 0 is the empty subfamily and is never read.
  inline std::size_t subfamily_count(std::size_t r) {
    return std::size_t{1} << r;
  }

  // Intersection of the members selected by `mask`.
  SubsetMask subfamily_intersection(std::vector<SubsetMask> const& family, std::uint64_t mask);

  // A finite poset I with sets C_i. below[i] has bit j set when j <= i
  // (reflexive, so bit i is always set).
  struct DirectedFamilyWitness {
    std::vector<SubsetMask>    sets;
    std::vector<std::uint64_t> below;

    // One index carrying E.
    static DirectedFamilyWitness constant(SubsetMask const& E);
    // sets[0] >= sets[1] >= ... as indices: i + 1 is below i.
    static DirectedFamilyWitness chain(std::vector<SubsetMask> sets);
  };

  enum class CpwsMode {
    // every C_i is piecewise F-syndetic
    PerMember,
    // {C_i} is collectionwise piecewise F-syndetic
    Collectionwise,
  };

  // Witness tables for one filter member, indexed by subfamily mask. They are
  // stored for the core and reused unchanged for every larger member.
  struct CpwsMaps {
    std::vector<SubsetMask> G;
    std::vector<SubsetMask> delta;
  };

  // Checks that for every member V of F the sets
  //   y^{-1} G(Fh)^{-1} (n Fh)  n  V,   y in delta(Fh), Fh a subfamily
  // have a common point. Throws Error(TableIncomplete) when a table does not
  // cover every subfamily, and Error(InvalidArgument) when a G entry is empty
  // or leaves the core or a delta entry misses part of the core. The witness
  // is the least common point for V = core; the counterexample names the V.
  Verdict verify_cpws(FiniteSemigroup const&         S,
                      FilterBase const&              F,
                      std::vector<SubsetMask> const& family,
                      CpwsMaps const&                maps);

  // Decides the collectionwise property and returns verifying maps when they
  // exist. The one candidate tried is G = core, delta = core.
  std::optional<CpwsMaps> search_cpws_maps(FiniteSemigroup const&         S,
                                           FilterBase const&              F,
                                           std::vector<SubsetMask> const& family);

  // Directedness, the translate condition
  //   for all i and x in C_i there is j with C_j inside x^{-1} C_i,
  // every C_i inside A, and the largeness condition in the chosen mode. In
  // collectionwise mode `maps` is verified when given and searched otherwise.
  // Failures come back as a failing verdict whose counterexample kind is one
  // of "not-a-partial-order", "not-directed", "condition-i-fails",
  // "outside-target", "member-not-pws" or "not-collectionwise".
  Verdict verify_directed_family(FiniteSemigroup const&       S,
                                 SubsetMask const&            A,
                                 DirectedFamilyWitness const& w,
                                 FilterBase const&            F,
                                 CpwsMode                     mode,
                                 CpwsMaps const*              maps = nullptr);

  // Index (i, j) becomes i * |J| + j with the coordinatewise order; sets are
  // C_i x D_j on S x T (T has t_size elements).
  DirectedFamilyWitness product_directed_witness(DirectedFamilyWitness const& wA,
                                                 DirectedFamilyWitness const& wB,
                                                 std::size_t                  t_size);

  // Member (i, j) of the product family is A_i x B_j at index i * |B| + j.
  std::vector<SubsetMask> product_family(std::vector<SubsetMask> const& A, std::vector<SubsetMask> const& B);

  // Tables for the product family on S x T:
  //   G(Phi)     = G_A(Fh) x G_B(Gh)
  //   delta(Phi) = (delta_A(Fh) u V) x (delta_B(Gh) u W)
  // with Fh, Gh the two projections of the subfamily Phi. With plain_delta
  // the union with V and W is dropped.
  CpwsMaps product_cpws_maps(CpwsMaps const&   mapsA,
                             std::size_t       rA,
                             CpwsMaps const&   mapsB,
                             std::size_t       rB,
                             SubsetMask const& V,
                             SubsetMask const& W,
                             bool              plain_delta = false);

  // G indexed by subfamily mask; x indexed by H * 2^|S| + F for a subfamily
  // mask H and a nonempty subset F of S given by its bits.
  struct HindmanCpwsMaps {
    std::vector<SubsetMask> G;
    std::vector<Element>    x;
  };

  // For every nonempty F inside S and subfamilies Fh inside Hh:
  //   F * x(Hh, F)  inside  union over t in G(Fh) of t^{-1}(n Fh).
  // Throws Error(TableIncomplete) on short tables.
  Verdict verify_hindman_cpws(FiniteSemigroup const&         S,
                              std::vector<SubsetMask> const& family,
                              HindmanCpwsMaps const&         maps);

  struct FipFamily {
    // y^{-1} G(Fh)^{-1}(n Fh) for every y in S and subfamily Fh, listed with
    // Fh outer and y inner.
    std::vector<SubsetMask> sets;
    Verdict                 verdict;
  };

  // From translator maps to the intersection family. The point x(all, S)
  // lies in every set when the maps verify. Throws Error(NoIdentity) when S
  // has no identity element.
  FipFamily cpws_equiv_forward(FiniteSemigroup const&         S,
                               std::vector<SubsetMask> const& family,
                               HindmanCpwsMaps const&         maps);

  // True when every y^{-1} G(Fh)^{-1}(n Fh), y in S, has a common point.
  bool has_fip(FiniteSemigroup const& S, std::vector<SubsetMask> const& family, std::vector<SubsetMask> const& G);

  struct BackwardResult {
    HindmanCpwsMaps maps;
    Verdict         verdict;
  };

  // From G to translator maps: x(Hh, F) is the least point of the
  // intersection over y in F and nonempty Fh inside Hh. Throws
  // Error(FipViolated) with detail {F bits, Fh mask} when one is empty.
  BackwardResult cpws_equiv_backward(FiniteSemigroup const&         S,
                                     std::vector<SubsetMask> const& family,
                                     std::vector<SubsetMask> const& G);

}  // namespace largeness
