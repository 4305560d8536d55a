#pragma once

#include <vector>

#include "largeness/semigroup.hpp"

namespace largeness {

  struct FilterCore {
    SubsetMask core;
    bool       is_subsemigroup = false;
  };

  // A filter on a finite carrier, given by a finite base. On a finite carrier
  // the generated filter is principal: its members are exactly the supersets
  // of the core (the intersection of the base). The base is kept for the
  // base-quantified cross-checks.
  class FilterBase {
   public:
    std::size_t carrier_size() const noexcept {
      return _carrier;
    }

    std::vector<SubsetMask> const& base() const noexcept {
      return _base;
    }

    SubsetMask const& core() const noexcept {
      return _core.core;
    }

    bool core_is_subsemigroup() const noexcept {
      return _core.is_subsemigroup;
    }

    FilterCore const& core_info() const noexcept {
      return _core;
    }

   private:
    friend FilterBase make_filter(FiniteSemigroup const&, std::vector<SubsetMask>);

    std::size_t             _carrier = 0;
    std::vector<SubsetMask> _base;
    FilterCore              _core;
  };

  // Throws Error(EmptyBase) for an empty base and Error(EmptyCore) when the
  // base has empty intersection (the generated family would contain the
  // empty set).
  FilterBase make_filter(FiniteSemigroup const& S, std::vector<SubsetMask> base);
  FilterBase principal_filter(FiniteSemigroup const& S, SubsetMask const& core);
  FilterBase full_filter(FiniteSemigroup const& S);

  bool filter_member(FilterBase const& F, SubsetMask const& A);

  // The filter {A : {x : x^{-1}A in G} in F}, computed by scanning every
  // subset of the carrier. The result is principal with core core(F)core(G);
  // a violation of that fact raises std::logic_error.
  FilterBase filter_product_same_carrier(FiniteSemigroup const& S,
                                         FilterBase const&      F,
                                         FilterBase const&      G);

  // core(F) * core(G), elementwise.
  SubsetMask filter_product_core(FiniteSemigroup const& S, FilterBase const& F, FilterBase const& G);

  // F is contained in F * F, checked member by member against the scanned
  // product filter.
  bool is_idempotent_filter(FiniteSemigroup const& S, FilterBase const& F);

  // The filter on S x T generated by {A x B : A in F, B in G}.
  FilterBase product_filter(FiniteSemigroup const& S,
                            FilterBase const&      F,
                            FiniteSemigroup const& T,
                            FilterBase const&      G);

  // Same filter, built on an already computed ST = direct_product(S, T).
  FilterBase product_filter(FiniteSemigroup const& ST, FilterBase const& F, FilterBase const& G);

  // Throws Error(CoreNotSubsemigroup) unless core(F) * core(F) is inside core(F).
  void require_subsemigroup_core(FilterBase const& F);

}  // namespace largeness
