#include "largeness/filter.hpp"

#include <stdexcept>

#include "largeness/error.hpp"

namespace largeness {

  namespace {
    void check_carrier(FiniteSemigroup const& S, FilterBase const& F) {
      if (F.carrier_size() != S.size()) {
        throw Error(Errc::WidthMismatch,
                    "filter carrier " + std::to_string(F.carrier_size())
                        + " does not match semigroup of order " + std::to_string(S.size()));
      }
    }
  }  // namespace

  FilterBase make_filter(FiniteSemigroup const& S, std::vector<SubsetMask> base) {
    if (base.empty()) {
      throw Error(Errc::EmptyBase, "a filter base needs at least one set");
    }
    SubsetMask core = S.full();
    for (auto const& V : base) {
      if (V.width() != S.size()) {
        throw Error(Errc::WidthMismatch, "base set " + V.to_string() + " has the wrong width");
      }
      core &= V;
    }
    if (core.empty()) {
      throw Error(Errc::EmptyCore, "the base has empty intersection");
    }
    FilterBase F;
    F._carrier                = S.size();
    F._base                   = std::move(base);
    F._core.core              = core;
    F._core.is_subsemigroup   = is_subsemigroup(S, core);
    return F;
  }

  FilterBase principal_filter(FiniteSemigroup const& S, SubsetMask const& core) {
    return make_filter(S, {core});
  }

  FilterBase full_filter(FiniteSemigroup const& S) {
    return make_filter(S, {S.full()});
  }

  bool filter_member(FilterBase const& F, SubsetMask const& A) {
    return F.core().is_subset_of(A);
  }

  FilterBase filter_product_same_carrier(FiniteSemigroup const& S,
                                         FilterBase const&      F,
                                         FilterBase const&      G) {
    check_carrier(S, F);
    check_carrier(S, G);
    std::size_t const n = S.size();
    if (n > max_exhaustive_carrier) {
      throw Error(Errc::BoundExceeded, "filter product scan needs |S| <= 10", {n});
    }
    // x^{-1}A is in G iff core(G) lies in x^{-1}A iff x * core(G) lies in A
    std::vector<SubsetMask> shifted;
    shifted.reserve(n);
    for (Element x = 0; x < n; ++x) {
      shifted.push_back(S.left_translate(x, G.core()));
    }
    std::size_t members = 0;
    SubsetMask  core    = S.full();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      SubsetMask const A(n, bits);
      SubsetMask       good(n);
      for (Element x = 0; x < n; ++x) {
        if (shifted[x].is_subset_of(A)) {
          good.insert(x);
        }
      }
      if (filter_member(F, good)) {
        ++members;
        core &= A;
      }
    }
    // members must be exactly the supersets of their intersection
    std::size_t const expected = std::size_t{1} << (n - core.count());
    if (members == 0 || core.empty() || members != expected
        || core != filter_product_core(S, F, G)) {
      throw std::logic_error("filter product is not principal on core(F)core(G)");
    }
    return make_filter(S, {core});
  }

  SubsetMask filter_product_core(FiniteSemigroup const& S, FilterBase const& F, FilterBase const& G) {
    check_carrier(S, F);
    check_carrier(S, G);
    return S.product_set(F.core(), G.core());
  }

  bool is_idempotent_filter(FiniteSemigroup const& S, FilterBase const& F) {
    FilterBase const FF  = filter_product_same_carrier(S, F, F);
    bool             all = true;
    for_each_superset(F.core(), [&](SubsetMask const& A) { all = all && filter_member(FF, A); });
    return all;
  }

  FilterBase product_filter(FiniteSemigroup const& S,
                            FilterBase const&      F,
                            FiniteSemigroup const& T,
                            FilterBase const&      G) {
    check_carrier(S, F);
    check_carrier(T, G);
    if (S.size() * T.size() > max_carrier) {
      throw Error(Errc::Overflow, "product carrier exceeds " + std::to_string(max_carrier),
                  {S.size() * T.size()});
    }
    return product_filter(direct_product(S, T), F, G);
  }

  FilterBase product_filter(FiniteSemigroup const& ST, FilterBase const& F, FilterBase const& G) {
    if (ST.size() != F.carrier_size() * G.carrier_size()) {
      throw Error(Errc::WidthMismatch, "product carrier does not match the factor filters");
    }
    std::vector<SubsetMask> base;
    base.reserve(F.base().size() * G.base().size());
    for (auto const& A : F.base()) {
      for (auto const& B : G.base()) {
        base.push_back(cartesian(A, B));
      }
    }
    return make_filter(ST, std::move(base));
  }

  void require_subsemigroup_core(FilterBase const& F) {
    if (!F.core_is_subsemigroup()) {
      throw Error(Errc::CoreNotSubsemigroup,
                  "filter core " + F.core().to_string() + " is not closed under the operation");
    }
  }

}  // namespace largeness
