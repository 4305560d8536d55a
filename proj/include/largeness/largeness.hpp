#pragma once

#include <optional>
#include <string_view>

#include "largeness/filter.hpp"
#include "largeness/semigroup.hpp"
#include "largeness/verdict.hpp"

namespace largeness {

  enum class LargenessKind {
    Thick,
    Syndetic,
    PiecewiseSyndetic,
    FThick,
    FSyndetic,
    // "for every V there are a finite F_V in V and W_V in the filter with
    //  H*y inside F_V^{-1}A for every finite H in W_V, some y in V"
    PwsFSyndeticCovering,
    // "the family (x^{-1} F_V^{-1} A) n V, x in W_V, has the finite
    //  intersection property"
    PwsFSyndeticFip,
    Central,
    FCentral,
    FQuasiCentral,
  };

  // Which of the independent decision procedures to run.
  enum class Route {
    // Reduction to a statement about the core alone (default).
    ClosedForm,
    // Quantifies filter members V over every superset of the core, with the
    // monotone pruning documented at each checker.
    Definitional,
    // Characterization through the kernel K(core) and its minimal left ideals.
    Kernel,
  };

  std::string_view                kind_name(LargenessKind kind) noexcept;
  std::optional<LargenessKind>    parse_kind(std::string_view name) noexcept;
  bool                            is_filter_relative(LargenessKind kind) noexcept;
  std::string_view                route_name(Route route) noexcept;
  std::optional<Route>            parse_route(std::string_view name) noexcept;

  // Thick, Syndetic or PiecewiseSyndetic in S.
  Verdict check_basic(FiniteSemigroup const& S,
                      SubsetMask const&      A,
                      LargenessKind          kind,
                      Route                  route = Route::ClosedForm);

  // FThick, FSyndetic, PwsFSyndeticCovering or PwsFSyndeticFip relative to F.
  // Throws Error(CoreNotSubsemigroup) when core(F) is not closed.
  Verdict check_filter_largeness(FiniteSemigroup const& S,
                                 FilterBase const&      F,
                                 SubsetMask const&      A,
                                 LargenessKind          kind,
                                 Route                  route = Route::ClosedForm);

  // A meets the minimal idempotents of S.
  Verdict check_central(FiniteSemigroup const& S, SubsetMask const& A);

  // A contains an idempotent of K(core(F)).
  Verdict check_central(FiniteSemigroup const& S, SubsetMask const& A, FilterBase const& F);

  // Searches for a subsemigroup E inside A that is piecewise F-syndetic; the
  // constant chain C_n = E then witnesses F-quasi-centrality.
  Verdict check_quasi_central(FiniteSemigroup const& S, FilterBase const& F, SubsetMask const& A);

  // Dispatches on kind. Filter-relative kinds use the full filter when F is
  // null; plain kinds ignore F.
  Verdict check_largeness(FiniteSemigroup const& S,
                          FilterBase const*      F,
                          SubsetMask const&      A,
                          LargenessKind          kind,
                          Route                  route = Route::ClosedForm);

  // Witness-free closed-form decision used by the sweeps. `core` is the
  // filter core (S.full() for the plain kinds) and must be a subsemigroup.
  bool decide(FiniteSemigroup const& S, SubsetMask const& core, SubsetMask const& A, LargenessKind kind);

  // Re-checks a verdict against the definitions: a positive verdict's witness
  // must satisfy the defining predicate directly, and a negative verdict must
  // be confirmed by the definitional route and its counterexample must refute
  // the predicate.
  bool reverify(FiniteSemigroup const& S,
                FilterBase const*      F,
                SubsetMask const&      A,
                LargenessKind          kind,
                Verdict const&         verdict);

}  // namespace largeness
