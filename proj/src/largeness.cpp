#include "largeness/largeness.hpp"

#include <array>
#include <stdexcept>

#include "largeness/error.hpp"

namespace largeness {

  namespace {
    struct KindName {
      LargenessKind    kind;
      std::string_view name;
    };

    constexpr std::array<KindName, 10> kind_names{{
        {LargenessKind::Thick, "thick"},
        {LargenessKind::Syndetic, "syndetic"},
        {LargenessKind::PiecewiseSyndetic, "pws"},
        {LargenessKind::FThick, "f-thick"},
        {LargenessKind::FSyndetic, "f-syndetic"},
        {LargenessKind::PwsFSyndeticCovering, "pws-f"},
        {LargenessKind::PwsFSyndeticFip, "pws-f-fip"},
        {LargenessKind::Central, "central"},
        {LargenessKind::FCentral, "f-central"},
        {LargenessKind::FQuasiCentral, "f-quasi-central"},
    }};

    void check_width(FiniteSemigroup const& S, SubsetMask const& A) {
      if (A.width() != S.size()) {
        throw Error(Errc::WidthMismatch,
                    "subset " + A.to_string() + " has width " + std::to_string(A.width())
                        + ", semigroup has order " + std::to_string(S.size()));
      }
    }

    // Least x in `candidates` with H * x inside `target`.
    std::optional<Element> first_translator(FiniteSemigroup const& S,
                                            SubsetMask const&      H,
                                            SubsetMask const&      candidates,
                                            SubsetMask const&      target) {
      for (Element x = 0; x < S.size(); ++x) {
        if (candidates.contains(x) && S.right_translate(H, x).is_subset_of(target)) {
          return x;
        }
      }
      return std::nullopt;
    }

    // Canonically least G inside `pool` whose preimage union covers `need`.
    std::optional<SubsetMask> least_cover(FiniteSemigroup const& S,
                                          SubsetMask const&      pool,
                                          SubsetMask const&      A,
                                          SubsetMask const&      need) {
      std::optional<SubsetMask> found;
      for_each_subset_canonical(pool, [&](SubsetMask const& G) {
        if (!G.empty() && need.is_subset_of(union_preimage(S, G, A))) {
          found = G;
          return true;
        }
        return false;
      });
      return found;
    }

    // Canonically least finite G inside `pool`, with least translator y in
    // `ys`, such that H * y lies in G^{-1}A.
    std::optional<std::pair<SubsetMask, Element>> least_cover_with_translator(
        FiniteSemigroup const& S,
        SubsetMask const&      pool,
        SubsetMask const&      H,
        SubsetMask const&      ys,
        SubsetMask const&      A) {
      std::optional<std::pair<SubsetMask, Element>> found;
      for_each_subset_canonical(pool, [&](SubsetMask const& G) {
        if (G.empty()) {
          return false;
        }
        if (auto y = first_translator(S, H, ys, union_preimage(S, G, A))) {
          found = std::make_pair(G, *y);
          return true;
        }
        return false;
      });
      return found;
    }

    template <typename Func>
    bool for_each_superset_canonical(SubsetMask const& core, Func&& visit) {
      return for_each_subset_canonical(core.complement(),
                                       [&](SubsetMask const& extra) { return visit(core | extra); });
    }

    Evidence translator_evidence(FiniteSemigroup const& S, SubsetMask const& H, Element x) {
      return Evidence{"translator", {S.right_translate(H, x)}, {x}};
    }

    // ---------------------------------------------------------------------
    // Plain notions on S
    // ---------------------------------------------------------------------

    Verdict thick_closed(FiniteSemigroup const& S, SubsetMask const& A) {
      // evaluated at F = S
      if (auto x = first_translator(S, S.full(), S.full(), A)) {
        return Verdict::pass(translator_evidence(S, S.full(), *x));
      }
      return Verdict::fail(Evidence{"finite-set-without-translator", {S.full()}, {}});
    }

    Verdict thick_definitional(FiniteSemigroup const& S, SubsetMask const& A) {
      std::optional<SubsetMask> bad;
      for_each_subset_canonical(S.full(), [&](SubsetMask const& F) {
        if (!F.empty() && !first_translator(S, F, S.full(), A)) {
          bad = F;
          return true;
        }
        return false;
      });
      if (bad) {
        return Verdict::fail(Evidence{"finite-set-without-translator", {*bad}, {}});
      }
      auto x = first_translator(S, S.full(), S.full(), A);
      return Verdict::pass(translator_evidence(S, S.full(), *x));
    }

    Verdict syndetic_closed(FiniteSemigroup const& S, SubsetMask const& A) {
      SubsetMask const covered = union_preimage(S, S.full(), A);
      if (!covered.is_full()) {
        return Verdict::fail(Evidence{"uncovered", {}, (S.full() - covered).elements()});
      }
      return Verdict::pass(Evidence{"covering-set", {*least_cover(S, S.full(), A, S.full())}, {}});
    }

    Verdict syndetic_definitional(FiniteSemigroup const& S, SubsetMask const& A) {
      if (auto G = least_cover(S, S.full(), A, S.full())) {
        return Verdict::pass(Evidence{"covering-set", {*G}, {}});
      }
      return Verdict::fail(Evidence{"no-covering-set", {union_preimage(S, S.full(), A)}, {}});
    }

    Verdict pws_closed(FiniteSemigroup const& S, SubsetMask const& A) {
      SubsetMask const target = union_preimage(S, S.full(), A);
      if (!first_translator(S, S.full(), S.full(), target)) {
        return Verdict::fail(Evidence{"no-translator", {target}, {}});
      }
      auto w = least_cover_with_translator(S, S.full(), S.full(), S.full(), A);
      return Verdict::pass(Evidence{"covering-set-and-translator", {w->first}, {w->second}});
    }

    Verdict pws_definitional(FiniteSemigroup const& S, SubsetMask const& A) {
      // exists G, for all finite F, exists x with F * x inside G^{-1}A
      std::optional<SubsetMask> good;
      for_each_subset_canonical(S.full(), [&](SubsetMask const& G) {
        if (G.empty()) {
          return false;
        }
        SubsetMask const target = union_preimage(S, G, A);
        bool             every  = true;
        for_each_subset_canonical(S.full(), [&](SubsetMask const& F) {
          if (!F.empty() && !first_translator(S, F, S.full(), target)) {
            every = false;
            return true;
          }
          return false;
        });
        if (every) {
          good = G;
          return true;
        }
        return false;
      });
      if (!good) {
        return Verdict::fail(Evidence{"no-covering-set", {}, {}});
      }
      Element const x
          = *first_translator(S, S.full(), S.full(), union_preimage(S, *good, A));
      return Verdict::pass(Evidence{"covering-set-and-translator", {*good}, {x}});
    }

    // ---------------------------------------------------------------------
    // Kernel characterizations inside a subsemigroup C
    // ---------------------------------------------------------------------

    Verdict thick_kernel(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      KernelReport const kr = kernel_report(S, C);
      for (auto const& L : kr.minimal_left_ideals) {
        if (L.is_subset_of(A)) {
          return Verdict::pass(Evidence{"minimal-left-ideal", {L}, {}});
        }
      }
      return Verdict::fail(Evidence{"no-minimal-left-ideal-inside", kr.minimal_left_ideals, {}});
    }

    Verdict syndetic_kernel(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      KernelReport const kr = kernel_report(S, C);
      for (auto const& L : kr.minimal_left_ideals) {
        if (!L.intersects(A)) {
          return Verdict::fail(Evidence{"missed-minimal-left-ideal", {L}, {}});
        }
      }
      return Verdict::pass(Evidence{"meets-minimal-left-ideals", kr.minimal_left_ideals, {}});
    }

    Verdict pws_kernel(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      KernelReport const kr  = kernel_report(S, C);
      SubsetMask const   hit = kr.kernel & A;
      if (hit.empty()) {
        return Verdict::fail(Evidence{"kernel-disjoint", {kr.kernel}, {}});
      }
      return Verdict::pass(Evidence{"kernel-element", {}, {hit.min()}});
    }

    // ---------------------------------------------------------------------
    // Filter-relative notions; C = core(F), filter members are V >= C.
    // ---------------------------------------------------------------------

    Verdict f_thick_closed(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      // evaluated at V = C, W_V = C and H = C
      if (auto x = first_translator(S, C, C, A)) {
        return Verdict::pass(translator_evidence(S, C, *x));
      }
      return Verdict::fail(Evidence{"filter-member-without-translator", {C}, {}});
    }

    Verdict f_thick_definitional(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      // for every V there is W_V with: every finite H in W_V has x in V with
      // H * x in A; evaluated at H = W_V
      std::optional<SubsetMask> bad;
      for_each_superset_canonical(C, [&](SubsetMask const& V) {
        bool found = false;
        for_each_superset_canonical(C, [&](SubsetMask const& W) {
          found = first_translator(S, W, V, A).has_value();
          return found;
        });
        if (!found) {
          bad = V;
        }
        return !found;
      });
      if (bad) {
        return Verdict::fail(Evidence{"filter-member-without-translator", {*bad}, {}});
      }
      auto v = f_thick_closed(S, C, A);
      if (!v.holds) {
        throw std::logic_error("f-thick: definitional and closed-form routes disagree");
      }
      return v;
    }

    Verdict f_syndetic_closed(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      // every y in C has some t in C with t * y in A
      SubsetMask const covered = union_preimage(S, C, A);
      if (!C.is_subset_of(covered)) {
        return Verdict::fail(Evidence{"uncovered", {C}, (C - covered).elements()});
      }
      return Verdict::pass(Evidence{"covering-set", {*least_cover(S, C, A, C)}, {}});
    }

    Verdict f_syndetic_definitional(FiniteSemigroup const& S,
                                    SubsetMask const&      C,
                                    SubsetMask const&      A) {
      // for every V there is a finite G in V with G^{-1}A in the filter;
      // evaluated at G = V
      std::optional<SubsetMask> bad;
      for_each_superset_canonical(C, [&](SubsetMask const& V) {
        if (!C.is_subset_of(union_preimage(S, V, A))) {
          bad = V;
          return true;
        }
        return false;
      });
      if (bad) {
        return Verdict::fail(Evidence{"filter-member-without-cover", {*bad}, {}});
      }
      auto v = f_syndetic_closed(S, C, A);
      if (!v.holds) {
        throw std::logic_error("f-syndetic: definitional and closed-form routes disagree");
      }
      return v;
    }

    Verdict pws_f_covering_closed(FiniteSemigroup const& S,
                                  SubsetMask const&      C,
                                  SubsetMask const&      A) {
      // exists y in C with C * y inside C^{-1}A
      SubsetMask const target = union_preimage(S, C, A);
      if (!first_translator(S, C, C, target)) {
        return Verdict::fail(Evidence{"no-translator", {C, target}, {}});
      }
      auto w = least_cover_with_translator(S, C, C, C, A);
      return Verdict::pass(Evidence{"covering-set-and-translator", {w->first}, {w->second}});
    }

    Verdict pws_f_covering_definitional(FiniteSemigroup const& S,
                                        SubsetMask const&      C,
                                        SubsetMask const&      A) {
      // for every V, evaluated at F_V = V and H = W_V
      std::optional<SubsetMask> bad;
      for_each_superset_canonical(C, [&](SubsetMask const& V) {
        SubsetMask const target = union_preimage(S, V, A);
        bool             found  = false;
        for_each_superset_canonical(C, [&](SubsetMask const& W) {
          found = first_translator(S, W, V, target).has_value();
          return found;
        });
        if (!found) {
          bad = V;
        }
        return !found;
      });
      if (bad) {
        return Verdict::fail(Evidence{"filter-member-without-translator", {*bad}, {}});
      }
      auto v = pws_f_covering_closed(S, C, A);
      if (!v.holds) {
        throw std::logic_error("pws-f: definitional and closed-form routes disagree");
      }
      return v;
    }

    SubsetMask fip_points_closed(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      SubsetMask const target = union_preimage(S, C, A);
      SubsetMask       points(S.size());
      C.for_each([&](Element y) {
        if (S.right_translate(C, y).is_subset_of(target)) {
          points.insert(y);
        }
      });
      return points;
    }

    Verdict pws_f_fip_closed(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      SubsetMask const points = fip_points_closed(S, C, A);
      if (points.empty()) {
        return Verdict::fail(Evidence{"empty-intersection", {C}, {}});
      }
      return Verdict::pass(Evidence{"fip-point", {C, C}, {points.min()}});
    }

    Verdict pws_f_fip_definitional(FiniteSemigroup const& S,
                                   SubsetMask const&      C,
                                   SubsetMask const&      A) {
      // Materializes {(x^{-1} F_V^{-1} A) n V : V in filter, x in W_V} with
      // F_V = V and W_V = C, then intersects the whole family.
      SubsetMask                running = S.full();
      std::optional<SubsetMask> emptied_at;
      for_each_superset_canonical(C, [&](SubsetMask const& V) {
        SubsetMask const inner = union_preimage(S, V, A);
        C.for_each([&](Element x) { running &= translate_preimage(S, x, inner) & V; });
        if (running.empty()) {
          emptied_at = V;
          return true;
        }
        return false;
      });
      if (emptied_at) {
        return Verdict::fail(Evidence{"empty-intersection", {*emptied_at}, {}});
      }
      return Verdict::pass(Evidence{"fip-point", {C, C}, {running.min()}});
    }

    Verdict dispatch_filter(FiniteSemigroup const& S,
                            SubsetMask const&      C,
                            SubsetMask const&      A,
                            LargenessKind          kind,
                            Route                  route) {
      switch (kind) {
        case LargenessKind::FThick:
          switch (route) {
            case Route::ClosedForm: return f_thick_closed(S, C, A);
            case Route::Definitional: return f_thick_definitional(S, C, A);
            case Route::Kernel: return thick_kernel(S, C, A);
          }
          break;
        case LargenessKind::FSyndetic:
          switch (route) {
            case Route::ClosedForm: return f_syndetic_closed(S, C, A);
            case Route::Definitional: return f_syndetic_definitional(S, C, A);
            case Route::Kernel: return syndetic_kernel(S, C, A);
          }
          break;
        case LargenessKind::PwsFSyndeticCovering:
          switch (route) {
            case Route::ClosedForm: return pws_f_covering_closed(S, C, A);
            case Route::Definitional: return pws_f_covering_definitional(S, C, A);
            case Route::Kernel: return pws_kernel(S, C, A);
          }
          break;
        case LargenessKind::PwsFSyndeticFip:
          switch (route) {
            case Route::ClosedForm: return pws_f_fip_closed(S, C, A);
            case Route::Definitional: return pws_f_fip_definitional(S, C, A);
            case Route::Kernel: return pws_kernel(S, C, A);
          }
          break;
        default: break;
      }
      throw Error(Errc::InvalidArgument,
                  std::string("not a filter largeness kind: ") + std::string(kind_name(kind)));
    }

    bool fip_point_valid(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A, Element y) {
      if (!C.contains(y)) {
        return false;
      }
      bool ok = true;
      for_each_superset(C, [&](SubsetMask const& V) {
        C.for_each([&](Element x) {
          bool hit = false;
          V.for_each([&](Element t) { hit = hit || A.contains(S(S(t, x), y)); });
          ok = ok && hit;
        });
      });
      return ok;
    }

    SubsetMask core_of(FiniteSemigroup const& S, FilterBase const* F) {
      return F == nullptr ? S.full() : F->core();
    }

    bool reverify_witness(FiniteSemigroup const& S,
                          SubsetMask const&      C,
                          SubsetMask const&      A,
                          LargenessKind          kind,
                          Evidence const&        w) {
      auto elem = [&](std::size_t i) { return w.elements.at(i); };
      auto set  = [&](std::size_t i) { return w.sets.at(i); };
      if (w.kind == "translator") {
        Element const x = elem(0);
        return C.contains(x) && S.right_translate(C, x).is_subset_of(A);
      }
      if (w.kind == "minimal-left-ideal") {
        SubsetMask const L = set(0);
        Element const    x = L.min();
        return C.contains(x) && L.is_subset_of(A) && S.right_translate(C, x) == L;
      }
      if (w.kind == "covering-set") {
        return set(0).is_subset_of(C) && C.is_subset_of(union_preimage(S, set(0), A));
      }
      if (w.kind == "meets-minimal-left-ideals") {
        return C.is_subset_of(union_preimage(S, C, A));
      }
      if (w.kind == "covering-set-and-translator") {
        SubsetMask const G = set(0);
        Element const    y = elem(0);
        return G.is_subset_of(C) && C.contains(y)
               && S.right_translate(C, y).is_subset_of(union_preimage(S, G, A));
      }
      if (w.kind == "kernel-element") {
        // the kernel element itself serves as the translator y with F_V = C
        Element const a = elem(0);
        return A.contains(a) && C.contains(a)
               && S.right_translate(C, a).is_subset_of(union_preimage(S, C, A));
      }
      if (w.kind == "fip-point") {
        return fip_point_valid(S, C, A, elem(0));
      }
      if (w.kind == "minimal-idempotent") {
        Element const e = elem(0);
        return A.contains(e) && S.is_idempotent(e) && kernel_report(S, C).kernel.contains(e);
      }
      if (w.kind == "subsemigroup-chain") {
        SubsetMask const E = set(0);
        return !E.empty() && E.is_subset_of(A) && is_subsemigroup(S, E)
               && pws_f_covering_closed(S, C, E).holds;
      }
      (void) kind;
      return false;
    }
  }  // namespace

  std::string_view kind_name(LargenessKind kind) noexcept {
    for (auto const& kn : kind_names) {
      if (kn.kind == kind) {
        return kn.name;
      }
    }
    return "unknown";
  }

  std::optional<LargenessKind> parse_kind(std::string_view name) noexcept {
    for (auto const& kn : kind_names) {
      if (kn.name == name) {
        return kn.kind;
      }
    }
    return std::nullopt;
  }

  bool is_filter_relative(LargenessKind kind) noexcept {
    switch (kind) {
      case LargenessKind::Thick:
      case LargenessKind::Syndetic:
      case LargenessKind::PiecewiseSyndetic:
      case LargenessKind::Central: return false;
      default: return true;
    }
  }

  std::string_view route_name(Route route) noexcept {
    switch (route) {
      case Route::ClosedForm: return "closed-form";
      case Route::Definitional: return "definitional";
      case Route::Kernel: return "kernel";
    }
    return "unknown";
  }

  std::optional<Route> parse_route(std::string_view name) noexcept {
    for (Route r : {Route::ClosedForm, Route::Definitional, Route::Kernel}) {
      if (route_name(r) == name) {
        return r;
      }
    }
    return std::nullopt;
  }

  Verdict check_basic(FiniteSemigroup const& S, SubsetMask const& A, LargenessKind kind, Route route) {
    check_width(S, A);
    switch (kind) {
      case LargenessKind::Thick:
        switch (route) {
          case Route::ClosedForm: return thick_closed(S, A);
          case Route::Definitional: return thick_definitional(S, A);
          case Route::Kernel: return thick_kernel(S, S.full(), A);
        }
        break;
      case LargenessKind::Syndetic:
        switch (route) {
          case Route::ClosedForm: return syndetic_closed(S, A);
          case Route::Definitional: return syndetic_definitional(S, A);
          case Route::Kernel: return syndetic_kernel(S, S.full(), A);
        }
        break;
      case LargenessKind::PiecewiseSyndetic:
        switch (route) {
          case Route::ClosedForm: return pws_closed(S, A);
          case Route::Definitional: return pws_definitional(S, A);
          case Route::Kernel: return pws_kernel(S, S.full(), A);
        }
        break;
      default: break;
    }
    throw Error(Errc::InvalidArgument,
                std::string("not a plain largeness kind: ") + std::string(kind_name(kind)));
  }

  Verdict check_filter_largeness(FiniteSemigroup const& S,
                                 FilterBase const&      F,
                                 SubsetMask const&      A,
                                 LargenessKind          kind,
                                 Route                  route) {
    check_width(S, A);
    if (F.carrier_size() != S.size()) {
      throw Error(Errc::WidthMismatch, "filter carrier does not match the semigroup");
    }
    require_subsemigroup_core(F);
    return dispatch_filter(S, F.core(), A, kind, route);
  }

  Verdict check_central(FiniteSemigroup const& S, SubsetMask const& A) {
    check_width(S, A);
    SubsetMask const mins = kernel_report(S).minimal_idempotents;
    SubsetMask const hit  = mins & A;
    if (hit.empty()) {
      return Verdict::fail(Evidence{"minimal-idempotents-missed", {mins}, {}});
    }
    return Verdict::pass(Evidence{"minimal-idempotent", {}, {hit.min()}});
  }

  Verdict check_central(FiniteSemigroup const& S, SubsetMask const& A, FilterBase const& F) {
    check_width(S, A);
    require_subsemigroup_core(F);
    // idempotent principal ultrafilters in K(closure of F) are the
    // idempotents of K(core)
    SubsetMask const mins = kernel_report(S, F.core()).minimal_idempotents;
    SubsetMask const hit  = mins & A;
    if (hit.empty()) {
      return Verdict::fail(Evidence{"minimal-idempotents-missed", {mins}, {}});
    }
    return Verdict::pass(Evidence{"minimal-idempotent", {}, {hit.min()}});
  }

  Verdict check_quasi_central(FiniteSemigroup const& S, FilterBase const& F, SubsetMask const& A) {
    check_width(S, A);
    require_subsemigroup_core(F);
    // Least subsemigroup E inside A that is piecewise F-syndetic; the
    // constant chain E is the witness.
    std::optional<SubsetMask> found;
    for_each_subset_canonical(A, [&](SubsetMask const& E) {
      if (!E.empty() && is_subsemigroup(S, E) && pws_f_covering_closed(S, F.core(), E).holds) {
        found = E;
        return true;
      }
      return false;
    });
    if (found) {
      return Verdict::pass(Evidence{"subsemigroup-chain", {*found}, {}});
    }
    return Verdict::fail(Evidence{"no-subsemigroup", {A}, {}});
  }

  Verdict check_largeness(FiniteSemigroup const& S,
                          FilterBase const*      F,
                          SubsetMask const&      A,
                          LargenessKind          kind,
                          Route                  route) {
    switch (kind) {
      case LargenessKind::Thick:
      case LargenessKind::Syndetic:
      case LargenessKind::PiecewiseSyndetic: return check_basic(S, A, kind, route);
      case LargenessKind::Central: return check_central(S, A);
      default: break;
    }
    FilterBase const full = full_filter(S);
    FilterBase const& G   = F == nullptr ? full : *F;
    switch (kind) {
      case LargenessKind::FCentral: return check_central(S, A, G);
      case LargenessKind::FQuasiCentral: return check_quasi_central(S, G, A);
      default: return check_filter_largeness(S, G, A, kind, route);
    }
  }

  bool decide(FiniteSemigroup const& S, SubsetMask const& core, SubsetMask const& A, LargenessKind kind) {
    if (A.empty()) {
      return false;
    }
    switch (kind) {
      case LargenessKind::Thick:
      case LargenessKind::FThick:
        return first_translator(S, core, core, A).has_value();
      case LargenessKind::Syndetic:
      case LargenessKind::FSyndetic:
        return core.is_subset_of(union_preimage(S, core, A));
      case LargenessKind::PiecewiseSyndetic:
      case LargenessKind::PwsFSyndeticCovering:
      case LargenessKind::PwsFSyndeticFip:
        return first_translator(S, core, core, union_preimage(S, core, A)).has_value();
      case LargenessKind::Central:
      case LargenessKind::FCentral:
        return kernel_report(S, core).minimal_idempotents.intersects(A);
      case LargenessKind::FQuasiCentral: {
        bool found = false;
        for_each_subset(A, [&](SubsetMask const& E) {
          found = found
                  || (!E.empty() && is_subsemigroup(S, E)
                      && first_translator(S, core, core, union_preimage(S, core, E)).has_value());
        });
        return found;
      }
    }
    return false;
  }

  bool reverify(FiniteSemigroup const& S,
                FilterBase const*      F,
                SubsetMask const&      A,
                LargenessKind          kind,
                Verdict const&         verdict) {
    SubsetMask const C = is_filter_relative(kind) ? core_of(S, F) : S.full();
    if (verdict.holds) {
      if (!verdict.witness) {
        return false;
      }
      if (kind == LargenessKind::PiecewiseSyndetic && verdict.witness->kind == "covering-set-and-translator") {
        // plain: S * x inside G^{-1}A, G any finite subset
        Element const x = verdict.witness->elements.at(0);
        return S.right_translate(S.full(), x)
            .is_subset_of(union_preimage(S, verdict.witness->sets.at(0), A));
      }
      if (kind == LargenessKind::Syndetic && verdict.witness->kind == "covering-set") {
        return union_preimage(S, verdict.witness->sets.at(0), A).is_full();
      }
      return reverify_witness(S, C, A, kind, *verdict.witness);
    }
    if (!verdict.counterexample) {
      return false;
    }
    Evidence const& ce = *verdict.counterexample;
    if (ce.kind == "uncovered") {
      // each listed y has no t in C with t * y in A
      for (Element y : ce.elements) {
        bool hit = false;
        C.for_each([&](Element t) { hit = hit || A.contains(S(t, y)); });
        if (hit) {
          return false;
        }
      }
    }
    switch (kind) {
      case LargenessKind::Central:
      case LargenessKind::FCentral: {
        KernelReport const kr = kernel_report(S, C);
        bool               any = false;
        A.for_each([&](Element a) { any = any || (S.is_idempotent(a) && kr.kernel.contains(a)); });
        return !any;
      }
      case LargenessKind::FQuasiCentral: {
        // brute force over every subset of A
        KernelReport const kr    = kernel_report(S, C);
        bool               found = false;
        for_each_subset(A, [&](SubsetMask const& E) {
          found = found || (!E.empty() && is_subsemigroup(S, E) && E.intersects(kr.kernel));
        });
        return !found;
      }
      default: break;
    }
    FilterBase const full = full_filter(S);
    return !check_largeness(S, F == nullptr ? &full : F, A, kind, Route::Definitional).holds;
  }

}  // namespace largeness
