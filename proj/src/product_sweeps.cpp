#include <array>
#include <functional>
#include <random>

#include "largeness/filter.hpp"
#include "largeness/largeness.hpp"
#include "largeness/sweep.hpp"
#include "sweep_support.hpp"

namespace largeness::sweeps {

  namespace {
    using detail::describe;
    using detail::finish_report;
    using detail::PairIndex;

    std::vector<SubsetMask> all_subsets(std::size_t n) {
      std::vector<SubsetMask> out;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        out.emplace_back(n, bits);
      }
      return out;
    }

    using Conclusion = std::function<bool(SubsetMask const&)>;

    // Conclusion predicate for kind on (ST, CH), with per-core work hoisted.
    Conclusion make_conclusion(FiniteSemigroup const& ST, SubsetMask const& CH, LargenessKind kind) {
      if (kind == LargenessKind::FCentral) {
        SubsetMask const mins = kernel_report(ST, CH).minimal_idempotents;
        return [mins](SubsetMask const& D) { return mins.intersects(D); };
      }
      return [&ST, CH, kind](SubsetMask const& D) { return decide(ST, CH, D, kind); };
    }

    std::string instance_detail(FiniteSemigroup const& S,
                                SubsetMask const&      CF,
                                SubsetMask const&      A,
                                FiniteSemigroup const& T,
                                SubsetMask const&      CG,
                                SubsetMask const&      B) {
      return describe(S) + " core " + CF.to_string() + " A " + A.to_string() + " x " + describe(T)
             + " core " + CG.to_string() + " B " + B.to_string();
    }

    // Shared driver: hypothesis hyp on each factor, conclusion on the product.
    SweepReport product_theorem_sweep(std::string const& id,
                                      LargenessKind      kind,
                                      SweepOptions const& o,
                                      std::function<bool(FiniteSemigroup const&, SubsetMask const&, SubsetMask const&)>
                                          hyp = {},
                                      std::function<Conclusion(FiniteSemigroup const&, SubsetMask const&)>
                                          concl = {}) {
      if (!hyp) {
        hyp = [kind](FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
          return decide(S, C, A, kind);
        };
      }
      if (!concl) {
        concl = [kind](FiniteSemigroup const& ST, SubsetMask const& CH) {
          return make_conclusion(ST, CH, kind);
        };
      }
      auto const U = core_universe(o.order, o.monoids_only);

      // passing[e][c] = subsets of U[e].S satisfying the hypothesis for core c
      std::vector<std::vector<std::vector<SubsetMask>>> passing(U.size());
      for (std::size_t e = 0; e < U.size(); ++e) {
        auto const subsets = all_subsets(U[e].S.size());
        for (auto const& C : U[e].cores) {
          std::vector<SubsetMask> ok;
          for (auto const& A : subsets) {
            if (hyp(U[e].S, C, A)) {
              ok.push_back(A);
            }
          }
          passing[e].push_back(std::move(ok));
        }
      }

      SweepAccumulator acc;
      bool             complete = true;
      if (!o.sample) {
        PairIndex const P{U.size()};
        complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
          std::size_t const     i  = P.first(k);
          std::size_t const     j  = P.second(k);
          auto const&           S  = U[i].S;
          auto const&           T  = U[j].S;
          FiniteSemigroup const ST = direct_product(S, T);
          for (std::size_t ci = 0; ci < U[i].cores.size(); ++ci) {
            for (std::size_t cj = 0; cj < U[j].cores.size(); ++cj) {
              SubsetMask const CF = U[i].cores[ci];
              SubsetMask const CG = U[j].cores[cj];
              Conclusion const ok = concl(ST, cartesian(CF, CG));
              a.instance((std::size_t{1} << S.size()) * (std::size_t{1} << T.size()));
              if (ok(ST.full())) {
                a.tally("full-sets-pass");
              } else {
                a.tally("full-sets-fail");
              }
              for (auto const& A : passing[i][ci]) {
                for (auto const& B : passing[j][cj]) {
                  a.hypothesis_hit();
                  if (!ok(cartesian(A, B))) {
                    a.violation({k, ci, cj, A.bits(), B.bits()}, instance_detail(S, CF, A, T, CG, B));
                  }
                }
              }
            }
          }
        }, acc);
      } else {
        std::vector<std::size_t> pool;
        for (std::size_t e = 0; e < U.size(); ++e) {
          if (U[e].S.size() == o.order) {
            pool.push_back(e);
          }
        }
        complete = run_tasks(*o.sample, o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
          std::mt19937_64   rng(sample_seed(o.seed, k));
          std::size_t const i  = pool[draw(rng, pool.size())];
          std::size_t const j  = pool[draw(rng, pool.size())];
          std::size_t const ci = draw(rng, U[i].cores.size());
          std::size_t const cj = draw(rng, U[j].cores.size());
          a.instance();
          auto const& As = passing[i][ci];
          auto const& Bs = passing[j][cj];
          if (As.empty() || Bs.empty()) {
            a.vacuous();
            return;
          }
          SubsetMask const A = As[draw(rng, As.size())];
          SubsetMask const B = Bs[draw(rng, Bs.size())];
          a.hypothesis_hit();
          FiniteSemigroup const ST = direct_product(U[i].S, U[j].S);
          SubsetMask const      CF = U[i].cores[ci];
          SubsetMask const      CG = U[j].cores[cj];
          if (!concl(ST, cartesian(CF, CG))(cartesian(A, B))) {
            a.violation({k}, instance_detail(U[i].S, CF, A, U[j].S, CG, B));
          }
        }, acc);
      }
      return finish_report(id, o, acc, complete);
    }

    // A is F-thick in the every-member reading: every V containing the core
    // has some x in V with V * x inside A.
    bool literal_thick(FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      bool all = true;
      for_each_superset(C, [&](SubsetMask const& V) {
        if (!all) {
          return;
        }
        bool found = false;
        V.for_each([&](Element x) { found = found || S.right_translate(V, x).is_subset_of(A); });
        all = found;
      });
      return all;
    }
  }  // namespace

  SweepReport syndetic_product(SweepOptions const& o) {
    return product_theorem_sweep("syndetic-product", LargenessKind::FSyndetic, o);
  }

  SweepReport pws_product(SweepOptions const& o) {
    return product_theorem_sweep("pws-product", LargenessKind::PwsFSyndeticCovering, o);
  }

  SweepReport thick_product(SweepOptions const& o) {
    return product_theorem_sweep("thick-product", LargenessKind::FThick, o);
  }

  SweepReport quasi_central_product(SweepOptions const& o) {
    return product_theorem_sweep("quasi-central-product", LargenessKind::FQuasiCentral, o);
  }

  SweepReport central_product(SweepOptions const& o) {
    auto hyp = [](FiniteSemigroup const& S, SubsetMask const& C, SubsetMask const& A) {
      return kernel_report(S, C).minimal_idempotents.intersects(A);
    };
    return product_theorem_sweep("central-product", LargenessKind::FCentral, o, hyp);
  }

  SweepReport thick_literal_probe(SweepOptions const& o) {
    auto concl = [](FiniteSemigroup const& ST, SubsetMask const& CH) -> Conclusion {
      return [&ST, CH](SubsetMask const& D) { return literal_thick(ST, CH, D); };
    };
    return product_theorem_sweep("thick-literal-probe", LargenessKind::FThick, o, literal_thick, concl);
  }

  SweepReport kernel_product(SweepOptions const& o) {
    auto const      U = core_universe(o.order, o.monoids_only);
    PairIndex const P{U.size()};
    SweepAccumulator acc;
    bool const complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const&           S  = U[P.first(k)].S;
      auto const&           T  = U[P.second(k)].S;
      FiniteSemigroup const ST = direct_product(S, T);
      auto const&           CS = U[P.first(k)].cores;
      auto const&           CT = U[P.second(k)].cores;
      for (std::size_t ci = 0; ci < CS.size(); ++ci) {
        KernelReport const kS = kernel_report(S, CS[ci]);
        for (std::size_t cj = 0; cj < CT.size(); ++cj) {
          KernelReport const kT  = kernel_report(T, CT[cj]);
          KernelReport const kST = kernel_report(ST, cartesian(CS[ci], CT[cj]));
          a.instance();
          a.hypothesis_hit();
          bool const kernel_ok = kST.kernel == cartesian(kS.kernel, kT.kernel);
          bool const mins_ok
              = kST.minimal_idempotents == cartesian(kS.minimal_idempotents, kT.minimal_idempotents);
          if (CS[ci].is_full() && CT[cj].is_full()) {
            a.tally("whole-carrier-pairs");
          }
          if (!kernel_ok || !mins_ok) {
            a.violation({k, ci, cj},
                        describe(S) + " core " + CS[ci].to_string() + " x " + describe(T) + " core "
                            + CT[cj].to_string() + (kernel_ok ? " minimal idempotents" : " kernel")
                            + " differ: got " + kST.kernel.to_string());
          }
        }
      }
    }, acc);
    return finish_report("kernel-product", o, acc, complete);
  }

  SweepReport product_filter_idempotent(SweepOptions const& o) {
    auto const      U = core_universe(o.order, o.monoids_only);
    PairIndex const P{U.size()};
    SweepAccumulator acc;
    bool const complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const&           S  = U[P.first(k)].S;
      auto const&           T  = U[P.second(k)].S;
      FiniteSemigroup const ST = direct_product(S, T);
      auto const&           CS = U[P.first(k)].cores;
      auto const&           CT = U[P.second(k)].cores;
      for (std::size_t ci = 0; ci < CS.size(); ++ci) {
        // bases of two sets as well as one
        FilterBase const F = make_filter(S, {CS[ci], S.full()});
        if (!is_idempotent_filter(S, F)) {
          a.violation({k, ci}, "subsemigroup core " + CS[ci].to_string() + " not idempotent in "
                                   + describe(S));
          continue;
        }
        for (std::size_t cj = 0; cj < CT.size(); ++cj) {
          FilterBase const G = make_filter(T, {CT[cj], T.full()});
          a.instance();
          if (!is_idempotent_filter(T, G)) {
            continue;
          }
          a.hypothesis_hit();
          FilterBase const H = product_filter(ST, F, G);
          bool const core_ok = H.core() == cartesian(F.core(), G.core());
          bool const idem_ok = is_idempotent_filter(ST, H);
          if (!core_ok || !idem_ok) {
            a.violation({k, ci, cj}, describe(S) + " core " + CS[ci].to_string() + " x " + describe(T)
                                         + " core " + CT[cj].to_string()
                                         + (core_ok ? ": product not idempotent" : ": core mismatch"));
          }
        }
      }
    }, acc);
    return finish_report("product-filter-idempotent", o, acc, complete);
  }

  namespace {
    // Walks every (semigroup, core, subset) triple of the universe.
    template <typename Body>
    SweepReport triple_sweep(std::string const& id, SweepOptions const& o, Body&& body) {
      auto const       U = core_universe(o.order, o.monoids_only);
      SweepAccumulator acc;
      bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t e, SweepAccumulator& a) {
        auto const& S = U[e].S;
        for (std::size_t c = 0; c < U[e].cores.size(); ++c) {
          FilterBase const F = principal_filter(S, U[e].cores[c]);
          for (auto const& A : all_subsets(S.size())) {
            a.instance();
            body(S, F, A, std::vector<std::size_t>{e, c, A.bits()}, a);
          }
        }
      }, acc);
      return finish_report(id, o, acc, complete);
    }

    std::string triple_detail(FiniteSemigroup const& S, FilterBase const& F, SubsetMask const& A) {
      return describe(S) + " core " + F.core().to_string() + " A " + A.to_string();
    }
  }  // namespace

  SweepReport pws_kernel_agreement(SweepOptions const& o) {
    return triple_sweep("pws-kernel-agreement", o,
                        [](FiniteSemigroup const& S, FilterBase const& F, SubsetMask const& A,
                           std::vector<std::size_t> key, SweepAccumulator& a) {
                          bool const def = check_filter_largeness(S, F, A, LargenessKind::PwsFSyndeticCovering,
                                                                  Route::Definitional)
                                               .holds;
                          bool const ker = kernel_report(S, F.core()).kernel.intersects(A);
                          a.tally(def ? "holds" : "fails");
                          if (def) {
                            a.hypothesis_hit();
                          }
                          if (def != ker) {
                            a.violation(std::move(key), triple_detail(S, F, A) + (def ? " definitional only"
                                                                                      : " kernel only"));
                          }
                        });
  }

  SweepReport pws_definition_agreement(SweepOptions const& o) {
    return triple_sweep(
        "pws-definition-agreement", o,
        [](FiniteSemigroup const& S, FilterBase const& F, SubsetMask const& A, std::vector<std::size_t> key,
           SweepAccumulator& a) {
          bool const covering
              = check_filter_largeness(S, F, A, LargenessKind::PwsFSyndeticCovering, Route::Definitional).holds;
          bool const fip
              = check_filter_largeness(S, F, A, LargenessKind::PwsFSyndeticFip, Route::Definitional).holds;
          a.tally(covering ? "holds" : "fails");
          if (covering) {
            a.hypothesis_hit();
          }
          if (covering != fip) {
            a.violation(std::move(key),
                        triple_detail(S, F, A) + (covering ? " covering form only" : " intersection form only"));
          }
        });
  }

  SweepReport route_agreement(SweepOptions const& o) {
    static constexpr LargenessKind filter_kinds[] = {LargenessKind::FThick, LargenessKind::FSyndetic,
                                                     LargenessKind::PwsFSyndeticCovering,
                                                     LargenessKind::PwsFSyndeticFip};
    static constexpr LargenessKind plain_kinds[]
        = {LargenessKind::Thick, LargenessKind::Syndetic, LargenessKind::PiecewiseSyndetic};
    static constexpr Route routes[] = {Route::ClosedForm, Route::Definitional, Route::Kernel};

    auto const       U = core_universe(o.order, o.monoids_only);
    SweepAccumulator acc;
    bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t e, SweepAccumulator& a) {
      auto const& S       = U[e].S;
      auto const  subsets = all_subsets(S.size());
      auto fail = [&](std::vector<std::size_t> key, std::string const& what) {
        a.violation(std::move(key), describe(S) + " " + what);
      };

      // plain kinds: three routes, re-verification, monotonicity, empty set
      for (std::size_t ki = 0; ki < std::size(plain_kinds); ++ki) {
        LargenessKind const kind = plain_kinds[ki];
        std::vector<bool>   holds(subsets.size());
        for (auto const& A : subsets) {
          a.instance();
          std::array<bool, 3> r{};
          for (std::size_t ri = 0; ri < 3; ++ri) {
            Verdict const v = check_basic(S, A, kind, routes[ri]);
            r[ri]           = v.holds;
            if (!reverify(S, nullptr, A, kind, v)) {
              fail({e, 0, ki, A.bits(), ri}, std::string(kind_name(kind)) + " verdict does not re-verify on "
                                                 + A.to_string());
            }
          }
          holds[A.bits()] = r[0];
          if (r[0] != r[1] || r[0] != r[2]) {
            fail({e, 0, ki, A.bits(), 9}, std::string(kind_name(kind)) + " routes disagree on " + A.to_string());
          }
          if (r[0]) {
            a.hypothesis_hit();
            a.tally(std::string(kind_name(kind)) + " holds");
          }
        }
        if (holds[0]) {
          fail({e, 0, ki, 0, 10}, std::string(kind_name(kind)) + " holds on the empty set");
        }
        for (auto const& A : subsets) {
          for (auto const& B : subsets) {
            if (holds[A.bits()] && A.is_subset_of(B) && !holds[B.bits()]) {
              fail({e, 0, ki, A.bits(), 11}, std::string(kind_name(kind)) + " not upward closed at "
                                                 + A.to_string() + " in " + B.to_string());
            }
          }
        }
      }

      // plain central vs f-central with the full filter
      FilterBase const full = full_filter(S);
      for (auto const& A : subsets) {
        if (check_central(S, A).holds != check_central(S, A, full).holds) {
          fail({e, 0, 3, A.bits(), 12}, "central differs from f-central for the full filter on " + A.to_string());
        }
      }

      // filter kinds on every core
      for (std::size_t c = 0; c < U[e].cores.size(); ++c) {
        FilterBase const F = principal_filter(S, U[e].cores[c]);
        for (std::size_t ki = 0; ki < std::size(filter_kinds); ++ki) {
          LargenessKind const kind = filter_kinds[ki];
          std::vector<bool>   holds(subsets.size());
          for (auto const& A : subsets) {
            a.instance();
            std::array<bool, 3> r{};
            for (std::size_t ri = 0; ri < 3; ++ri) {
              Verdict const v = check_filter_largeness(S, F, A, kind, routes[ri]);
              r[ri]           = v.holds;
              if (!reverify(S, &F, A, kind, v)) {
                fail({e, c + 1, ki, A.bits(), ri}, std::string(kind_name(kind)) + " verdict does not re-verify, core "
                                                       + F.core().to_string() + " A " + A.to_string());
              }
            }
            holds[A.bits()] = r[0];
            if (r[0] != r[1] || r[0] != r[2]) {
              fail({e, c + 1, ki, A.bits(), 9}, std::string(kind_name(kind)) + " routes disagree, core "
                                                    + F.core().to_string() + " A " + A.to_string());
            }
            if (r[0] != decide(S, F.core(), A, kind)) {
              fail({e, c + 1, ki, A.bits(), 13}, std::string(kind_name(kind)) + " fast decision differs, core "
                                                     + F.core().to_string() + " A " + A.to_string());
            }
            if (r[0]) {
              a.hypothesis_hit();
              a.tally(std::string(kind_name(kind)) + " holds");
            }
            if (F.core().is_full()) {
              static constexpr LargenessKind plain_of[]
                  = {LargenessKind::Thick, LargenessKind::Syndetic, LargenessKind::PiecewiseSyndetic,
                     LargenessKind::PiecewiseSyndetic};
              if (r[0] != check_basic(S, A, plain_of[ki]).holds) {
                fail({e, c + 1, ki, A.bits(), 14}, std::string(kind_name(kind))
                                                       + " with the full filter differs from the plain notion on "
                                                       + A.to_string());
              }
            }
          }
          if (holds[0]) {
            fail({e, c + 1, ki, 0, 10}, std::string(kind_name(kind)) + " holds on the empty set");
          }
          for (auto const& A : subsets) {
            for (auto const& B : subsets) {
              if (holds[A.bits()] && A.is_subset_of(B) && !holds[B.bits()]) {
                fail({e, c + 1, ki, A.bits(), 11},
                     std::string(kind_name(kind)) + " not upward closed at " + A.to_string() + " in " + B.to_string());
              }
            }
          }
        }
      }
    }, acc);
    return finish_report("route-agreement", o, acc, complete);
  }

  SweepReport quasi_central_collapse(SweepOptions const& o) {
    return triple_sweep("quasi-central-collapse", o,
                        [](FiniteSemigroup const& S, FilterBase const& F, SubsetMask const& A,
                           std::vector<std::size_t> key, SweepAccumulator& a) {
                          Verdict const q = check_quasi_central(S, F, A);
                          Verdict const c = check_central(S, A, F);
                          if (q.holds) {
                            a.hypothesis_hit();
                          }
                          if (!reverify(S, &F, A, LargenessKind::FQuasiCentral, q)
                              || !reverify(S, &F, A, LargenessKind::FCentral, c)) {
                            a.violation(key, triple_detail(S, F, A) + " verdict does not re-verify");
                          }
                          if (q.holds != c.holds) {
                            a.violation(std::move(key), triple_detail(S, F, A)
                                                            + (q.holds ? " quasi-central only" : " central only"));
                          }
                        });
  }

  SweepReport pws_intersection_probe(SweepOptions const& o) {
    auto const       U = core_universe(o.order, o.monoids_only);
    SweepAccumulator acc;
    bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t e, SweepAccumulator& a) {
      auto const& S       = U[e].S;
      auto const  subsets = all_subsets(S.size());
      std::vector<SubsetMask> syndetic;
      std::vector<SubsetMask> thick;
      for (auto const& A : subsets) {
        if (decide(S, S.full(), A, LargenessKind::Syndetic)) {
          syndetic.push_back(A);
        }
        if (decide(S, S.full(), A, LargenessKind::Thick)) {
          thick.push_back(A);
        }
      }
      for (auto const& A : subsets) {
        a.instance();
        bool const pws      = decide(S, S.full(), A, LargenessKind::PiecewiseSyndetic);
        bool       equal    = false;
        bool       contains = false;
        for (auto const& B : syndetic) {
          for (auto const& C : thick) {
            SubsetMask const I = B & C;
            equal              = equal || I == A;
            contains           = contains || (!I.empty() && I.is_subset_of(A));
          }
        }
        if (pws) {
          a.hypothesis_hit();
        }
        a.tally(std::string(pws ? "pws" : "not-pws") + (equal ? " / equals-intersection" : " / no-equal-intersection"));
        a.tally(std::string(pws ? "pws" : "not-pws")
                + (contains ? " / contains-intersection" : " / contains-no-intersection"));
        if (pws != contains) {
          a.violation({e, A.bits()}, describe(S) + " A " + A.to_string()
                                         + (pws ? " pws without a syndetic-thick intersection inside"
                                                : " contains a syndetic-thick intersection but is not pws"));
        }
      }
    }, acc);
    return finish_report("pws-intersection-probe", o, acc, complete);
  }

}  // namespace largeness::sweeps
