#include <cstdint>

#include "largeness/cpws.hpp"
#include "largeness/error.hpp"
#include "largeness/largeness.hpp"
#include "largeness/sweep.hpp"
#include "sweep_support.hpp"

namespace largeness::sweeps {

  namespace {
    using detail::describe;
    using detail::finish_report;
    using detail::PairIndex;

    struct FamilyMaps {
      std::vector<SubsetMask> family;
      CpwsMaps                maps;
    };

    std::string family_string(std::vector<SubsetMask> const& family) {
      std::string out = "[";
      for (std::size_t i = 0; i < family.size(); ++i) {
        out += (i ? " " : "") + family[i].to_string();
      }
      return out + "]";
    }

    // Families of one set with every admissible table, and families of two
    // distinct sets with the canonical table, that verify on (S, core).
    std::vector<FamilyMaps> verified_factor_maps(FiniteSemigroup const& S, SubsetMask const& core) {
      FilterBase const        F = principal_filter(S, core);
      std::size_t const       n = S.size();
      std::vector<FamilyMaps> out;
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        std::vector<SubsetMask> family{SubsetMask(n, a)};
        for_each_subset(core, [&](SubsetMask const& G) {
          if (G.empty()) {
            return;
          }
          for_each_superset(core, [&](SubsetMask const& delta) {
            CpwsMaps maps{{SubsetMask(n), G}, {SubsetMask(n), delta}};
            if (verify_cpws(S, F, family, maps).holds) {
              out.push_back(FamilyMaps{family, std::move(maps)});
            }
          });
        });
      }
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        for (std::uint64_t b = a + 1; b < (std::uint64_t{1} << n); ++b) {
          std::vector<SubsetMask> family{SubsetMask(n, a), SubsetMask(n, b)};
          if (auto maps = search_cpws_maps(S, F, family)) {
            out.push_back(FamilyMaps{family, std::move(*maps)});
          }
        }
      }
      return out;
    }

    struct Factor {
      std::vector<std::vector<FamilyMaps>> per_core;
    };

    std::vector<Factor> factor_table(std::vector<UniverseEntry> const& U) {
      std::vector<Factor> out(U.size());
      for (std::size_t e = 0; e < U.size(); ++e) {
        for (auto const& C : U[e].cores) {
          out[e].per_core.push_back(verified_factor_maps(U[e].S, C));
        }
      }
      return out;
    }

    SweepReport product_maps_sweep(std::string const& id, SweepOptions const& o, bool probe) {
      auto const          U = core_universe(o.order, o.monoids_only);
      auto const          factors = factor_table(U);
      PairIndex const     P{U.size()};
      SweepAccumulator    acc;
      bool const complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
        std::size_t const     i  = P.first(k);
        std::size_t const     j  = P.second(k);
        auto const&           S  = U[i].S;
        auto const&           T  = U[j].S;
        FiniteSemigroup const ST = direct_product(S, T);
        for (std::size_t ci = 0; ci < U[i].cores.size(); ++ci) {
          for (std::size_t cj = 0; cj < U[j].cores.size(); ++cj) {
            SubsetMask const CF = U[i].cores[ci];
            SubsetMask const CG = U[j].cores[cj];
            FilterBase const H  = principal_filter(ST, cartesian(CF, CG));
            auto const&      As = factors[i].per_core[ci];
            auto const&      Bs = factors[j].per_core[cj];
            for (std::size_t x = 0; x < As.size(); ++x) {
              for (std::size_t y = 0; y < Bs.size(); ++y) {
                auto const& fa     = As[x];
                auto const& fb     = Bs[y];
                auto const  family = product_family(fa.family, fb.family);
                a.instance();
                a.hypothesis_hit();
                std::string const where = describe(S) + " core " + CF.to_string() + " family "
                                          + family_string(fa.family) + " x " + describe(T) + " core "
                                          + CG.to_string() + " family " + family_string(fb.family);
                if (!probe) {
                  auto const maps = product_cpws_maps(fa.maps, fa.family.size(), fb.maps, fb.family.size(), CF, CG);
                  if (!verify_cpws(ST, H, family, maps).holds) {
                    a.violation({k, ci, cj, x, y}, where);
                  }
                  continue;
                }
                for_each_superset(CF, [&](SubsetMask const& V) {
                  for_each_superset(CG, [&](SubsetMask const& W) {
                    for (bool plain : {false, true}) {
                      auto const maps =
                          product_cpws_maps(fa.maps, fa.family.size(), fb.maps, fb.family.size(), V, W, plain);
                      bool const ok = verify_cpws(ST, H, family, maps).holds;
                      a.tally(std::string(plain ? "plain" : "union") + (ok ? "-holds" : "-fails"));
                    }
                  });
                });
              }
            }
          }
        }
      }, acc);
      return finish_report(id, o, acc, complete);
    }

    std::vector<std::vector<SubsetMask>> small_families(std::size_t n) {
      std::vector<std::vector<SubsetMask>> out;
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        out.push_back({SubsetMask(n, a)});
      }
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        for (std::uint64_t b = a + 1; b < (std::uint64_t{1} << n); ++b) {
          out.push_back({SubsetMask(n, a), SubsetMask(n, b)});
        }
      }
      return out;
    }
  }  // namespace

  SweepReport directed_witness_product(SweepOptions const& o) {
    auto const U = core_universe(o.order, o.monoids_only);

    // verified[e][c] = per-member witnesses on (U[e].S, core c)
    std::vector<std::vector<std::vector<DirectedFamilyWitness>>> verified(U.size());
    SweepAccumulator                                             acc;
    for (std::size_t e = 0; e < U.size(); ++e) {
      auto const&       S = U[e].S;
      std::size_t const n = S.size();
      for (std::size_t c = 0; c < U[e].cores.size(); ++c) {
        FilterBase const                   F = principal_filter(S, U[e].cores[c]);
        std::vector<DirectedFamilyWitness> ws;
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
          SubsetMask const E = SubsetMask(n, bits);
          auto             w = DirectedFamilyWitness::constant(E);
          if (!verify_directed_family(S, E, w, F, CpwsMode::PerMember).holds) {
            continue;
          }
          // a verified constant witness certifies F-centrality
          if (!decide(S, F.core(), E, LargenessKind::FCentral)) {
            acc.violation({e, c, bits, 0}, describe(S) + " core " + F.core().to_string() + " constant witness "
                                               + E.to_string() + " is not F-central");
          }
          ws.push_back(std::move(w));
        }
        if (n <= 2) {
          for (std::uint64_t top = 1; top < (std::uint64_t{1} << n); ++top) {
            for (std::uint64_t sub = (top - 1) & top; sub != 0; sub = (sub - 1) & top) {
              auto w = DirectedFamilyWitness::chain({SubsetMask(n, top), SubsetMask(n, sub)});
              if (verify_directed_family(S, SubsetMask(n, top), w, F, CpwsMode::PerMember).holds) {
                ws.push_back(std::move(w));
              }
            }
          }
        }
        verified[e].push_back(std::move(ws));
      }
    }

    PairIndex const P{U.size()};
    bool const complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      std::size_t const     i  = P.first(k);
      std::size_t const     j  = P.second(k);
      auto const&           S  = U[i].S;
      auto const&           T  = U[j].S;
      FiniteSemigroup const ST = direct_product(S, T);
      for (std::size_t ci = 0; ci < U[i].cores.size(); ++ci) {
        for (std::size_t cj = 0; cj < U[j].cores.size(); ++cj) {
          FilterBase const H = principal_filter(ST, cartesian(U[i].cores[ci], U[j].cores[cj]));
          auto const&      As = verified[i][ci];
          auto const&      Bs = verified[j][cj];
          a.instance();
          if (As.empty() || Bs.empty()) {
            a.vacuous();
            continue;
          }
          for (std::size_t x = 0; x < As.size(); ++x) {
            for (std::size_t y = 0; y < Bs.size(); ++y) {
              a.hypothesis_hit();
              auto const w = product_directed_witness(As[x], Bs[y], T.size());
              SubsetMask const target = cartesian(As[x].sets.front(), Bs[y].sets.front());
              a.tally(w.sets.size() == 1 ? "constant-pairs" : "chain-pairs");
              auto const v = verify_directed_family(ST, target, w, H, CpwsMode::PerMember);
              if (!v.holds) {
                a.violation({k, ci, cj, x, y},
                            describe(S) + " core " + U[i].cores[ci].to_string() + " witness "
                                + family_string(As[x].sets) + " x " + describe(T) + " core "
                                + U[j].cores[cj].to_string() + " witness " + family_string(Bs[y].sets) + ": "
                                + to_string(*v.counterexample));
              }
            }
          }
        }
      }
    }, acc);
    return finish_report("directed-witness-product", o, acc, complete);
  }

  SweepReport cpws_product_maps(SweepOptions const& o) {
    return product_maps_sweep("cpws-product-maps", o, false);
  }

  SweepReport delta_plain_probe(SweepOptions const& o) {
    return product_maps_sweep("delta-plain-probe", o, true);
  }

  SweepReport cpws_equivalence(SweepOptions const& o) {
    // the round trip is stated for monoids
    auto const U = semigroup_universe(o.order, true);

    SweepAccumulator acc;
    bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const&       S        = U[k];
      std::size_t const n        = S.size();
      auto const        families = small_families(n);
      for (std::size_t f = 0; f < families.size(); ++f) {
        auto const&       family = families[f];
        std::size_t const count  = subfamily_count(family.size());
        std::size_t const nonempty = (std::size_t{1} << n) - 1;
        // every G table: entry m is a nonempty subset of S
        std::vector<std::uint64_t> digits(count, 1);
        while (true) {
          std::vector<SubsetMask> G(count, SubsetMask(n));
          for (std::size_t m = 1; m < count; ++m) {
            G[m] = SubsetMask(n, digits[m]);
          }
          std::uint64_t code = 0;
          for (std::size_t m = count; m-- > 1;) {
            code = code * (nonempty + 1) + digits[m];
          }
          std::string const where = describe(S) + " family " + family_string(family) + " G#" + std::to_string(code);
          a.instance();
          bool const fip = has_fip(S, family, G);
          try {
            auto const back = cpws_equiv_backward(S, family, G);
            if (!fip) {
              a.violation({k, f, code, 0}, where + ": translator maps built without the intersection property");
            } else {
              a.hypothesis_hit();
              if (!back.verdict.holds) {
                a.violation({k, f, code, 1}, where + ": built translator maps fail to verify");
              } else if (!cpws_equiv_forward(S, family, back.maps).verdict.holds) {
                a.violation({k, f, code, 2}, where + ": forward construction fails on verified maps");
              }
            }
          } catch (Error const& e) {
            if (e.code() != Errc::FipViolated || fip) {
              a.violation({k, f, code, 3}, where + ": " + e.what());
            }
            a.tally("fip-violated");
          }

          // all translator tables when they are few
          std::size_t const cells = (count - 1) * nonempty;
          std::size_t       tables = 1;
          for (std::size_t c = 0; c < cells && tables <= 4096; ++c) {
            tables *= n;
          }
          if (tables <= 4096) {
            std::vector<Element> xs(cells, 0);
            while (true) {
              HindmanCpwsMaps maps{G, std::vector<Element>(count << n, 0)};
              std::size_t     c = 0;
              for (std::size_t H = 1; H < count; ++H) {
                for (std::size_t Fb = 1; Fb <= nonempty; ++Fb) {
                  maps.x[(H << n) + Fb] = xs[c++];
                }
              }
              if (verify_hindman_cpws(S, family, maps).holds) {
                a.tally("translator-tables-verified");
                if (!fip || !cpws_equiv_forward(S, family, maps).verdict.holds) {
                  a.violation({k, f, code, 4}, where + ": verified translator table without the intersection property");
                }
              }
              std::size_t d = 0;
              while (d < cells && ++xs[d] == n) {
                xs[d++] = 0;
              }
              if (d == cells) {
                break;
              }
            }
          }

          std::size_t m = 1;
          while (m < count && ++digits[m] > nonempty) {
            digits[m++] = 1;
          }
          if (m == count) {
            break;
          }
        }
      }
    }, acc);
    return finish_report("cpws-equivalence", o, acc, complete);
  }

  SweepReport cpws_filter_equivalence_probe(SweepOptions const& o) {
    auto const U = core_universe(o.order, o.monoids_only);

    SweepAccumulator acc;
    bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const&       S        = U[k].S;
      std::size_t const n        = S.size();
      auto const        families = small_families(n);
      for (auto const& C : U[k].cores) {
        FilterBase const F = principal_filter(S, C);
        for (auto const& family : families) {
          std::size_t const count = subfamily_count(family.size());
          a.instance();
          bool const intersection_style = search_cpws_maps(S, F, family).has_value();
          // translator style relative to the core: G(Fh) = core, x(Hh, F)
          // searched for finite F inside the core
          std::vector<SubsetMask> targets(count, SubsetMask(n));
          for (std::uint64_t m = 1; m < count; ++m) {
            targets[m] = union_preimage(S, C, subfamily_intersection(family, m));
          }
          auto translator = [&](SubsetMask const& domain) {
            bool ok = true;
            for (std::uint64_t H = 1; H < count && ok; ++H) {
              for_each_subset(C, [&](SubsetMask const& Fs) {
                if (!ok || Fs.empty()) {
                  return;
                }
                bool found = false;
                domain.for_each([&](Element x) {
                  if (found) {
                    return;
                  }
                  bool good = true;
                  for (std::uint64_t Fh = H; Fh != 0 && good; Fh = (Fh - 1) & H) {
                    Fs.for_each([&](Element y) { good = good && targets[Fh].contains(S(y, x)); });
                  }
                  found = good;
                });
                ok = found;
              });
            }
            return ok;
          };
          bool const core_points = translator(C);
          bool const any_points  = translator(S.full());
          a.tally(std::string("intersection-") + (intersection_style ? "holds" : "fails") + "/translator-core-"
                  + (core_points ? "holds" : "fails"));
          if (core_points != any_points) {
            a.tally("translator-point-domain-matters");
          }
          if (intersection_style != core_points) {
            a.tally("disagreements");
          }
        }
      }
    }, acc);
    return finish_report("cpws-filter-equivalence-probe", o, acc, complete);
  }

}  // namespace largeness::sweeps
