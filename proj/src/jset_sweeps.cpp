#include <cstdint>

#include "largeness/jset.hpp"
#include "largeness/sweep.hpp"
#include "sweep_support.hpp"

namespace largeness::sweeps {

  namespace {
    using detail::describe;
    using detail::finish_report;
    using detail::PairIndex;

    FamilyClass const theorem_class{2, 1, 2};

    // Bit D of the result is set when the subset with bits D admits a witness.
    std::uint64_t hit_mask(FiniteSemigroup const& S, SequenceFamily const& family, bool interleaved = true) {
      JReachability const reach(S, family, interleaved);
      std::uint64_t       out = 0;
      for (std::uint64_t D = 0; D < (std::uint64_t{1} << S.size()); ++D) {
        if (reach.hits(SubsetMask(S.size(), D))) {
          out |= std::uint64_t{1} << D;
        }
      }
      return out;
    }

    SequenceFamily project(SequenceFamily const& family, std::size_t right_size, bool first) {
      auto coord = [&](Element x) { return first ? x / right_size : x % right_size; };
      SequenceFamily out;
      for (auto const& f : family) {
        EventuallyPeriodicSeq g;
        for (Element x : f.preperiod) {
          g.preperiod.push_back(coord(x));
        }
        for (Element x : f.period) {
          g.period.push_back(coord(x));
        }
        out.push_back(std::move(g));
      }
      return out;
    }

    std::vector<SubsetMask> all_subsets(std::size_t n) {
      std::vector<SubsetMask> out;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        out.emplace_back(n, bits);
      }
      return out;
    }
  }  // namespace

  SweepReport j_product(SweepOptions const& o) {
    auto const      U = core_universe(o.order, o.monoids_only);
    PairIndex const P{U.size()};

    SweepAccumulator acc;
    bool const complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const&           S  = U[P.first(k)];
      auto const&           T  = U[P.second(k)];
      FiniteSemigroup const ST = direct_product(S.S, T.S);
      auto const            families = family_class(ST.size(), theorem_class);

      struct Row {
        SubsetMask    zfp;
        std::uint64_t hits;
        std::uint64_t hits_left;
        std::uint64_t hits_right;
      };
      std::vector<Row> rows;
      rows.reserve(families.size());
      for (auto const& fam : families) {
        rows.push_back(Row{zfp(ST, fam), hit_mask(ST, fam), hit_mask(S.S, project(fam, T.S.size(), true)),
                           hit_mask(T.S, project(fam, T.S.size(), false))});
      }

      for (std::size_t ci = 0; ci < S.cores.size(); ++ci) {
        for (std::size_t cj = 0; cj < T.cores.size(); ++cj) {
          SubsetMask const H = cartesian(S.cores[ci], T.cores[cj]);
          std::uint64_t    all = ~std::uint64_t{0};
          std::uint64_t    left = ~std::uint64_t{0};
          std::uint64_t    right = ~std::uint64_t{0};
          std::size_t      good = 0;
          for (auto const& r : rows) {
            if (r.zfp.is_subset_of(H)) {
              ++good;
              all &= r.hits;
              left &= r.hits_left;
              right &= r.hits_right;
            }
          }
          a.instance((std::size_t{1} << S.S.size()) * (std::size_t{1} << T.S.size()));
          if (good == 0) {
            a.vacuous();
            continue;
          }
          a.tally("good-families", good);
          a.tally((all >> ST.full().bits()) & 1 ? "full-sets-pass" : "full-sets-fail");
          for (std::uint64_t A = 0; A < (std::uint64_t{1} << S.S.size()); ++A) {
            if (!((left >> A) & 1)) {
              continue;
            }
            for (std::uint64_t B = 0; B < (std::uint64_t{1} << T.S.size()); ++B) {
              if (!((right >> B) & 1)) {
                continue;
              }
              a.hypothesis_hit();
              SubsetMask const D = cartesian(SubsetMask(S.S.size(), A), SubsetMask(T.S.size(), B));
              if ((all >> D.bits()) & 1) {
                continue;
              }
              std::string missed;
              for (std::size_t f = 0; f < rows.size(); ++f) {
                if (rows[f].zfp.is_subset_of(H) && !((rows[f].hits >> D.bits()) & 1)) {
                  missed = to_string(families[f]);
                  break;
                }
              }
              a.violation({k, ci, cj, A, B},
                          describe(S.S) + " core " + S.cores[ci].to_string() + " A "
                              + SubsetMask(S.S.size(), A).to_string() + " x " + describe(T.S) + " core "
                              + T.cores[cj].to_string() + " B " + SubsetMask(T.S.size(), B).to_string()
                              + " misses family " + missed);
            }
          }
        }
      }
    }, acc);
    return finish_report("j-product", o, acc, complete);
  }

  SweepReport zfp_fixpoint(SweepOptions const& o) {
    auto const U = semigroup_universe(o.order, o.monoids_only);

    SweepAccumulator acc;
    bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const& S = U[k];
      // order 4 carriers use purely periodic sequences
      FamilyClass const c{2, S.size() >= 4 ? std::size_t{0} : std::size_t{1}, 2};
      auto const        families = family_class(S.size(), c);
      for (std::size_t f = 0; f < families.size(); ++f) {
        auto const& fam   = families[f];
        auto const  trace = zfp_traced(S, fam, 1);
        auto const  naive = zfp_enumerate(S, fam, 1, trace.horizon + family_period(fam));
        a.instance();
        a.tally("horizon<=" + std::to_string(trace.horizon <= 4 ? 4 : trace.horizon <= 8 ? 8 : 16));
        if (trace.result != naive) {
          a.violation({k, f}, describe(S) + " family " + to_string(fam) + " fixpoint "
                                  + trace.result.to_string() + " enumeration " + naive.to_string());
        }
      }
    }, acc);
    return finish_report("zfp-fixpoint", o, acc, complete);
  }

  SweepReport zfp_min_index_probe(SweepOptions const& o) {
    auto const      U = core_universe(o.order, o.monoids_only);
    PairIndex const P{U.size()};

    SweepAccumulator acc;
    bool const complete = run_tasks(P.count(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const&           S        = U[P.first(k)];
      auto const&           T        = U[P.second(k)];
      FiniteSemigroup const ST       = direct_product(S.S, T.S);
      auto const            families = family_class(ST.size(), theorem_class);
      for (std::size_t f = 0; f < families.size(); ++f) {
        auto const& fam   = families[f];
        auto const  left  = project(fam, T.S.size(), true);
        auto const  right = project(fam, T.S.size(), false);
        for (std::size_t ci = 0; ci < S.cores.size(); ++ci) {
          auto const k1 = good_from(S.S, S.cores[ci], left);
          if (!k1) {
            continue;
          }
          for (std::size_t cj = 0; cj < T.cores.size(); ++cj) {
            auto const k2 = good_from(T.S, T.cores[cj], right);
            if (!k2) {
              continue;
            }
            a.instance();
            SubsetMask const H = cartesian(S.cores[ci], T.cores[cj]);
            if (!zfp(ST, fam, std::max(*k1, *k2)).is_subset_of(H)) {
              a.violation({k, f, ci, cj}, describe(ST) + " family " + to_string(fam) + " fails from max index");
            }
            if (*k1 == *k2) {
              a.tally("equal-indices");
            } else if (zfp(ST, fam, std::min(*k1, *k2)).is_subset_of(H)) {
              a.tally("min-index-holds");
            } else {
              a.tally("min-index-fails");
            }
          }
        }
      }
    }, acc);
    return finish_report("zfp-min-index-probe", o, acc, complete);
  }

  SweepReport commutative_j_agreement(SweepOptions const& o) {
    auto const U = semigroup_universe(o.order, o.monoids_only);

    SweepAccumulator acc;
    bool const complete = run_tasks(U.size(), o.jobs, o.cancel, [&](std::size_t k, SweepAccumulator& a) {
      auto const& S = U[k];
      if (!S.is_commutative()) {
        return;
      }
      bool const monoid   = S.identity().has_value();
      auto const families = family_class(S.size(), theorem_class);
      auto const subsets  = all_subsets(S.size());
      for (std::size_t f = 0; f < families.size(); ++f) {
        auto const&         fam = families[f];
        JReachability const general(S, fam, true);
        JReachability const additive(S, fam, false);
        for (auto const& A : subsets) {
          a.instance();
          auto const gm = general.min_steps(A);
          bool const am = additive.hits(A);
          std::string const where = describe(S) + " family " + to_string(fam) + " A " + A.to_string();
          if (gm && !am) {
            a.violation({k, f, A.bits(), 0}, where + ": interleaved witness without additive one");
          }
          if (!gm && am) {
            if (monoid) {
              a.violation({k, f, A.bits(), 1}, where + ": additive witness without interleaved one on a monoid");
            } else {
              a.tally("additive-only-without-identity");
            }
          }
          if (gm) {
            a.hypothesis_hit();
            // closure mode returns a verifying witness of the least length,
            // and a bounded search finds one whenever it fits the bounds
            auto const closure = j_witness(S, A, fam);
            if (!closure.witness || !verify_j_witness(S, A, fam, *closure.witness)
                || closure.witness->m != *gm) {
              a.violation({k, f, A.bits(), 2}, where + ": closure witness disagrees with reachability");
            }
            auto const bounded = j_witness(S, A, fam, JBounds{4, 4});
            if (bounded.status == SearchStatus::Found) {
              if (!verify_j_witness(S, A, fam, *bounded.witness) || bounded.witness->m != closure.witness->m) {
                a.violation({k, f, A.bits(), 3}, where + ": bounded witness disagrees with closure mode");
              }
            } else {
              a.tally("bounded-exhausted");
            }
          }
          if (am) {
            auto const w = j_witness_commutative(S, A, fam);
            if (!w || !verify_j_witness(S, A, fam, *w)) {
              a.violation({k, f, A.bits(), 4}, where + ": additive witness fails to verify");
            }
          }
        }
      }
    }, acc);
    return finish_report("commutative-j-agreement", o, acc, complete);
  }

}  // namespace largeness::sweeps
