#include "largeness/cpws.hpp"

#include <algorithm>

#include "largeness/error.hpp"
#include "largeness/largeness.hpp"

namespace largeness {

  namespace {
    constexpr std::size_t max_family = 16;

    void check_family(std::vector<SubsetMask> const& family, std::size_t width) {
      if (family.empty()) {
        throw Error(Errc::InvalidArgument, "the family needs at least one member");
      }
      if (family.size() > max_family) {
        throw Error(Errc::BoundExceeded, "families are limited to 16 members", {family.size()});
      }
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].width() != width) {
          throw Error(Errc::WidthMismatch, "family member " + std::to_string(i) + " has the wrong width",
                      {i, family[i].width(), width});
        }
      }
    }

    void check_table_size(std::size_t got, std::size_t want, char const* name) {
      if (got != want) {
        throw Error(Errc::TableIncomplete,
                    std::string(name) + " table has " + std::to_string(got) + " entries, expected "
                        + std::to_string(want),
                    {got, want});
      }
    }

    // y^{-1} G^{-1}(B) = {z : t y z in B for some t in G}
    SubsetMask shifted_target(FiniteSemigroup const& S, Element y, SubsetMask const& G, SubsetMask const& B) {
      return translate_preimage(S, y, union_preimage(S, G, B));
    }

    // Common part over y in delta(Fh) and every subfamily Fh, before
    // intersecting with a filter member.
    SubsetMask cpws_common(FiniteSemigroup const&         S,
                           std::vector<SubsetMask> const& family,
                           CpwsMaps const&                maps) {
      SubsetMask common = S.full();
      for (std::uint64_t m = 1; m < subfamily_count(family.size()); ++m) {
        SubsetMask const target = union_preimage(S, maps.G[m], subfamily_intersection(family, m));
        maps.delta[m].for_each([&](Element y) { common &= translate_preimage(S, y, target); });
      }
      return common;
    }
  }  // namespace

  SubsetMask subfamily_intersection(std::vector<SubsetMask> const& family, std::uint64_t mask) {
    SubsetMask out = SubsetMask::full(family.front().width());
    for (std::size_t i = 0; i < family.size(); ++i) {
      if ((mask >> i) & 1) {
        out &= family[i];
      }
    }
    return out;
  }

  DirectedFamilyWitness DirectedFamilyWitness::constant(SubsetMask const& E) {
    return DirectedFamilyWitness{{E}, {1}};
  }

  DirectedFamilyWitness DirectedFamilyWitness::chain(std::vector<SubsetMask> sets) {
    DirectedFamilyWitness w;
    std::size_t const     k = sets.size();
    w.sets                  = std::move(sets);
    for (std::size_t i = 0; i < k; ++i) {
      // i and every later index
      w.below.push_back(SubsetMask::width_mask(k) & ~SubsetMask::width_mask(i));
    }
    return w;
  }

  Verdict verify_cpws(FiniteSemigroup const&         S,
                      FilterBase const&              F,
                      std::vector<SubsetMask> const& family,
                      CpwsMaps const&                maps) {
    require_subsemigroup_core(F);
    check_family(family, S.size());
    std::size_t const count = subfamily_count(family.size());
    check_table_size(maps.G.size(), count, "G");
    check_table_size(maps.delta.size(), count, "delta");
    SubsetMask const& core = F.core();
    for (std::size_t m = 1; m < count; ++m) {
      if (maps.G[m].empty() || !maps.G[m].is_subset_of(core)) {
        throw Error(Errc::InvalidArgument,
                    "G entry " + std::to_string(m) + " must be a nonempty subset of the core", {m});
      }
      if (!core.is_subset_of(maps.delta[m])) {
        throw Error(Errc::InvalidArgument, "delta entry " + std::to_string(m) + " must contain the core", {m});
      }
    }
    SubsetMask const common = cpws_common(S, family, maps);
    std::optional<SubsetMask> failing;
    for_each_subset_canonical(core.complement(), [&](SubsetMask const& extra) {
      SubsetMask const V = core | extra;
      if (!common.intersects(V)) {
        failing = V;
        return true;
      }
      return false;
    });
    if (failing) {
      return Verdict::fail(Evidence{"empty-intersection", {*failing}, {}});
    }
    return Verdict::pass(Evidence{"fip-point", {common & core}, {(common & core).min()}});
  }

  std::optional<CpwsMaps> search_cpws_maps(FiniteSemigroup const&         S,
                                           FilterBase const&              F,
                                           std::vector<SubsetMask> const& family) {
    require_subsemigroup_core(F);
    check_family(family, S.size());
    std::size_t const count = subfamily_count(family.size());
    CpwsMaps          maps{std::vector<SubsetMask>(count, F.core()), std::vector<SubsetMask>(count, F.core())};
    maps.G[0]     = SubsetMask(S.size());
    maps.delta[0] = SubsetMask(S.size());
    if (verify_cpws(S, F, family, maps).holds) {
      return maps;
    }
    return std::nullopt;
  }

  Verdict verify_directed_family(FiniteSemigroup const&       S,
                                 SubsetMask const&            A,
                                 DirectedFamilyWitness const& w,
                                 FilterBase const&            F,
                                 CpwsMode                     mode,
                                 CpwsMaps const*              maps) {
    require_subsemigroup_core(F);
    std::size_t const k = w.sets.size();
    if (k == 0 || w.below.size() != k) {
      throw Error(Errc::TableIncomplete, "directed family needs one order row per set", {k, w.below.size()});
    }
    if (k > 64) {
      throw Error(Errc::BoundExceeded, "directed families are limited to 64 indices", {k});
    }
    auto le = [&](std::size_t j, std::size_t i) { return ((w.below[i] >> j) & 1) != 0; };

    for (std::size_t i = 0; i < k; ++i) {
      if (!le(i, i)) {
        return Verdict::fail(Evidence{"not-a-partial-order", {}, {i, i}});
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && le(i, j) && le(j, i)) {
          return Verdict::fail(Evidence{"not-a-partial-order", {}, {i, j}});
        }
        for (std::size_t l = 0; l < k; ++l) {
          if (le(l, j) && le(j, i) && !le(l, i)) {
            return Verdict::fail(Evidence{"not-a-partial-order", {}, {l, i}});
          }
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!w.sets[i].is_subset_of(A)) {
        return Verdict::fail(Evidence{"outside-target", {w.sets[i]}, {i}});
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        bool bounded = false;
        for (std::size_t l = 0; l < k && !bounded; ++l) {
          bounded = le(l, i) && le(l, j) && w.sets[l].is_subset_of(w.sets[i] & w.sets[j]);
        }
        if (!bounded) {
          return Verdict::fail(Evidence{"not-directed", {w.sets[i], w.sets[j]}, {i, j}});
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::optional<Element> bad;
      w.sets[i].for_each([&](Element x) {
        if (bad) {
          return;
        }
        SubsetMask const target = translate_preimage(S, x, w.sets[i]);
        bool const       found  = std::any_of(w.sets.begin(), w.sets.end(),
                                              [&](SubsetMask const& C) { return C.is_subset_of(target); });
        if (!found) {
          bad = x;
        }
      });
      if (bad) {
        return Verdict::fail(Evidence{"condition-i-fails", {w.sets[i]}, {i, *bad}});
      }
    }

    if (mode == CpwsMode::PerMember) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!decide(S, F.core(), w.sets[i], LargenessKind::PwsFSyndeticCovering)) {
          return Verdict::fail(Evidence{"member-not-pws", {w.sets[i]}, {i}});
        }
      }
      return Verdict::pass(Evidence{"directed-family", w.sets, {}});
    }

    std::optional<CpwsMaps> found;
    if (maps != nullptr) {
      if (verify_cpws(S, F, w.sets, *maps).holds) {
        found = *maps;
      }
    } else {
      found = search_cpws_maps(S, F, w.sets);
    }
    if (!found) {
      return Verdict::fail(Evidence{"not-collectionwise", w.sets, {}});
    }
    return Verdict::pass(Evidence{"directed-family", w.sets, {}});
  }

  DirectedFamilyWitness product_directed_witness(DirectedFamilyWitness const& wA,
                                                 DirectedFamilyWitness const& wB,
                                                 std::size_t                  t_size) {
    std::size_t const I = wA.sets.size();
    std::size_t const J = wB.sets.size();
    if (I * J > 64) {
      throw Error(Errc::BoundExceeded, "product index set exceeds 64", {I * J});
    }
    if (!wB.sets.empty() && wB.sets.front().width() != t_size) {
      throw Error(Errc::WidthMismatch, "second witness does not live on T", {wB.sets.front().width(), t_size});
    }
    DirectedFamilyWitness out;
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t j = 0; j < J; ++j) {
        out.sets.push_back(cartesian(wA.sets[i], wB.sets[j]));
        std::uint64_t below = 0;
        for (std::size_t i2 = 0; i2 < I; ++i2) {
          for (std::size_t j2 = 0; j2 < J; ++j2) {
            if (((wA.below[i] >> i2) & 1) && ((wB.below[j] >> j2) & 1)) {
              below |= std::uint64_t{1} << (i2 * J + j2);
            }
          }
        }
        out.below.push_back(below);
      }
    }
    return out;
  }

  std::vector<SubsetMask> product_family(std::vector<SubsetMask> const& A, std::vector<SubsetMask> const& B) {
    std::vector<SubsetMask> out;
    for (auto const& a : A) {
      for (auto const& b : B) {
        out.push_back(cartesian(a, b));
      }
    }
    return out;
  }

  CpwsMaps product_cpws_maps(CpwsMaps const&   mapsA,
                             std::size_t       rA,
                             CpwsMaps const&   mapsB,
                             std::size_t       rB,
                             SubsetMask const& V,
                             SubsetMask const& W,
                             bool              plain_delta) {
    std::size_t const r = rA * rB;
    if (r > max_family) {
      throw Error(Errc::BoundExceeded, "product family exceeds 16 members", {r});
    }
    check_table_size(mapsA.G.size(), subfamily_count(rA), "G");
    check_table_size(mapsA.delta.size(), subfamily_count(rA), "delta");
    check_table_size(mapsB.G.size(), subfamily_count(rB), "G");
    check_table_size(mapsB.delta.size(), subfamily_count(rB), "delta");
    std::size_t const count = subfamily_count(r);
    std::size_t const width = V.width() * W.width();
    CpwsMaps          out{std::vector<SubsetMask>(count, SubsetMask(width)),
                 std::vector<SubsetMask>(count, SubsetMask(width))};
    for (std::uint64_t phi = 1; phi < count; ++phi) {
      std::uint64_t fa = 0;
      std::uint64_t fb = 0;
      for (std::size_t i = 0; i < rA; ++i) {
        for (std::size_t j = 0; j < rB; ++j) {
          if ((phi >> (i * rB + j)) & 1) {
            fa |= std::uint64_t{1} << i;
            fb |= std::uint64_t{1} << j;
          }
        }
      }
      out.G[phi] = cartesian(mapsA.G[fa], mapsB.G[fb]);
      out.delta[phi] = plain_delta ? cartesian(mapsA.delta[fa], mapsB.delta[fb])
                                   : cartesian(mapsA.delta[fa] | V, mapsB.delta[fb] | W);
    }
    return out;
  }

  namespace {
    void check_hindman_tables(FiniteSemigroup const&         S,
                              std::vector<SubsetMask> const& family,
                              HindmanCpwsMaps const&         maps) {
      check_family(family, S.size());
      if (S.size() > 12) {
        throw Error(Errc::BoundExceeded, "translator tables are limited to carriers of 12 elements", {S.size()});
      }
      std::size_t const count = subfamily_count(family.size());
      check_table_size(maps.G.size(), count, "G");
      check_table_size(maps.x.size(), count << S.size(), "x");
      for (std::size_t m = 1; m < count; ++m) {
        if (maps.G[m].empty()) {
          throw Error(Errc::InvalidArgument, "G entry " + std::to_string(m) + " is empty", {m});
        }
      }
    }
  }  // namespace

  Verdict verify_hindman_cpws(FiniteSemigroup const&         S,
                              std::vector<SubsetMask> const& family,
                              HindmanCpwsMaps const&         maps) {
    check_hindman_tables(S, family, maps);
    std::size_t const n     = S.size();
    std::size_t const count = subfamily_count(family.size());
    std::vector<SubsetMask> targets(count, SubsetMask(n));
    for (std::uint64_t m = 1; m < count; ++m) {
      targets[m] = union_preimage(S, maps.G[m], subfamily_intersection(family, m));
    }
    for (std::uint64_t H = 1; H < count; ++H) {
      for (std::uint64_t Fb = 1; Fb < (std::uint64_t{1} << n); ++Fb) {
        Element const x = maps.x[(H << n) + Fb];
        if (x >= n) {
          throw Error(Errc::BadEntry, "x entry outside the carrier", {H, Fb});
        }
        for (std::uint64_t Fh = H; Fh != 0; Fh = (Fh - 1) & H) {
          for (Element y = 0; y < n; ++y) {
            if (((Fb >> y) & 1) && !targets[Fh].contains(S(y, x))) {
              return Verdict::fail(Evidence{"inclusion-fails", {SubsetMask(n, Fb)}, {H, Fb, Fh, y}});
            }
          }
        }
      }
    }
    return Verdict::pass(Evidence{"translator-maps", maps.G, maps.x});
  }

  bool has_fip(FiniteSemigroup const& S, std::vector<SubsetMask> const& family, std::vector<SubsetMask> const& G) {
    check_family(family, S.size());
    check_table_size(G.size(), subfamily_count(family.size()), "G");
    SubsetMask common = S.full();
    for (std::uint64_t m = 1; m < G.size(); ++m) {
      SubsetMask const target = union_preimage(S, G[m], subfamily_intersection(family, m));
      for (Element y = 0; y < S.size(); ++y) {
        common &= translate_preimage(S, y, target);
      }
    }
    return !common.empty();
  }

  FipFamily cpws_equiv_forward(FiniteSemigroup const&         S,
                               std::vector<SubsetMask> const& family,
                               HindmanCpwsMaps const&         maps) {
    if (!S.identity()) {
      throw Error(Errc::NoIdentity, "the forward construction multiplies by an identity element");
    }
    check_hindman_tables(S, family, maps);
    std::size_t const n     = S.size();
    std::size_t const count = subfamily_count(family.size());
    FipFamily         out;
    for (std::uint64_t m = 1; m < count; ++m) {
      for (Element y = 0; y < n; ++y) {
        out.sets.push_back(shifted_target(S, y, maps.G[m], subfamily_intersection(family, m)));
      }
    }
    // x(all members, S) serves every finite subfamily at once
    Element const p   = maps.x[((count - 1) << n) + SubsetMask::width_mask(n)];
    auto const    bad = std::find_if(out.sets.begin(), out.sets.end(),
                                     [&](SubsetMask const& X) { return !X.contains(p); });
    if (bad == out.sets.end()) {
      out.verdict = Verdict::pass(Evidence{"fip-point", {}, {p}});
    } else {
      std::size_t const at = static_cast<std::size_t>(bad - out.sets.begin());
      out.verdict = Verdict::fail(Evidence{"point-missing", {*bad}, {p, at / n + 1, at % n}});
    }
    return out;
  }

  BackwardResult cpws_equiv_backward(FiniteSemigroup const&         S,
                                     std::vector<SubsetMask> const& family,
                                     std::vector<SubsetMask> const& G) {
    check_family(family, S.size());
    std::size_t const n     = S.size();
    std::size_t const count = subfamily_count(family.size());
    check_table_size(G.size(), count, "G");
    if (n > 12) {
      throw Error(Errc::BoundExceeded, "translator tables are limited to carriers of 12 elements", {n});
    }
    // targets[m][y] = y^{-1} G(m)^{-1}(n m)
    std::vector<std::vector<SubsetMask>> targets(count);
    for (std::uint64_t m = 1; m < count; ++m) {
      if (G[m].empty()) {
        throw Error(Errc::InvalidArgument, "G entry " + std::to_string(m) + " is empty", {m});
      }
      for (Element y = 0; y < n; ++y) {
        targets[m].push_back(shifted_target(S, y, G[m], subfamily_intersection(family, m)));
      }
    }
    HindmanCpwsMaps maps{G, std::vector<Element>(count << n, 0)};
    for (std::uint64_t H = 1; H < count; ++H) {
      for (std::uint64_t Fb = 1; Fb < (std::uint64_t{1} << n); ++Fb) {
        SubsetMask common = S.full();
        for (std::uint64_t Fh = 1; Fh <= H; ++Fh) {
          if ((Fh & H) != Fh) {
            continue;
          }
          for (Element y = 0; y < n; ++y) {
            if ((Fb >> y) & 1) {
              common &= targets[Fh][y];
            }
          }
          if (common.empty()) {
            throw Error(Errc::FipViolated,
                        "no point serves F = " + SubsetMask(n, Fb).to_string() + " and subfamily "
                            + std::to_string(Fh),
                        {Fb, Fh});
          }
        }
        maps.x[(H << n) + Fb] = common.min();
      }
    }
    Verdict verdict = verify_hindman_cpws(S, family, maps);
    return BackwardResult{std::move(maps), std::move(verdict)};
  }

}  // namespace largeness
