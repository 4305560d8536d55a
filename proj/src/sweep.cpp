#include "largeness/sweep.hpp"

#include <algorithm>
#include <thread>

#include "largeness/error.hpp"
#include "sweep_support.hpp"

namespace largeness {

  void SweepAccumulator::violation(std::vector<std::size_t> key, std::string detail) {
    ++_violations;
    if (!_first || key < _first->key) {
      _first = Counterexample{std::move(key), std::move(detail)};
    }
  }

  void SweepAccumulator::merge(SweepAccumulator const& other) {
    _instances += other._instances;
    _hits += other._hits;
    _violations += other._violations;
    _vacuous += other._vacuous;
    if (other._first && (!_first || other._first->key < _first->key)) {
      _first = other._first;
    }
    for (auto const& [k, v] : other._tallies) {
      _tallies[k] += v;
    }
  }

  void SweepAccumulator::write_to(SweepReport& report) const {
    report.instances            = _instances;
    report.hypothesis_hits      = _hits;
    report.violations           = _violations;
    report.vacuous              = _vacuous;
    report.first_counterexample = _first;
    report.tallies              = _tallies;
  }

  bool run_tasks(std::size_t                                                task_count,
                 std::size_t                                                jobs,
                 std::atomic<bool> const*                                   cancel,
                 std::function<void(std::size_t, SweepAccumulator&)> const& task,
                 SweepAccumulator&                                          total) {
    jobs = std::max<std::size_t>(1, std::min(jobs, std::max<std::size_t>(task_count, 1)));
    std::atomic<std::size_t>      next{0};
    std::atomic<bool>             stopped{false};
    std::vector<SweepAccumulator> locals(jobs);

    auto worker = [&](std::size_t w) {
      while (true) {
        if (cancel != nullptr && cancel->load(std::memory_order_relaxed)) {
          stopped = true;
          return;
        }
        std::size_t const i = next.fetch_add(1);
        if (i >= task_count) {
          return;
        }
        task(i, locals[w]);
      }
    };

    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (std::size_t w = 0; w < jobs; ++w) {
        pool.emplace_back(worker, w);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& acc : locals) {
      total.merge(acc);
    }
    return !stopped;
  }

  std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) noexcept {
    // splitmix64 finalizer over the combined word
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::vector<FiniteSemigroup> semigroup_universe(std::size_t max_order, bool monoids_only) {
    if (max_order > max_enumeration_order) {
      throw Error(Errc::BoundExceeded,
                  "universe order " + std::to_string(max_order) + " exceeds "
                      + std::to_string(max_enumeration_order),
                  {max_order});
    }
    std::vector<FiniteSemigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for_each_semigroup(n, [&](FiniteSemigroup const& S) {
        if (!monoids_only || S.identity()) {
          out.push_back(S);
        }
        return false;
      });
    }
    return out;
  }

  std::vector<UniverseEntry> core_universe(std::size_t max_order, bool monoids_only) {
    std::vector<UniverseEntry> out;
    for (auto& S : semigroup_universe(max_order, monoids_only)) {
      auto cores = subsemigroups(S);
      out.push_back(UniverseEntry{std::move(S), std::move(cores)});
    }
    return out;
  }

  namespace {
    using SweepFn = SweepReport (*)(SweepOptions const&);

    struct CatalogRow {
      SweepInfo info;
      SweepFn   fn;
    };

    std::vector<CatalogRow> const& catalog_rows() {
      static std::vector<CatalogRow> const rows = {
          {{"syndetic-product", "F-syndetic x G-syndetic is H-syndetic", false, 3, true},
           &sweeps::syndetic_product},
          {{"pws-product", "piecewise F- x G-syndetic is piecewise H-syndetic", false, 3, true},
           &sweeps::pws_product},
          {{"thick-product", "F-thick x G-thick is H-thick", false, 3, true}, &sweeps::thick_product},
          {{"quasi-central-product", "F- x G-quasi-central is H-quasi-central", false, 3, true},
           &sweeps::quasi_central_product},
          {{"central-product", "F-central x G-central is H-central", false, 3, true},
           &sweeps::central_product},
          {{"kernel-product", "K(S x T) = K(S) x K(T), also for minimal idempotents", false, 3, false},
           &sweeps::kernel_product},
          {{"product-filter-idempotent",
            "product of idempotent filters is idempotent with core core(F) x core(G)", false, 3, false},
           &sweeps::product_filter_idempotent},
          {{"pws-kernel-agreement", "piecewise F-syndetic iff A meets K(core)", false, 4, false},
           &sweeps::pws_kernel_agreement},
          {{"pws-definition-agreement",
            "covering and finite-intersection forms of piecewise F-syndetic agree", false, 4, false},
           &sweeps::pws_definition_agreement},
          {{"route-agreement",
            "definitional, closed-form and kernel routes agree; witnesses re-verify", false, 3, false},
           &sweeps::route_agreement},
          {{"quasi-central-collapse", "F-quasi-central iff F-central on finite semigroups", false, 3,
            false},
           &sweeps::quasi_central_collapse},
          {{"pws-intersection-probe",
            "piecewise syndetic vs intersection of a syndetic and a thick set", true, 3, false},
           &sweeps::pws_intersection_probe},
          {{"thick-literal-probe",
            "product rule for the every-member reading of F-thick", true, 3, true},
           &sweeps::thick_literal_probe},
          {{"j-product", "A and B hit every projected good family => A x B hits every good family",
            false, 2, false},
           &sweeps::j_product},
          {{"zfp-fixpoint", "zigzag fixpoint equals naive enumeration", false, 4, false},
           &sweeps::zfp_fixpoint},
          {{"zfp-min-index-probe", "tail index min{k1,k2} vs max{k1,k2} for eventually good families",
            true, 2, false},
           &sweeps::zfp_min_index_probe},
          {{"commutative-j-agreement",
            "interleaved witnesses imply additive witnesses; equivalent on monoids", false, 3, false},
           &sweeps::commutative_j_agreement},
          {{"directed-witness-product", "verified directed families multiply to verified families",
            false, 3, false},
           &sweeps::directed_witness_product},
          {{"cpws-product-maps", "product witness maps verify for verifying factor maps", false, 2,
            false},
           &sweeps::cpws_product_maps},
          {{"cpws-equivalence", "translator maps and finite-intersection maps round trip on monoids",
            false, 3, false},
           &sweeps::cpws_equivalence},
          {{"delta-plain-probe", "product maps over larger members, with and without the union term",
            true, 2, false},
           &sweeps::delta_plain_probe},
          {{"cpws-filter-equivalence-probe",
            "translator-style vs intersection-style collectionwise F-syndeticity", true, 3, false},
           &sweeps::cpws_filter_equivalence_probe},
      };
      return rows;
    }
  }  // namespace

  std::vector<SweepInfo> const& sweep_catalog() {
    static std::vector<SweepInfo> const infos = [] {
      std::vector<SweepInfo> out;
      for (auto const& row : catalog_rows()) {
        out.push_back(row.info);
      }
      return out;
    }();
    return infos;
  }

  std::optional<SweepInfo> find_sweep(std::string const& id) {
    for (auto const& row : catalog_rows()) {
      if (row.info.id == id) {
        return row.info;
      }
    }
    return std::nullopt;
  }

  SweepReport run_sweep(std::string const& id, SweepOptions const& options) {
    for (auto const& row : catalog_rows()) {
      if (row.info.id != id) {
        continue;
      }
      if (options.order < 1 || options.order > row.info.max_order) {
        throw Error(Errc::BoundExceeded,
                    "sweep " + id + " supports orders 1.." + std::to_string(row.info.max_order),
                    {options.order});
      }
      if (options.sample && !row.info.supports_sample) {
        throw Error(Errc::InvalidArgument, "sweep " + id + " does not support sampling");
      }
      return row.fn(options);
    }
    throw Error(Errc::InvalidArgument, "unknown sweep id: " + id);
  }

  namespace detail {
    SweepReport finish_report(std::string const&      id,
                              SweepOptions const&     o,
                              SweepAccumulator const& acc,
                              bool                    complete) {
      SweepReport report;
      report.id          = id;
      auto info          = find_sweep(id);
      report.exploratory = info && info->exploratory;
      report.order       = o.order;
      report.sample      = o.sample;
      report.seed        = o.seed;
      acc.write_to(report);
      report.partial = !complete;
      return report;
    }

    std::string describe(FiniteSemigroup const& S) {
      std::string out = S.name().empty() ? "S" : S.name();
      out += "[";
      auto rows = S.rows();
      for (std::size_t x = 0; x < rows.size(); ++x) {
        if (x != 0) {
          out += ';';
        }
        for (std::size_t y = 0; y < rows[x].size(); ++y) {
          if (y != 0) {
            out += ',';
          }
          out += std::to_string(rows[x][y]);
        }
      }
      out += "]";
      return out;
    }
  }  // namespace detail

}  // namespace largeness
