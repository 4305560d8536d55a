#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "largeness/semigroup.hpp"

namespace largeness {

  struct SweepOptions {
    // Largest semigroup order in the universe; every order from 1 up to this
    // one is included.
    std::size_t order = 2;
    // When set, draw this many random instances instead of the exhaustive
    // walk (only for sweeps that support sampling).
    std::optional<std::size_t> sample;
    std::uint64_t              seed = 1;
    std::size_t                jobs = 1;
    bool                       monoids_only = false;
    // Cooperative cancellation; checked between tasks.
    std::atomic<bool> const* cancel = nullptr;
  };

  struct Counterexample {
    // Lexicographically compared; the smallest key across all workers is kept.
    std::vector<std::size_t> key;
    std::string              detail;
  };

  struct SweepReport {
    std::string                          id;
    bool                                 exploratory = false;
    std::size_t                          order       = 0;
    std::optional<std::size_t>           sample;
    std::uint64_t                        seed = 0;
    std::size_t                          instances       = 0;
    std::size_t                          hypothesis_hits = 0;
    std::size_t                          violations      = 0;
    std::size_t                          vacuous         = 0;
    std::optional<Counterexample>        first_counterexample;
    std::map<std::string, std::size_t>   tallies;
    bool                                 partial = false;

    bool passed() const noexcept {
      return exploratory || violations == 0;
    }
  };

  // Per-worker accumulator. Merging is associative and commutative.
  class SweepAccumulator {
   public:
    void instance(std::size_t count = 1) {
      _instances += count;
    }
    void hypothesis_hit(std::size_t count = 1) {
      _hits += count;
    }
    void vacuous(std::size_t count = 1) {
      _vacuous += count;
    }
    void tally(std::string const& key, std::size_t count = 1) {
      _tallies[key] += count;
    }
    void violation(std::vector<std::size_t> key, std::string detail);

    void merge(SweepAccumulator const& other);
    void write_to(SweepReport& report) const;

   private:
    std::size_t                        _instances  = 0;
    std::size_t                        _hits       = 0;
    std::size_t                        _violations = 0;
    std::size_t                        _vacuous    = 0;
    std::optional<Counterexample>      _first;
    std::map<std::string, std::size_t> _tallies;
  };

  // Runs task(i, acc) for i in [0, task_count) on `jobs` worker threads.
  // Returns true when every task ran (false if cancelled part-way).
  bool run_tasks(std::size_t                                              task_count,
                 std::size_t                                              jobs,
                 std::atomic<bool> const*                                 cancel,
                 std::function<void(std::size_t, SweepAccumulator&)> const& task,
                 SweepAccumulator&                                        total);

  // Deterministic per-index generator state: the same (seed, index) always
  // yields the same stream.
  std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) noexcept;

  // Draw in [0, n) by plain modulo.
  inline std::size_t draw(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  }

  // Every semigroup of order 1..max_order in enumeration order, optionally
  // restricted to monoids.
  std::vector<FiniteSemigroup> semigroup_universe(std::size_t max_order, bool monoids_only = false);

  // The subsemigroup cores of each semigroup, cached alongside it.
  struct UniverseEntry {
    FiniteSemigroup         S;
    std::vector<SubsetMask> cores;
  };
  std::vector<UniverseEntry> core_universe(std::size_t max_order, bool monoids_only = false);

  struct SweepInfo {
    std::string id;
    std::string summary;
    bool        exploratory   = false;
    std::size_t max_order     = 3;
    bool        supports_sample = false;
  };

  std::vector<SweepInfo> const& sweep_catalog();
  std::optional<SweepInfo>      find_sweep(std::string const& id);

  // Throws Error(InvalidArgument) for an unknown id and Error(BoundExceeded)
  // when options.order exceeds the sweep's bound.
  SweepReport run_sweep(std::string const& id, SweepOptions const& options);

  // Individual sweeps, also reachable through run_sweep.
  namespace sweeps {
    SweepReport syndetic_product(SweepOptions const& o);
    SweepReport pws_product(SweepOptions const& o);
    SweepReport thick_product(SweepOptions const& o);
    SweepReport quasi_central_product(SweepOptions const& o);
    SweepReport central_product(SweepOptions const& o);
    SweepReport kernel_product(SweepOptions const& o);
    SweepReport product_filter_idempotent(SweepOptions const& o);
    SweepReport pws_kernel_agreement(SweepOptions const& o);
    SweepReport pws_definition_agreement(SweepOptions const& o);
    SweepReport route_agreement(SweepOptions const& o);
    SweepReport quasi_central_collapse(SweepOptions const& o);
    SweepReport pws_intersection_probe(SweepOptions const& o);
    SweepReport thick_literal_probe(SweepOptions const& o);

    SweepReport j_product(SweepOptions const& o);
    SweepReport zfp_fixpoint(SweepOptions const& o);
    SweepReport zfp_min_index_probe(SweepOptions const& o);
    SweepReport commutative_j_agreement(SweepOptions const& o);

    SweepReport directed_witness_product(SweepOptions const& o);
    SweepReport cpws_product_maps(SweepOptions const& o);
    SweepReport cpws_equivalence(SweepOptions const& o);
    SweepReport delta_plain_probe(SweepOptions const& o);
    SweepReport cpws_filter_equivalence_probe(SweepOptions const& o);
  }  // namespace sweeps

}  // namespace largeness
