#pragma once

#include <string>
#include <vector>

#include "largeness/sweep.hpp"

namespace largeness::detail {

  SweepReport finish_report(std::string const&      id,
                            SweepOptions const&     o,
                            SweepAccumulator const& acc,
                            bool                    complete);

  // Flat index over ordered pairs (i, j) of a universe of size n.
  struct PairIndex {
    std::size_t n;
    std::size_t count() const noexcept {
      return n * n;
    }
    std::size_t first(std::size_t k) const noexcept {
      return k / n;
    }
    std::size_t second(std::size_t k) const noexcept {
      return k % n;
    }
  };

  std::string describe(FiniteSemigroup const& S);

}  // namespace largeness::detail
