#pragma once

#include <functional>

#include "doctest.h"
#include "largeness/error.hpp"
#include "oracles.hpp"

namespace testing {

  inline largeness::SubsetMask mask(std::size_t n, oracle::Bits bits) {
    return largeness::SubsetMask(n, bits);
  }

  // Runs f and returns the library error code it threw.
  inline std::optional<largeness::Errc> error_code(std::function<void()> const& f) {
    try {
      f();
    } catch (largeness::Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

}  // namespace testing
