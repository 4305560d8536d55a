#pragma once

#include <optional>
#include <string>
#include <vector>

#include "largeness/subset_mask.hpp"

namespace largeness {

  // Structured payload attached to a verdict. `kind` names what the payload
  // is ("translator", "covering-set", "uncovered-element", ...); the sets and
  // elements are read according to that kind.
  struct Evidence {
    std::string             kind;
    std::vector<SubsetMask> sets;
    std::vector<Element>    elements;

    friend bool operator==(Evidence const&, Evidence const&) = default;
  };

  // Uniform checker result. A verdict that holds carries a witness; one that
  // fails carries a counterexample.
  struct Verdict {
    bool                    holds = false;
    std::optional<Evidence> witness;
    std::optional<Evidence> counterexample;

    // Flags such as "window-limited" for approximate checks.
    std::vector<std::string> caveats;

    static Verdict pass(Evidence witness) {
      return Verdict{true, std::move(witness), std::nullopt, {}};
    }
    static Verdict fail(Evidence counterexample) {
      return Verdict{false, std::nullopt, std::move(counterexample), {}};
    }

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  std::string to_string(Evidence const& e);

}  // namespace largeness
