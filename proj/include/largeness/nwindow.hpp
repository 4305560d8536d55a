#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "largeness/verdict.hpp"

namespace largeness {

  // A finite piece of a subset of N: its members inside [1, window].
  struct WindowSet {
    std::size_t              window = 0;
    std::vector<std::size_t> members;  // strictly increasing
    std::string              label;

    bool contains(std::size_t x) const;
  };

  // Largest window any builder accepts.
  inline constexpr std::size_t max_window = std::size_t{1} << 26;

  // "evens", "paper_thick" (the blocks [2^n, 2^n + n]) and "paper_pws"
  // (their intersection). Throws Error(InvalidArgument) for an unknown name
  // or a window below 4, Error(BoundExceeded) above max_window.
  WindowSet                builtin_set(std::string_view name, std::size_t window);
  std::vector<std::string> builtin_set_names();

  // Sums of distinct generators (by position) that land in [1, window].
  WindowSet fs_set(std::vector<std::size_t> const& generators, std::size_t window);

  WindowSet intersect(WindowSet const& a, WindowSet const& b);

  struct WindowCheck {
    enum class Kind { Syndetic, Thick, PiecewiseSyndetic };

    Kind        kind = Kind::Syndetic;
    std::size_t gap  = 0;
    std::size_t run  = 0;

    static WindowCheck syndetic(std::size_t g) {
      return WindowCheck{Kind::Syndetic, g, 0};
    }
    static WindowCheck thick(std::size_t L) {
      return WindowCheck{Kind::Thick, 0, L};
    }
    static WindowCheck pws(std::size_t g, std::size_t L) {
      return WindowCheck{Kind::PiecewiseSyndetic, g, L};
    }
  };

  std::string to_string(WindowCheck const& c);

  // syndetic(g): counting from a virtual member at 0, consecutive members
  //   are at most g apart (the stretch after the last member is not
  //   judged). Witness "max-gap" {largest gap}; counterexample "gap" {a, b},
  //   the first pair too far apart.
  // thick(L): witness "run" {first, last}, the first maximal run of at least
  //   L consecutive members; counterexample "longest-run" {first, last}.
  // pws(g, L): the least window [s, s + L - 1] in which, treating s - 1 and
  //   s + L as members, consecutive members are at most g apart. Witness
  //   "window" {s, s + L - 1}.
  // Every verdict carries the caveat "window-limited". Throws
  // Error(EmptySet) for a set with no members and Error(InvalidArgument) for
  // zero parameters.
  Verdict windowed_check(WindowSet const& ws, WindowCheck const& check);

}  // namespace largeness
