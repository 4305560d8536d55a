#include "largeness/nwindow.hpp"

#include <algorithm>

#include "largeness/error.hpp"

namespace largeness {

  namespace {
    void check_window(std::size_t window, std::size_t least) {
      if (window < least) {
        throw Error(Errc::InvalidArgument, "window must be at least " + std::to_string(least), {window});
      }
      if (window > max_window) {
        throw Error(Errc::BoundExceeded, "window exceeds " + std::to_string(max_window), {window});
      }
    }

    WindowSet from_flags(std::vector<char> const& in, std::size_t window, std::string label) {
      WindowSet out{window, {}, std::move(label)};
      for (std::size_t x = 1; x <= window; ++x) {
        if (in[x]) {
          out.members.push_back(x);
        }
      }
      return out;
    }

    std::vector<char> flags(WindowSet const& ws) {
      std::vector<char> in(ws.window + 2, 0);
      for (std::size_t x : ws.members) {
        in[x] = 1;
      }
      return in;
    }

    Verdict limited(Verdict v) {
      v.caveats.push_back("window-limited");
      return v;
    }
  }  // namespace

  bool WindowSet::contains(std::size_t x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  std::vector<std::string> builtin_set_names() {
    return {"evens", "paper_thick", "paper_pws"};
  }

  WindowSet builtin_set(std::string_view name, std::size_t window) {
    check_window(window, 4);
    std::vector<char> evens(window + 1, 0);
    std::vector<char> blocks(window + 1, 0);
    for (std::size_t x = 2; x <= window; x += 2) {
      evens[x] = 1;
    }
    for (std::size_t n = 1; n < 64 && (std::size_t{1} << n) <= window; ++n) {
      std::size_t const start = std::size_t{1} << n;
      for (std::size_t x = start; x <= std::min(window, start + n); ++x) {
        blocks[x] = 1;
      }
    }
    if (name == "evens") {
      return from_flags(evens, window, "evens");
    }
    if (name == "paper_thick") {
      return from_flags(blocks, window, "paper_thick");
    }
    if (name == "paper_pws") {
      for (std::size_t x = 0; x <= window; ++x) {
        blocks[x] = static_cast<char>(blocks[x] && evens[x]);
      }
      return from_flags(blocks, window, "paper_pws");
    }
    throw Error(Errc::InvalidArgument, "unknown set name: " + std::string(name));
  }

  WindowSet fs_set(std::vector<std::size_t> const& generators, std::size_t window) {
    check_window(window, 1);
    if (generators.empty()) {
      throw Error(Errc::InvalidArgument, "at least one generator is needed");
    }
    std::vector<char> reach(window + 1, 0);
    reach[0] = 1;
    std::string label = "fs(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      std::size_t const g = generators[i];
      if (g == 0) {
        throw Error(Errc::InvalidArgument, "generators must be positive", {i});
      }
      label += (i ? "," : "") + std::to_string(g);
      for (std::size_t s = window; s >= g && s > 0; --s) {
        reach[s] = static_cast<char>(reach[s] || reach[s - g]);
      }
    }
    return from_flags(reach, window, label + ")");
  }

  WindowSet intersect(WindowSet const& a, WindowSet const& b) {
    WindowSet out{std::min(a.window, b.window), {}, a.label + "&" + b.label};
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(out.members));
    return out;
  }

  std::string to_string(WindowCheck const& c) {
    switch (c.kind) {
      case WindowCheck::Kind::Syndetic:
        return "syndetic(" + std::to_string(c.gap) + ")";
      case WindowCheck::Kind::Thick:
        return "thick(" + std::to_string(c.run) + ")";
      case WindowCheck::Kind::PiecewiseSyndetic:
        return "pws(" + std::to_string(c.gap) + "," + std::to_string(c.run) + ")";
    }
    return {};
  }

  Verdict windowed_check(WindowSet const& ws, WindowCheck const& check) {
    if (ws.members.empty()) {
      throw Error(Errc::EmptySet, "the set " + ws.label + " has no members in the window");
    }
    bool const needs_gap = check.kind != WindowCheck::Kind::Thick;
    bool const needs_run = check.kind != WindowCheck::Kind::Syndetic;
    if ((needs_gap && check.gap == 0) || (needs_run && check.run == 0)) {
      throw Error(Errc::InvalidArgument, "check parameters must be positive");
    }

    if (check.kind == WindowCheck::Kind::Syndetic) {
      std::size_t prev    = 0;
      std::size_t largest = 0;
      for (std::size_t x : ws.members) {
        if (x - prev > check.gap) {
          return limited(Verdict::fail(Evidence{"gap", {}, {prev, x}}));
        }
        largest = std::max(largest, x - prev);
        prev    = x;
      }
      return limited(Verdict::pass(Evidence{"max-gap", {}, {largest}}));
    }

    if (check.kind == WindowCheck::Kind::Thick) {
      std::size_t best_first = 0;
      std::size_t best_len   = 0;
      for (std::size_t i = 0; i < ws.members.size();) {
        std::size_t j = i;
        while (j + 1 < ws.members.size() && ws.members[j + 1] == ws.members[j] + 1) {
          ++j;
        }
        std::size_t const len = j - i + 1;
        if (len >= check.run) {
          return limited(Verdict::pass(Evidence{"run", {}, {ws.members[i], ws.members[j]}}));
        }
        if (len > best_len) {
          best_len   = len;
          best_first = ws.members[i];
        }
        i = j + 1;
      }
      return limited(Verdict::fail(Evidence{"longest-run", {}, {best_first, best_first + best_len - 1}}));
    }

    // bad[x] = 1 when x starts g consecutive non-members; a window [s, e]
    // qualifies when no such stretch fits inside it
    std::size_t const L = check.run;
    std::size_t const g = check.gap;
    std::size_t const W = ws.window;
    if (L <= W) {
      auto const               in = flags(ws);
      std::vector<std::size_t> gap_prefix(W + 2, 0);
      std::size_t              streak = 0;
      // gap_prefix[e] counts positions x <= e that end a stretch of g non-members
      for (std::size_t x = 1; x <= W; ++x) {
        streak        = in[x] ? 0 : streak + 1;
        gap_prefix[x] = gap_prefix[x - 1] + (streak >= g ? 1 : 0);
      }
      for (std::size_t s = 1; s + L - 1 <= W; ++s) {
        std::size_t const e = s + L - 1;
        // stretches ending in [s + g - 1, e] lie entirely inside [s, e]
        std::size_t const from = s + g - 1;
        std::size_t const bad  = from > e ? 0 : gap_prefix[e] - gap_prefix[from - 1];
        if (bad == 0) {
          return limited(Verdict::pass(Evidence{"window", {}, {s, e}}));
        }
      }
    }
    return limited(Verdict::fail(Evidence{"no-window", {}, {g, L}}));
  }

}  // namespace largeness
