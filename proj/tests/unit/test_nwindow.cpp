#include "helpers.hpp"
#include "largeness/nwindow.hpp"

using namespace largeness;

namespace {

  std::vector<std::size_t> evidence(Verdict const& v) {
    return v.holds ? v.witness->elements : v.counterexample->elements;
  }

}  // namespace

TEST_CASE("builtin sets") {
  CHECK(builtin_set("paper_thick", 16).members == std::vector<std::size_t>{2, 3, 4, 5, 6, 8, 9, 10, 11, 16});
  CHECK(builtin_set("evens", 10).members == std::vector<std::size_t>{2, 4, 6, 8, 10});
  CHECK(builtin_set("paper_pws", 16).members == std::vector<std::size_t>{2, 4, 6, 8, 10, 16});
  CHECK(builtin_set_names().size() == 3);
  CHECK(testing::error_code([] { builtin_set("odds", 10); }) == Errc::InvalidArgument);
  CHECK(testing::error_code([] { builtin_set("evens", 3); }) == Errc::InvalidArgument);
  CHECK(testing::error_code([] { builtin_set("evens", max_window + 1); }) == Errc::BoundExceeded);
}

TEST_CASE("the piecewise syndetic example is the intersection on every window") {
  for (std::size_t W = 4; W <= 300; ++W) {
    auto const inter = intersect(builtin_set("evens", W), builtin_set("paper_thick", W));
    CHECK(inter.members == builtin_set("paper_pws", W).members);
    for (std::size_t x = 1; x <= W; ++x) {
      CHECK(inter.contains(x) == (x % 2 == 0 && builtin_set("paper_thick", W).contains(x)));
    }
  }
}

TEST_CASE("finite sums") {
  CHECK(fs_set({1, 2, 4}, 10).members == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(fs_set({5}, 10).members == std::vector<std::size_t>{5});
  CHECK(fs_set({2, 4}, 3).members == std::vector<std::size_t>{2});
  CHECK(fs_set({3, 3}, 10).members == std::vector<std::size_t>{3, 6});
  for (std::size_t x = 1; x <= 40; ++x) {
    CHECK(fs_set({x}, 40).members == std::vector<std::size_t>{x});
  }
  CHECK(testing::error_code([] { fs_set({}, 10); }) == Errc::InvalidArgument);
  CHECK(testing::error_code([] { fs_set({0, 1}, 10); }) == Errc::InvalidArgument);
}

TEST_CASE("windowed checks on the three named sets") {
  auto const ev = windowed_check(builtin_set("evens", 100), WindowCheck::syndetic(2));
  CHECK(ev.holds);
  CHECK(evidence(ev) == std::vector<std::size_t>{2});

  auto const th = windowed_check(builtin_set("paper_thick", 2100), WindowCheck::thick(10));
  CHECK(th.holds);
  REQUIRE(th.witness);
  CHECK(th.witness->kind == "run");
  auto const run = evidence(th);
  CHECK(run == std::vector<std::size_t>{512, 521});
  for (std::size_t x = run[0]; x <= run[1]; ++x) {
    CHECK(builtin_set("paper_thick", 2100).contains(x));
  }
  auto const th11 = windowed_check(builtin_set("paper_thick", 2100), WindowCheck::thick(11));
  CHECK(evidence(th11) == std::vector<std::size_t>{1024, 1034});

  auto const ps = builtin_set("paper_pws", 2100);
  auto const syn = windowed_check(ps, WindowCheck::syndetic(2));
  CHECK_FALSE(syn.holds);
  REQUIRE(syn.counterexample);
  CHECK(syn.counterexample->kind == "gap");
  CHECK(evidence(syn) == std::vector<std::size_t>{10, 16});
  CHECK(ps.contains(10));
  CHECK(ps.contains(16));
  for (std::size_t x = 11; x < 16; ++x) {
    CHECK_FALSE(ps.contains(x));
  }

  auto const pw = windowed_check(ps, WindowCheck::pws(2, 10));
  CHECK(pw.holds);
  REQUIRE(pw.witness);
  CHECK(pw.witness->kind == "window");
  auto const win = evidence(pw);
  REQUIRE(win.size() == 2);
  CHECK(win[1] - win[0] + 1 == 10);
  std::size_t last = win[0] - 1;
  for (std::size_t x = win[0]; x <= win[1] + 1; ++x) {
    if (x == win[1] + 1 || ps.contains(x)) {
      CHECK(x - last <= 2);
      last = x;
    }
  }

  for (auto const& v : {ev, th, syn, pw}) {
    CHECK(v.caveats == std::vector<std::string>{"window-limited"});
  }
}

TEST_CASE("negative thick verdicts and parameter errors") {
  auto const v = windowed_check(builtin_set("evens", 50), WindowCheck::thick(2));
  CHECK_FALSE(v.holds);
  CHECK(v.counterexample->kind == "longest-run");
  CHECK(windowed_check(builtin_set("evens", 50), WindowCheck::syndetic(1)).counterexample->elements
        == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(windowed_check(builtin_set("evens", 50), WindowCheck::pws(1, 3)).holds);
  WindowSet const none{10, {}, "empty"};
  CHECK(testing::error_code([&] { windowed_check(none, WindowCheck::syndetic(2)); }) == Errc::EmptySet);
  CHECK(testing::error_code([] { windowed_check(builtin_set("evens", 10), WindowCheck::thick(0)); })
        == Errc::InvalidArgument);
  CHECK(to_string(WindowCheck::pws(2, 10)) == "pws(2,10)");
}
