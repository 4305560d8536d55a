// Counts associative n x n tables by testing every table, with no pruning.
// Writes the counts for orders 1..N as a JSON fixture.
#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

  bool associative(std::array<std::uint8_t, 16> const& t, unsigned n) {
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        unsigned const xy = t[x * n + y];
        for (unsigned z = 0; z < n; ++z) {
          if (t[xy * n + z] != t[x * n + t[y * n + z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Tables whose first row is fixed by `prefix`, every other cell free.
  std::uint64_t count_with_prefix(unsigned n, std::uint64_t prefix) {
    unsigned const                cells = n * n;
    std::array<std::uint8_t, 16> t{};
    for (unsigned c = 0; c < n; ++c) {
      t[c] = static_cast<std::uint8_t>(prefix % n);
      prefix /= n;
    }
    std::uint64_t total = 0;
    while (true) {
      total += associative(t, n) ? 1 : 0;
      unsigned c = n;
      while (c < cells && ++t[c] == n) {
        t[c++] = 0;
      }
      if (c == cells) {
        return total;
      }
    }
  }

  std::uint64_t count_tables(unsigned n, unsigned jobs) {
    std::uint64_t prefixes = 1;
    for (unsigned i = 0; i < n; ++i) {
      prefixes *= n;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::vector<std::thread>   pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t p = next++; p < prefixes; p = next++) {
          total += count_with_prefix(n, p);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    return total;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App    app{"Count associative tables by exhaustive testing"};
  unsigned    max_order = 3;
  unsigned    jobs      = std::max(1U, std::thread::hardware_concurrency());
  std::string output;
  app.add_option("--max-order", max_order, "Largest order (at most 4)")->check(CLI::Range(1, 4));
  app.add_option("--jobs,-j", jobs, "Worker threads");
  app.add_option("--output,-o", output, "Fixture path; standard output when omitted");
  CLI11_PARSE(app, argc, argv);

  nlohmann::json doc;
  doc["format"] = "largeness-lab/1";
  doc["kind"]   = "semigroup-counts";
  doc["method"] = "every n x n table tested for associativity";
  for (unsigned n = 1; n <= max_order; ++n) {
    doc["counts"][std::to_string(n)] = count_tables(n, std::max(1U, jobs));
  }
  std::string const text = doc.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(output) << text;
  }
  return 0;
}
