#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "largeness/subset_mask.hpp"

namespace largeness {

  // Largest carrier any semigroup (including direct products) may have.
  inline constexpr std::size_t max_carrier = SubsetMask::max_width;

  // Largest carrier for checks that quantify over all subsets.
  inline constexpr std::size_t max_exhaustive_carrier = 10;

  // Largest order handed out by the exhaustive enumerator.
  inline constexpr std::size_t max_enumeration_order = 4;

  using Table = std::vector<std::vector<Element>>;

  // A finite semigroup on the carrier {0, ..., n - 1}, given by its Cayley
  // table. Instances are immutable and always associative.
  class FiniteSemigroup {
   public:
    std::size_t size() const noexcept {
      return _n;
    }

    Element operator()(Element x, Element y) const noexcept {
      return _table[x * _n + y];
    }

    std::string const& name() const noexcept {
      return _name;
    }

    FiniteSemigroup renamed(std::string name) const;

    Table rows() const;

    SubsetMask full() const {
      return SubsetMask::full(_n);
    }

    SubsetMask none() const {
      return SubsetMask(_n);
    }

    // {a * b : a in A, b in B}
    SubsetMask product_set(SubsetMask const& A, SubsetMask const& B) const;
    // A * x
    SubsetMask right_translate(SubsetMask const& A, Element x) const;
    // x * A
    SubsetMask left_translate(Element x, SubsetMask const& A) const;

    bool is_commutative() const;
    std::optional<Element> identity() const;
    bool                   is_idempotent(Element x) const noexcept {
      return (*this)(x, x) == x;
    }

    friend bool operator==(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return a._n == b._n && a._table == b._table;
    }

   private:
    friend FiniteSemigroup validate_table(std::size_t, Table const&, std::string);
    friend FiniteSemigroup make_unchecked(std::size_t, std::vector<std::uint8_t>, std::string);

    FiniteSemigroup(std::size_t n, std::vector<std::uint8_t> table, std::string name)
        : _n(n), _table(std::move(table)), _name(std::move(name)) {}

    std::size_t               _n;
    std::vector<std::uint8_t> _table;
    std::string               _name;
  };

  // Validates an n x n table. Throws Error(BadShape) for wrong dimensions,
  // Error(BadEntry) with {row, col} for an out-of-range entry, and
  // Error(NonAssociative) with the lexicographically first failing (x, y, z).
  FiniteSemigroup validate_table(std::size_t n, Table const& table, std::string name = {});

  // Internal constructor for tables already known to be associative.
  FiniteSemigroup make_unchecked(std::size_t n, std::vector<std::uint8_t> table, std::string name);

  // S x T with (s, t) stored at index s * |T| + t.
  FiniteSemigroup direct_product(FiniteSemigroup const& S, FiniteSemigroup const& T);

  inline Element pair_index(FiniteSemigroup const& T, Element s, Element t) noexcept {
    return s * T.size() + t;
  }

  // A x B as a subset of the product carrier |S| * |T|.
  SubsetMask cartesian(SubsetMask const& A, SubsetMask const& B);

  // First and second coordinate images of a subset of S x T.
  SubsetMask project_first(SubsetMask const& D, std::size_t s_size, std::size_t t_size);
  SubsetMask project_second(SubsetMask const& D, std::size_t s_size, std::size_t t_size);

  // {y : t * y in A}
  SubsetMask translate_preimage(FiniteSemigroup const& S, Element t, SubsetMask const& A);

  // Union of t^{-1} A over t in G.
  SubsetMask union_preimage(FiniteSemigroup const& S, SubsetMask const& G, SubsetMask const& A);

  bool is_subsemigroup(FiniteSemigroup const& S, SubsetMask const& E);

  struct KernelReport {
    SubsetMask              kernel;
    std::vector<SubsetMask> minimal_left_ideals;
    std::vector<SubsetMask> minimal_right_ideals;
    SubsetMask              idempotents;
    SubsetMask              minimal_idempotents;
  };

  KernelReport kernel_report(FiniteSemigroup const& S);

  // Kernel data of the subsemigroup E of S, expressed in S's indices.
  KernelReport kernel_report(FiniteSemigroup const& S, SubsetMask const& E);

  // Every nonempty subsemigroup, ordered by (size, bits). Requires
  // |S| <= max_exhaustive_carrier.
  std::vector<SubsetMask> subsemigroups(FiniteSemigroup const& S);

  // Every associative n x n table exactly once, in lexicographic order of the
  // row-major table. Requires n <= max_enumeration_order.
  std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n);

  // Streams the same tables as enumerate_semigroups; return true to stop.
  void for_each_semigroup(std::size_t n, std::function<bool(FiniteSemigroup const&)> const& visit);

  namespace builtin {
    FiniteSemigroup trivial();
    // x * y = min(x, y) on {0, 1}
    FiniteSemigroup min2();
    // x * y = x
    FiniteSemigroup left_zero(std::size_t n = 2);
    // x * y = y
    FiniteSemigroup right_zero(std::size_t n = 2);
    // addition mod n
    FiniteSemigroup cyclic(std::size_t n);
    // x * y = 0
    FiniteSemigroup null_semigroup(std::size_t n);

    // "TRIVIAL", "MIN2", "LZ2", "RZ2", "Zn", "NULLn"
    std::optional<FiniteSemigroup> by_name(std::string const& name);
  }  // namespace builtin

}  // namespace largeness
