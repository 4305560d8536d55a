#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace largeness {

  using Element = std::size_t;

  // A subset of a carrier {0, ..., width - 1}, stored as a 64-bit word.
  class SubsetMask {
   public:
    static constexpr std::size_t max_width = 64;

    SubsetMask() = default;
    explicit SubsetMask(std::size_t width, std::uint64_t bits = 0);

    static SubsetMask full(std::size_t width);
    static SubsetMask single(std::size_t width, Element x);
    static SubsetMask of(std::size_t width, std::initializer_list<Element> xs);
    static SubsetMask from_elements(std::size_t width, std::span<Element const> xs);

    std::size_t width() const noexcept {
      return _width;
    }

    std::uint64_t bits() const noexcept {
      return _bits;
    }

    bool contains(Element x) const noexcept {
      return x < _width && ((_bits >> x) & 1U) != 0;
    }

    std::size_t count() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    bool empty() const noexcept {
      return _bits == 0;
    }

    bool is_full() const noexcept {
      return _bits == width_mask(_width);
    }

    void insert(Element x);
    void erase(Element x);

    bool is_subset_of(SubsetMask const& other) const;
    bool intersects(SubsetMask const& other) const;

    // Smallest element; undefined on the empty set.
    Element min() const noexcept {
      return static_cast<Element>(std::countr_zero(_bits));
    }

    Element max() const noexcept {
      return static_cast<Element>(63 - std::countl_zero(_bits));
    }

    SubsetMask complement() const;

    SubsetMask& operator|=(SubsetMask const& other);
    SubsetMask& operator&=(SubsetMask const& other);
    SubsetMask& operator-=(SubsetMask const& other);

    friend SubsetMask operator|(SubsetMask a, SubsetMask const& b) {
      return a |= b;
    }
    friend SubsetMask operator&(SubsetMask a, SubsetMask const& b) {
      return a &= b;
    }
    friend SubsetMask operator-(SubsetMask a, SubsetMask const& b) {
      return a -= b;
    }

    friend bool operator==(SubsetMask const&, SubsetMask const&) = default;

    std::vector<Element> elements() const;

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
        f(static_cast<Element>(std::countr_zero(b)));
      }
    }

    // "{0,2,3}"
    std::string to_string() const;

    static std::uint64_t width_mask(std::size_t width) noexcept {
      return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    }

   private:
    std::uint64_t _bits  = 0;
    std::size_t   _width = 0;
  };

  // Orders by cardinality, then by the ascending element list
  // lexicographically. This is the tie-break order for every witness.
  bool canonical_less(SubsetMask const& a, SubsetMask const& b);

  // Orders by cardinality, then by the raw bit pattern.
  bool size_bits_less(SubsetMask const& a, SubsetMask const& b);

  // Visits every subset of `universe` (empty set included) in canonical
  // order. The visitor returns true to stop; the return value reports
  // whether the walk was stopped.
  template <typename Func>
  bool for_each_subset_canonical(SubsetMask const& universe, Func&& visit) {
    std::vector<Element> const elems = universe.elements();
    std::size_t const          m     = elems.size();
    std::vector<std::size_t>   idx;
    for (std::size_t k = 0; k <= m; ++k) {
      idx.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
      }
      while (true) {
        SubsetMask sub(universe.width());
        for (std::size_t i : idx) {
          sub.insert(elems[i]);
        }
        if (visit(sub)) {
          return true;
        }
        // next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
    }
    return false;
  }

  // Visits every subset of `universe` in unspecified order.
  template <typename Func>
  void for_each_subset(SubsetMask const& universe, Func&& visit) {
    std::uint64_t const u   = universe.bits();
    std::uint64_t       sub = u;
    while (true) {
      visit(SubsetMask(universe.width(), sub));
      if (sub == 0) {
        break;
      }
      sub = (sub - 1) & u;
    }
  }

  // Visits every superset of `core` inside its carrier, in unspecified order.
  template <typename Func>
  void for_each_superset(SubsetMask const& core, Func&& visit) {
    SubsetMask const rest = core.complement();
    for_each_subset(rest, [&](SubsetMask const& extra) { visit(core | extra); });
  }

}  // namespace largeness
