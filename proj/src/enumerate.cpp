
#include "largeness/error.hpp"
#include "largeness/semigroup.hpp"

namespace largeness {

  namespace {
    constexpr int unset = -1;

    class TableSearch {
     public:
      explicit TableSearch(std::size_t n) : _n(n), _cells(n * n, unset) {}

      void run(std::function<bool(FiniteSemigroup const&)> const& visit) {
        _visit = &visit;
        _stopped = false;
        extend(0);
      }

     private:
      int at(std::size_t x, std::size_t y) const {
        return _cells[x * _n + y];
      }

      // Checks every triple whose four products are already defined.
      bool consistent() const {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            int const xy = at(x, y);
            if (xy == unset) {
              continue;
            }
            for (std::size_t z = 0; z < _n; ++z) {
              int const yz = at(y, z);
              if (yz == unset) {
                continue;
              }
              int const lhs = at(static_cast<std::size_t>(xy), z);
              int const rhs = at(x, static_cast<std::size_t>(yz));
              if (lhs != unset && rhs != unset && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void extend(std::size_t cell) {
        if (_stopped) {
          return;
        }
        if (cell == _cells.size()) {
          std::vector<std::uint8_t> flat(_cells.begin(), _cells.end());
          _stopped = (*_visit)(make_unchecked(_n, std::move(flat), {}));
          return;
        }
        for (std::size_t v = 0; v < _n && !_stopped; ++v) {
          _cells[cell] = static_cast<int>(v);
          if (consistent()) {
            extend(cell + 1);
          }
        }
        _cells[cell] = unset;
      }

      std::size_t                                              _n;
      std::vector<int>                                         _cells;
      std::function<bool(FiniteSemigroup const&)> const*     _visit   = nullptr;
      bool                                                     _stopped = false;
    };

    void check_order(std::size_t n) {
      if (n == 0 || n > max_enumeration_order) {
        throw Error(Errc::BoundExceeded,
                    "enumeration supports orders 1.." + std::to_string(max_enumeration_order)
                        + ", got " + std::to_string(n),
                    {n});
      }
    }
  }  // namespace

  void for_each_semigroup(std::size_t n, std::function<bool(FiniteSemigroup const&)> const& visit) {
    check_order(n);
    TableSearch(n).run(visit);
  }

  std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n) {
    std::vector<FiniteSemigroup> result;
    for_each_semigroup(n, [&](FiniteSemigroup const& S) {
      result.push_back(S);
      return false;
    });
    return result;
  }

}  // namespace largeness
