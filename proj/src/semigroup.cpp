#include "largeness/semigroup.hpp"

#include <algorithm>

#include "largeness/error.hpp"

namespace largeness {

  FiniteSemigroup make_unchecked(std::size_t n, std::vector<std::uint8_t> table, std::string name) {
    return FiniteSemigroup(n, std::move(table), std::move(name));
  }

  FiniteSemigroup validate_table(std::size_t n, Table const& table, std::string name) {
    if (n == 0 || n > max_carrier) {
      throw Error(Errc::BadShape, "carrier size must be in [1, 64], got " + std::to_string(n), {n});
    }
    if (table.size() != n) {
      throw Error(Errc::BadShape,
                  "expected " + std::to_string(n) + " rows, got " + std::to_string(table.size()),
                  {n, table.size()});
    }
    std::vector<std::uint8_t> flat(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      if (table[row].size() != n) {
        throw Error(Errc::BadShape,
                    "row " + std::to_string(row) + " has " + std::to_string(table[row].size())
                        + " entries, expected " + std::to_string(n),
                    {row});
      }
      for (std::size_t col = 0; col < n; ++col) {
        if (table[row][col] >= n) {
          throw Error(Errc::BadEntry,
                      "entry at row " + std::to_string(row) + ", column " + std::to_string(col)
                          + " is " + std::to_string(table[row][col]) + ", outside [0, "
                          + std::to_string(n) + ")",
                      {row, col});
        }
        flat[row * n + col] = static_cast<std::uint8_t>(table[row][col]);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = flat[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (flat[xy * n + z] != flat[x * n + flat[y * n + z]]) {
            throw Error(Errc::NonAssociative,
                        "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" + std::to_string(z)
                            + " != " + std::to_string(x) + "*(" + std::to_string(y) + "*"
                            + std::to_string(z) + ")",
                        {x, y, z});
          }
        }
      }
    }
    return make_unchecked(n, std::move(flat), std::move(name));
  }

  FiniteSemigroup FiniteSemigroup::renamed(std::string name) const {
    return FiniteSemigroup(_n, _table, std::move(name));
  }

  Table FiniteSemigroup::rows() const {
    Table result(_n, std::vector<Element>(_n));
    for (std::size_t x = 0; x < _n; ++x) {
      for (std::size_t y = 0; y < _n; ++y) {
        result[x][y] = (*this)(x, y);
      }
    }
    return result;
  }

  SubsetMask FiniteSemigroup::product_set(SubsetMask const& A, SubsetMask const& B) const {
    SubsetMask result(_n);
    A.for_each([&](Element a) { B.for_each([&](Element b) { result.insert((*this)(a, b)); }); });
    return result;
  }

  SubsetMask FiniteSemigroup::right_translate(SubsetMask const& A, Element x) const {
    SubsetMask result(_n);
    A.for_each([&](Element a) { result.insert((*this)(a, x)); });
    return result;
  }

  SubsetMask FiniteSemigroup::left_translate(Element x, SubsetMask const& A) const {
    SubsetMask result(_n);
    A.for_each([&](Element a) { result.insert((*this)(x, a)); });
    return result;
  }

  bool FiniteSemigroup::is_commutative() const {
    for (std::size_t x = 0; x < _n; ++x) {
      for (std::size_t y = x + 1; y < _n; ++y) {
        if ((*this)(x, y) != (*this)(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Element> FiniteSemigroup::identity() const {
    for (std::size_t e = 0; e < _n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < _n && ok; ++x) {
        ok = (*this)(e, x) == x && (*this)(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    std::size_t const m = S.size();
    std::size_t const k = T.size();
    if (m * k > max_carrier) {
      throw Error(Errc::Overflow,
                  "product carrier " + std::to_string(m * k) + " exceeds "
                      + std::to_string(max_carrier),
                  {m * k});
    }
    std::vector<std::uint8_t> table(m * k * m * k);
    std::size_t const         n = m * k;
    for (std::size_t s1 = 0; s1 < m; ++s1) {
      for (std::size_t t1 = 0; t1 < k; ++t1) {
        for (std::size_t s2 = 0; s2 < m; ++s2) {
          for (std::size_t t2 = 0; t2 < k; ++t2) {
            table[(s1 * k + t1) * n + (s2 * k + t2)]
                = static_cast<std::uint8_t>(S(s1, s2) * k + T(t1, t2));
          }
        }
      }
    }
    std::string name;
    if (!S.name().empty() || !T.name().empty()) {
      name = S.name() + "x" + T.name();
    }
    return make_unchecked(n, std::move(table), std::move(name));
  }

  SubsetMask cartesian(SubsetMask const& A, SubsetMask const& B) {
    std::size_t const k = B.width();
    if (A.width() * k > max_carrier) {
      throw Error(Errc::Overflow, "product carrier exceeds " + std::to_string(max_carrier));
    }
    SubsetMask result(A.width() * k);
    A.for_each([&](Element a) { B.for_each([&](Element b) { result.insert(a * k + b); }); });
    return result;
  }

  SubsetMask project_first(SubsetMask const& D, std::size_t s_size, std::size_t t_size) {
    SubsetMask result(s_size);
    D.for_each([&](Element p) { result.insert(p / t_size); });
    return result;
  }

  SubsetMask project_second(SubsetMask const& D, std::size_t s_size, std::size_t t_size) {
    (void) s_size;
    SubsetMask result(t_size);
    D.for_each([&](Element p) { result.insert(p % t_size); });
    return result;
  }

  SubsetMask translate_preimage(FiniteSemigroup const& S, Element t, SubsetMask const& A) {
    if (t >= S.size() || A.width() != S.size()) {
      throw Error(Errc::InvalidArgument, "translate_preimage: element or subset outside carrier");
    }
    SubsetMask result(S.size());
    for (Element y = 0; y < S.size(); ++y) {
      if (A.contains(S(t, y))) {
        result.insert(y);
      }
    }
    return result;
  }

  SubsetMask union_preimage(FiniteSemigroup const& S, SubsetMask const& G, SubsetMask const& A) {
    SubsetMask result(S.size());
    G.for_each([&](Element t) { result |= translate_preimage(S, t, A); });
    return result;
  }

  bool is_subsemigroup(FiniteSemigroup const& S, SubsetMask const& E) {
    bool closed = true;
    E.for_each([&](Element x) {
      E.for_each([&](Element y) { closed = closed && E.contains(S(x, y)); });
    });
    return closed;
  }

  namespace {
    std::vector<SubsetMask> minimal_by_inclusion(std::vector<SubsetMask> ideals) {
      std::sort(ideals.begin(), ideals.end(), size_bits_less);
      ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
      std::vector<SubsetMask> result;
      for (auto const& I : ideals) {
        bool minimal = true;
        for (auto const& J : ideals) {
          if (J != I && J.is_subset_of(I)) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          result.push_back(I);
        }
      }
      return result;
    }
  }  // namespace

  KernelReport kernel_report(FiniteSemigroup const& S, SubsetMask const& E) {
    if (E.width() != S.size() || E.empty() || !is_subsemigroup(S, E)) {
      throw Error(Errc::CoreNotSubsemigroup, E.to_string() + " is not a subsemigroup");
    }
    std::vector<SubsetMask> left;
    std::vector<SubsetMask> right;
    E.for_each([&](Element x) {
      // principal ideals of E: {x} u Ex and {x} u xE
      left.push_back(S.right_translate(E, x) | SubsetMask::single(S.size(), x));
      right.push_back(S.left_translate(x, E) | SubsetMask::single(S.size(), x));
    });
    KernelReport report;
    report.minimal_left_ideals  = minimal_by_inclusion(std::move(left));
    report.minimal_right_ideals = minimal_by_inclusion(std::move(right));
    report.kernel               = S.none();
    for (auto const& R : report.minimal_right_ideals) {
      report.kernel |= R;
    }
    report.idempotents = S.none();
    E.for_each([&](Element x) {
      if (S.is_idempotent(x)) {
        report.idempotents.insert(x);
      }
    });
    report.minimal_idempotents = report.idempotents & report.kernel;
    return report;
  }

  KernelReport kernel_report(FiniteSemigroup const& S) {
    return kernel_report(S, S.full());
  }

  std::vector<SubsetMask> subsemigroups(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    if (n > max_exhaustive_carrier) {
      throw Error(Errc::BoundExceeded,
                  "subsemigroup scan needs |S| <= " + std::to_string(max_exhaustive_carrier)
                      + ", got " + std::to_string(n),
                  {n});
    }
    std::vector<SubsetMask> result;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      SubsetMask const E(n, bits);
      if (is_subsemigroup(S, E)) {
        result.push_back(E);
      }
    }
    std::sort(result.begin(), result.end(), size_bits_less);
    return result;
  }

  namespace builtin {
    namespace {
      FiniteSemigroup from_op(std::size_t n, std::string name, auto op) {
        Table t(n, std::vector<Element>(n));
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            t[x][y] = op(x, y);
          }
        }
        return validate_table(n, t, std::move(name));
      }
    }  // namespace

    FiniteSemigroup trivial() {
      return from_op(1, "TRIVIAL", [](Element, Element) { return Element{0}; });
    }

    FiniteSemigroup min2() {
      return from_op(2, "MIN2", [](Element x, Element y) { return std::min(x, y); });
    }

    FiniteSemigroup left_zero(std::size_t n) {
      return from_op(n, "LZ" + std::to_string(n), [](Element x, Element) { return x; });
    }

    FiniteSemigroup right_zero(std::size_t n) {
      return from_op(n, "RZ" + std::to_string(n), [](Element, Element y) { return y; });
    }

    FiniteSemigroup cyclic(std::size_t n) {
      return from_op(n, "Z" + std::to_string(n), [n](Element x, Element y) { return (x + y) % n; });
    }

    FiniteSemigroup null_semigroup(std::size_t n) {
      return from_op(n, "NULL" + std::to_string(n), [](Element, Element) { return Element{0}; });
    }

    std::optional<FiniteSemigroup> by_name(std::string const& name) {
      auto numeric_suffix = [&](std::string const& prefix) -> std::optional<std::size_t> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
          return std::nullopt;
        }
        std::size_t value = 0;
        for (std::size_t i = prefix.size(); i < name.size(); ++i) {
          if (name[i] < '0' || name[i] > '9' || value > max_carrier) {
            return std::nullopt;
          }
          value = value * 10 + static_cast<std::size_t>(name[i] - '0');
        }
        if (value == 0 || value > max_carrier) {
          return std::nullopt;
        }
        return value;
      };
      if (name == "TRIVIAL") {
        return trivial();
      }
      if (name == "MIN2") {
        return min2();
      }
      if (auto n = numeric_suffix("NULL")) {
        return null_semigroup(*n);
      }
      if (auto n = numeric_suffix("LZ")) {
        return left_zero(*n);
      }
      if (auto n = numeric_suffix("RZ")) {
        return right_zero(*n);
      }
      if (auto n = numeric_suffix("Z")) {
        return cyclic(*n);
      }
      return std::nullopt;
    }
  }  // namespace builtin

}  // namespace largeness
