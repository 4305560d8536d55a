// Brute-force reference implementations. These read only the Cayley table
// through S(x, y) and work on raw bit words, so they share no code with the
// library routines they are compared against.
#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "largeness/jset.hpp"
#include "largeness/semigroup.hpp"

namespace oracle {

  using Bits = std::uint64_t;
  using largeness::FiniteSemigroup;

  inline bool has(Bits s, std::size_t x) {
    return ((s >> x) & 1U) != 0;
  }

  inline Bits all(std::size_t n) {
    return (Bits{1} << n) - 1;
  }

  inline std::size_t count_associative_tables(std::size_t n) {
    std::size_t cells = n * n;
    std::vector<std::size_t> t(cells, 0);
    std::size_t total = 0;
    while (true) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t y = 0; y < n && ok; ++y) {
          for (std::size_t z = 0; z < n && ok; ++z) {
            ok = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
          }
        }
      }
      total += ok ? 1 : 0;
      std::size_t c = 0;
      while (c < cells && ++t[c] == n) {
        t[c++] = 0;
      }
      if (c == cells) {
        return total;
      }
    }
  }

  inline bool closed(FiniteSemigroup const& S, Bits E) {
    for (std::size_t x = 0; x < S.size(); ++x) {
      for (std::size_t y = 0; y < S.size(); ++y) {
        if (has(E, x) && has(E, y) && !has(E, S(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Bits> subsemigroups(FiniteSemigroup const& S) {
    std::vector<Bits> out;
    for (Bits E = 1; E <= all(S.size()); ++E) {
      if (closed(S, E)) {
        out.push_back(E);
      }
    }
    return out;
  }

  // Two-sided ideal of the subsemigroup C: I nonempty inside C with CI and IC inside I.
  inline bool is_ideal_of(FiniteSemigroup const& S, Bits C, Bits I) {
    for (std::size_t c = 0; c < S.size(); ++c) {
      for (std::size_t i = 0; i < S.size(); ++i) {
        if (has(C, c) && has(I, i) && (!has(I, S(c, i)) || !has(I, S(i, c)))) {
          return false;
        }
      }
    }
    return true;
  }

  // Smallest ideal of C, found as the intersection of every ideal.
  inline Bits kernel(FiniteSemigroup const& S, Bits C) {
    Bits k = C;
    for (Bits I = 1; I <= all(S.size()); ++I) {
      if ((I & ~C) == 0 && is_ideal_of(S, C, I)) {
        k &= I;
      }
    }
    return k;
  }

  inline Bits idempotents(FiniteSemigroup const& S, Bits C) {
    Bits out = 0;
    for (std::size_t x = 0; x < S.size(); ++x) {
      if (has(C, x) && S(x, x) == x) {
        out |= Bits{1} << x;
      }
    }
    return out;
  }

  inline Bits preimage(FiniteSemigroup const& S, std::size_t t, Bits A) {
    Bits out = 0;
    for (std::size_t y = 0; y < S.size(); ++y) {
      if (has(A, S(t, y))) {
        out |= Bits{1} << y;
      }
    }
    return out;
  }

  // Members of the filter generated by `base`: close under supersets and
  // pairwise intersections until nothing changes.
  inline std::set<Bits> filter_closure(std::size_t n, std::vector<Bits> const& base) {
    std::set<Bits> fam(base.begin(), base.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Bits> now(fam.begin(), fam.end());
      for (Bits a : now) {
        for (Bits b = 0; b <= all(n); ++b) {
          if ((a & b) == a && fam.insert(b).second) {
            grew = true;
          }
        }
        for (Bits b : now) {
          if (fam.insert(a & b).second) {
            grew = true;
          }
        }
      }
    }
    return fam;
  }

  // C inside the union of t^{-1}A over some finite G inside C.
  inline bool f_syndetic(FiniteSemigroup const& S, Bits C, Bits A) {
    for (Bits G = 1; G <= all(S.size()); ++G) {
      if ((G & ~C) != 0) {
        continue;
      }
      Bits cover = 0;
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (has(G, t)) {
          cover |= preimage(S, t, A);
        }
      }
      if ((C & ~cover) == 0) {
        return true;
      }
    }
    return false;
  }

  // Some x in C with c x in A for all c in C.
  inline bool f_thick(FiniteSemigroup const& S, Bits C, Bits A) {
    for (std::size_t x = 0; x < S.size(); ++x) {
      if (!has(C, x)) {
        continue;
      }
      bool ok = true;
      for (std::size_t c = 0; c < S.size(); ++c) {
        if (has(C, c) && !has(A, S(c, x))) {
          ok = false;
        }
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  // Products over every nonempty H inside {lo..hi}, each factor a value of
  // any member at that index, multiplied in increasing index order.
  inline Bits zfp(FiniteSemigroup const& S, largeness::SequenceFamily const& fam, std::size_t lo, std::size_t hi) {
    std::size_t const N = hi - lo + 1;
    Bits              out = 0;
    for (Bits H = 1; H < (Bits{1} << N); ++H) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < N; ++i) {
        if (has(H, i)) {
          idx.push_back(lo + i);
        }
      }
      std::size_t choices = 1;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        choices *= fam.size();
      }
      for (std::size_t c = 0; c < choices; ++c) {
        std::size_t code = c;
        std::size_t prod = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          std::size_t const v = fam[code % fam.size()].at(idx[i]);
          code /= fam.size();
          prod = i == 0 ? v : S(prod, v);
        }
        out |= Bits{1} << prod;
      }
    }
    return out;
  }

  // Some a_1 f(t_1) ... a_m f(t_m) a_{m+1} in A for every member, with
  // m <= m_max and t_1 < ... < t_m <= t_max.
  inline bool j_witness_exists(FiniteSemigroup const&           S,
                               Bits                             A,
                               largeness::SequenceFamily const& fam,
                               std::size_t                      m_max,
                               std::size_t                      t_max) {
    std::size_t const n = S.size();
    for (std::size_t m = 1; m <= m_max; ++m) {
      for (Bits T = 1; T < (Bits{1} << t_max); ++T) {
        if (static_cast<std::size_t>(__builtin_popcountll(T)) != m) {
          continue;
        }
        std::vector<std::size_t> ts;
        for (std::size_t i = 0; i < t_max; ++i) {
          if (has(T, i)) {
            ts.push_back(i + 1);
          }
        }
        std::size_t combos = 1;
        for (std::size_t i = 0; i <= m; ++i) {
          combos *= n;
        }
        for (std::size_t c = 0; c < combos; ++c) {
          std::vector<std::size_t> a;
          for (std::size_t i = 0, code = c; i <= m; ++i, code /= n) {
            a.push_back(code % n);
          }
          bool every = true;
          for (auto const& f : fam) {
            std::size_t v = a[0];
            for (std::size_t i = 0; i < m; ++i) {
              v = S(S(v, f.at(ts[i])), a[i + 1]);
            }
            every = every && has(A, v);
          }
          if (every) {
            return true;
          }
        }
      }
    }
    return false;
  }

}  // namespace oracle
