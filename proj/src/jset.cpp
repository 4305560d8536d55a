#include "largeness/jset.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "largeness/error.hpp"

namespace largeness {

  Element EventuallyPeriodicSeq::at(std::size_t t) const {
    if (t == 0) {
      throw Error(Errc::InvalidArgument, "sequence indices start at 1");
    }
    if (t <= preperiod.size()) {
      return preperiod[t - 1];
    }
    return period[(t - preperiod.size() - 1) % period.size()];
  }

  std::string to_string(EventuallyPeriodicSeq const& f) {
    std::string out;
    for (std::size_t i = 0; i < f.preperiod.size(); ++i) {
      out += (i ? "," : "") + std::to_string(f.preperiod[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < f.period.size(); ++i) {
      out += (i ? "," : "") + std::to_string(f.period[i]);
    }
    return out;
  }

  std::string to_string(SequenceFamily const& family) {
    std::string out = "{";
    for (std::size_t i = 0; i < family.size(); ++i) {
      out += (i ? "; " : "") + to_string(family[i]);
    }
    return out + "}";
  }

  namespace {
    bool primitive(std::vector<Element> const& w) {
      for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) {
          continue;
        }
        bool repeats = true;
        for (std::size_t i = d; i < w.size() && repeats; ++i) {
          repeats = w[i] == w[i - d];
        }
        if (repeats) {
          return false;
        }
      }
      return true;
    }

    // all words of the given length over {0..n-1}, lexicographic
    std::vector<std::vector<Element>> words(std::size_t n, std::size_t length) {
      std::vector<std::vector<Element>> out;
      std::vector<Element>              w(length, 0);
      while (true) {
        out.push_back(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == n) {
          w[--i] = 0;
        }
        if (i == 0) {
          return out;
        }
        ++w[i - 1];
      }
    }
  }  // namespace

  std::vector<EventuallyPeriodicSeq> canonical_sequences(std::size_t n,
                                                         std::size_t max_preperiod,
                                                         std::size_t max_period) {
    std::vector<EventuallyPeriodicSeq> out;
    for (std::size_t p = 0; p <= max_preperiod; ++p) {
      for (std::size_t q = 1; q <= max_period; ++q) {
        for (auto const& pre : words(n, p)) {
          for (auto const& per : words(n, q)) {
            if (!primitive(per) || (!pre.empty() && pre.back() == per.back())) {
              continue;
            }
            out.push_back(EventuallyPeriodicSeq{pre, per});
          }
        }
      }
    }
    return out;
  }

  std::vector<SequenceFamily> family_class(std::size_t n, FamilyClass const& c) {
    auto const                  seqs = canonical_sequences(n, c.max_preperiod, c.max_period);
    std::vector<SequenceFamily> out;
    std::vector<std::size_t>    pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (!pick.empty()) {
        SequenceFamily fam;
        for (std::size_t i : pick) {
          fam.push_back(seqs[i]);
        }
        out.push_back(std::move(fam));
      }
      if (pick.size() == c.max_members) {
        return;
      }
      for (std::size_t i = from; i < seqs.size(); ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  void validate_family(FiniteSemigroup const& S, SequenceFamily const& family) {
    if (family.empty()) {
      throw Error(Errc::InvalidArgument, "a sequence family needs at least one member");
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      auto const& f = family[i];
      if (f.period.empty()) {
        throw Error(Errc::InvalidArgument, "member " + std::to_string(i) + " has an empty period", {i});
      }
      for (auto const* part : {&f.preperiod, &f.period}) {
        for (Element x : *part) {
          if (x >= S.size()) {
            throw Error(Errc::BadEntry,
                        "member " + std::to_string(i) + " has value " + std::to_string(x)
                            + " outside the carrier",
                        {i, x});
          }
        }
      }
    }
  }

  std::size_t family_preperiod(SequenceFamily const& family) {
    std::size_t P = 0;
    for (auto const& f : family) {
      P = std::max(P, f.preperiod.size());
    }
    return P;
  }

  std::size_t family_period(SequenceFamily const& family) {
    std::size_t L = 1;
    for (auto const& f : family) {
      L = std::lcm(L, f.period.size());
    }
    return L;
  }

  Element evaluate(FiniteSemigroup const& S, JWitness const& w, EventuallyPeriodicSeq const& f) {
    Element x = w.a.at(0);
    for (std::size_t j = 0; j < w.m; ++j) {
      x = S(S(x, f.at(w.t.at(j))), w.a.at(j + 1));
    }
    return x;
  }

  Element evaluate(FiniteSemigroup const& S, CommutativeJWitness const& w, EventuallyPeriodicSeq const& f) {
    Element x = w.a;
    for (std::size_t t : w.H) {
      x = S(x, f.at(t));
    }
    return x;
  }

  namespace {
    bool strictly_increasing(std::vector<std::size_t> const& t) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] == 0 || (j > 0 && t[j] <= t[j - 1])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool verify_j_witness(FiniteSemigroup const& S,
                        SubsetMask const&      A,
                        SequenceFamily const&  family,
                        JWitness const&        w) {
    if (w.m == 0 || w.t.size() != w.m || w.a.size() != w.m + 1 || !strictly_increasing(w.t)) {
      return false;
    }
    for (Element x : w.a) {
      if (x >= S.size()) {
        return false;
      }
    }
    return std::all_of(family.begin(), family.end(),
                       [&](auto const& f) { return A.contains(evaluate(S, w, f)); });
  }

  bool verify_j_witness(FiniteSemigroup const&     S,
                        SubsetMask const&          A,
                        SequenceFamily const&      family,
                        CommutativeJWitness const& w) {
    if (w.H.empty() || !strictly_increasing(w.H) || w.a >= S.size()) {
      return false;
    }
    return std::all_of(family.begin(), family.end(),
                       [&](auto const& f) { return A.contains(evaluate(S, w, f)); });
  }

  // ---------------------------------------------------------------------
  // Zigzag finite products
  // ---------------------------------------------------------------------

  ZfpTrace zfp_traced(FiniteSemigroup const& S, SequenceFamily const& family, std::size_t min_index) {
    validate_family(S, family);
    if (min_index == 0) {
      throw Error(Errc::InvalidArgument, "min_index starts at 1");
    }
    std::size_t const P = family_preperiod(family);
    std::size_t const L = family_period(family);
    SubsetMask        R(S.size());
    std::size_t       stagnant = 0;
    std::size_t       t        = min_index;
    for (;; ++t) {
      SubsetMask Y(S.size());
      for (auto const& f : family) {
        Y.insert(f.at(t));
      }
      SubsetMask next = R | Y;
      R.for_each([&](Element r) { Y.for_each([&](Element y) { next.insert(S(r, y)); }); });
      if (next == R && t > P) {
        // stop after a full unchanged period in the tail
        if (++stagnant == L) {
          break;
        }
      } else {
        stagnant = 0;
      }
      R = next;
    }
    return ZfpTrace{R, t};
  }

  SubsetMask zfp(FiniteSemigroup const& S, SequenceFamily const& family, std::size_t min_index) {
    return zfp_traced(S, family, min_index).result;
  }

  SubsetMask zfp_enumerate(FiniteSemigroup const& S,
                           SequenceFamily const&  family,
                           std::size_t            min_index,
                           std::size_t            max_index) {
    validate_family(S, family);
    if (min_index == 0) {
      throw Error(Errc::InvalidArgument, "min_index starts at 1");
    }
    // partial products seen so far; the empty product is tracked separately
    SubsetMask out(S.size());
    for (std::size_t t = min_index; t <= max_index; ++t) {
      SubsetMask next = out;
      for (auto const& f : family) {
        Element const y = f.at(t);
        next.insert(y);
        out.for_each([&](Element r) { next.insert(S(r, y)); });
      }
      out = next;
    }
    return out;
  }

  bool is_good(FiniteSemigroup const& S, FilterBase const& F, SequenceFamily const& family) {
    require_subsemigroup_core(F);
    return zfp(S, family, 1).is_subset_of(F.core());
  }

  std::optional<std::size_t> good_from(FiniteSemigroup const& S,
                                       SubsetMask const&      core,
                                       SequenceFamily const&  family) {
    // beyond P + L the tail sets repeat with period L
    std::size_t const last = family_preperiod(family) + family_period(family);
    for (std::size_t k = 1; k <= last; ++k) {
      if (zfp(S, family, k).is_subset_of(core)) {
        return k;
      }
    }
    return std::nullopt;
  }

  // ---------------------------------------------------------------------
  // Witness search
  // ---------------------------------------------------------------------

  namespace {
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    // State vectors (v_1, ..., v_k) in S^k encoded in base |S|. Positions
    // t are grouped into classes 1..P (exact) and P+1..P+L (tail phases);
    // class c is represented by t = c.
    class Engine {
     public:
      Engine(FiniteSemigroup const& S, SequenceFamily const& family, bool interleaved)
          : _S(S), _family(family), _interleaved(interleaved) {
        validate_family(S, family);
        _k = family.size();
        _n = S.size();
        _P = family_preperiod(family);
        _L = family_period(family);
        _nv = 1;
        for (std::size_t i = 0; i < _k; ++i) {
          _nv *= _n;
          if (_nv > (std::size_t{1} << 22)) {
            throw Error(Errc::BoundExceeded, "state space |S|^|family| is too large", {_n, _k});
          }
        }
        _values.resize(_P + _L + 1);
        for (std::size_t c = 1; c <= _P + _L; ++c) {
          for (auto const& f : family) {
            _values[c].push_back(f.at(c));
          }
        }
      }

      std::size_t vectors() const noexcept {
        return _nv;
      }
      std::size_t coefficient_count() const noexcept {
        return _interleaved ? _n : 1;
      }
      std::size_t preperiod() const noexcept {
        return _P;
      }
      std::size_t period() const noexcept {
        return _L;
      }
      std::size_t class_of(std::size_t t) const noexcept {
        return t <= _P ? t : _P + 1 + (t - _P - 1) % _L;
      }

      // v_i = a * f_i(t) (or f_i(t) in the additive form)
      std::size_t start(Element a, std::size_t t) const {
        auto const& y   = _values[class_of(t)];
        std::size_t out = 0;
        for (std::size_t i = _k; i-- > 0;) {
          out = out * _n + (_interleaved ? _S(a, y[i]) : y[i]);
        }
        return out;
      }

      // v_i = v_i * a * f_i(t) (or v_i * f_i(t))
      std::size_t step(std::size_t v, Element a, std::size_t t) const {
        auto const& y = _values[class_of(t)];
        std::size_t digits[64];
        for (std::size_t i = 0; i < _k; ++i) {
          digits[i] = v % _n;
          v /= _n;
        }
        std::size_t out = 0;
        for (std::size_t i = _k; i-- > 0;) {
          Element x = digits[i];
          if (_interleaved) {
            x = _S(x, a);
          }
          out = out * _n + _S(x, y[i]);
        }
        return out;
      }

      // least closing coefficient: v_i * a in A (or a * v_i in A) for all i
      std::optional<Element> closing(std::size_t v, SubsetMask const& A) const {
        std::size_t digits[64];
        for (std::size_t i = 0; i < _k; ++i) {
          digits[i] = v % _n;
          v /= _n;
        }
        for (Element a = 0; a < _n; ++a) {
          bool ok = true;
          for (std::size_t i = 0; i < _k && ok; ++i) {
            ok = A.contains(_interleaved ? _S(digits[i], a) : _S(a, digits[i]));
          }
          if (ok) {
            return a;
          }
        }
        return std::nullopt;
      }

      std::vector<char> final_set(SubsetMask const& A) const {
        std::vector<char> fin(_nv, 0);
        for (std::size_t v = 0; v < _nv; ++v) {
          fin[v] = closing(v, A).has_value() ? 1 : 0;
        }
        return fin;
      }

      // Shortest number of steps to reach each vector.
      std::vector<std::size_t> distances() const {
        // node = v * (P + 1) + pos, pos in 0..P-1 for exact t = pos + 1,
        // pos = P for the tail
        std::size_t const        slots = _P + 1;
        std::vector<std::size_t> dist(_nv * slots, npos);
        std::deque<std::size_t>  queue;
        auto pos_of = [&](std::size_t c) { return c <= _P ? c - 1 : _P; };
        auto push   = [&](std::size_t node, std::size_t d) {
          if (dist[node] == npos) {
            dist[node] = d;
            queue.push_back(node);
          }
        };
        for (std::size_t c = 1; c <= _P + _L; ++c) {
          for (Element a = 0; a < coefficient_count(); ++a) {
            push(start(a, c) * slots + pos_of(c), 1);
          }
        }
        while (!queue.empty()) {
          std::size_t const node = queue.front();
          queue.pop_front();
          std::size_t const v   = node / slots;
          std::size_t const pos = node % slots;
          // next classes strictly after the current position
          std::size_t const first = pos == _P ? _P + 1 : pos + 2;
          for (std::size_t c = first; c <= _P + _L; ++c) {
            for (Element a = 0; a < coefficient_count(); ++a) {
              push(step(v, a, c) * slots + pos_of(c), dist[node] + 1);
            }
          }
        }
        std::vector<std::size_t> best(_nv, npos);
        for (std::size_t node = 0; node < dist.size(); ++node) {
          best[node / slots] = std::min(best[node / slots], dist[node]);
        }
        return best;
      }

      // Coefficients (least first) for fixed positions t, if any.
      std::optional<std::vector<Element>> coefficients(std::vector<std::size_t> const& t,
                                                       SubsetMask const&               A) const {
        std::size_t const m = t.size();
        // V[j] = vectors after step j+1 that can still be completed
        std::vector<std::vector<char>> V(m, std::vector<char>(_nv, 0));
        V[m - 1] = final_set(A);
        for (std::size_t j = m - 1; j-- > 0;) {
          for (std::size_t v = 0; v < _nv; ++v) {
            for (Element a = 0; a < coefficient_count() && !V[j][v]; ++a) {
              V[j][v] = V[j + 1][step(v, a, t[j + 1])];
            }
          }
        }
        std::vector<Element> out;
        std::size_t          v     = 0;
        bool                 found = false;
        for (Element a = 0; a < coefficient_count(); ++a) {
          if (V[0][start(a, t[0])]) {
            out.push_back(a);
            v     = start(a, t[0]);
            found = true;
            break;
          }
        }
        if (!found) {
          return std::nullopt;
        }
        for (std::size_t j = 1; j < m; ++j) {
          for (Element a = 0; a < coefficient_count(); ++a) {
            std::size_t const w = step(v, a, t[j]);
            if (V[j][w]) {
              out.push_back(a);
              v = w;
              break;
            }
          }
        }
        out.push_back(*closing(v, A));
        return out;
      }

      // Lexicographically least positions with exactly m steps, t_m <= t_max.
      std::optional<std::vector<std::size_t>> positions(std::size_t m, std::size_t t_max, SubsetMask const& A) const {
        if (m == 0 || t_max < m) {
          return std::nullopt;
        }
        // W[j][t] = vectors after step j+1 at position t completable within t_max
        std::vector<std::vector<std::vector<char>>> W(m);
        std::vector<char> const                     fin = final_set(A);
        W[m - 1].assign(t_max + 1, fin);
        for (std::size_t j = m - 1; j-- > 0;) {
          W[j].assign(t_max + 1, std::vector<char>(_nv, 0));
          std::vector<char> suffix(_nv, 0);
          for (std::size_t t = t_max; t >= 1; --t) {
            W[j][t] = suffix;
            // U = vectors that step at position t into W[j+1][t]
            for (std::size_t v = 0; v < _nv; ++v) {
              if (suffix[v]) {
                continue;
              }
              for (Element a = 0; a < coefficient_count(); ++a) {
                if (W[j + 1][t][step(v, a, t)]) {
                  suffix[v] = 1;
                  break;
                }
              }
            }
          }
        }
        std::vector<std::size_t> t;
        std::vector<char>        X(_nv, 0);
        bool                     any = false;
        for (std::size_t t1 = 1; t1 <= t_max && !any; ++t1) {
          for (Element a = 0; a < coefficient_count(); ++a) {
            std::size_t const v = start(a, t1);
            if (W[0][t1][v]) {
              X[v] = 1;
              any  = true;
            }
          }
          if (any) {
            t.push_back(t1);
          }
        }
        if (!any) {
          return std::nullopt;
        }
        for (std::size_t j = 1; j < m; ++j) {
          std::vector<char> next(_nv, 0);
          bool              hit = false;
          for (std::size_t tj = t.back() + 1; tj <= t_max && !hit; ++tj) {
            for (std::size_t v = 0; v < _nv; ++v) {
              if (!X[v]) {
                continue;
              }
              for (Element a = 0; a < coefficient_count(); ++a) {
                std::size_t const w = step(v, a, tj);
                if (W[j][tj][w]) {
                  next[w] = 1;
                  hit     = true;
                }
              }
            }
            if (hit) {
              t.push_back(tj);
            }
          }
          if (!hit) {
            throw std::logic_error("witness position search lost a completable state");
          }
          X = std::move(next);
        }
        return t;
      }

     private:
      FiniteSemigroup const&            _S;
      SequenceFamily const&             _family;
      bool                              _interleaved;
      std::size_t                       _k  = 0;
      std::size_t                       _n  = 0;
      std::size_t                       _P  = 0;
      std::size_t                       _L  = 1;
      std::size_t                       _nv = 1;
      std::vector<std::vector<Element>> _values;
    };

    std::optional<JWitness> bounded_for(Engine const& E, std::size_t m, std::size_t t_max, SubsetMask const& A) {
      auto t = E.positions(m, t_max, A);
      if (!t) {
        return std::nullopt;
      }
      auto a = E.coefficients(*t, A);
      if (!a) {
        throw std::logic_error("positions admit no coefficients");
      }
      return JWitness{m, std::move(*a), std::move(*t)};
    }

    std::optional<std::size_t> least_steps(Engine const& E, SubsetMask const& A) {
      auto const                 dist = E.distances();
      std::optional<std::size_t> best;
      for (std::size_t v = 0; v < E.vectors(); ++v) {
        if (dist[v] != npos && E.closing(v, A) && (!best || dist[v] < *best)) {
          best = dist[v];
        }
      }
      return best;
    }
  }  // namespace

  JSearchResult j_witness(FiniteSemigroup const& S,
                          SubsetMask const&      A,
                          SequenceFamily const&  family,
                          JBounds                bounds) {
    if (bounds.m_max == 0 || bounds.t_max == 0) {
      throw Error(Errc::InvalidArgument, "witness bounds must be positive");
    }
    Engine const E(S, family, true);
    for (std::size_t m = 1; m <= bounds.m_max; ++m) {
      if (auto w = bounded_for(E, m, bounds.t_max, A)) {
        return JSearchResult{SearchStatus::Found, std::move(w)};
      }
    }
    return JSearchResult{SearchStatus::BoundExhausted, std::nullopt};
  }

  JSearchResult j_witness(FiniteSemigroup const& S, SubsetMask const& A, SequenceFamily const& family) {
    Engine const E(S, family, true);
    auto const   m = least_steps(E, A);
    if (!m) {
      return JSearchResult{SearchStatus::Refuted, std::nullopt};
    }
    auto w = bounded_for(E, *m, E.preperiod() + *m * E.period(), A);
    if (!w) {
      throw std::logic_error("reachable witness not found inside its position bound");
    }
    return JSearchResult{SearchStatus::Found, std::move(w)};
  }

  std::optional<CommutativeJWitness> j_witness_commutative(FiniteSemigroup const& S,
                                                           SubsetMask const&      A,
                                                           SequenceFamily const&  family) {
    Engine const E(S, family, false);
    auto const   m = least_steps(E, A);
    if (!m) {
      return std::nullopt;
    }
    auto w = bounded_for(E, *m, E.preperiod() + *m * E.period(), A);
    if (!w) {
      throw std::logic_error("reachable additive witness not found inside its position bound");
    }
    // the additive engine records one dummy coefficient per step, then a
    return CommutativeJWitness{w->a.back(), std::move(w->t)};
  }

  JSearchResult f_j_witness(FiniteSemigroup const& S,
                            FilterBase const&      F,
                            SubsetMask const&      A,
                            SequenceFamily const&  family) {
    if (!is_good(S, F, family)) {
      throw Error(Errc::NotGoodFamily, "the zigzag products of the family leave the filter core "
                                           + F.core().to_string());
    }
    return j_witness(S, A, family);
  }

  JReachability::JReachability(FiniteSemigroup const& S, SequenceFamily const& family, bool interleaved)
      : _S(&S), _k(family.size()), _interleaved(interleaved) {
    Engine const E(S, family, interleaved);
    _distance = E.distances();
  }

  namespace {
    bool closes(FiniteSemigroup const& S, std::size_t v, std::size_t k, bool interleaved, SubsetMask const& A) {
      std::size_t const n = S.size();
      std::size_t       digits[64];
      for (std::size_t i = 0; i < k; ++i) {
        digits[i] = v % n;
        v /= n;
      }
      for (Element a = 0; a < n; ++a) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          ok = A.contains(interleaved ? S(digits[i], a) : S(a, digits[i]));
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool JReachability::hits(SubsetMask const& A) const {
    return min_steps(A).has_value();
  }

  std::optional<std::size_t> JReachability::min_steps(SubsetMask const& A) const {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < _distance.size(); ++v) {
      if (_distance[v] != npos && (!best || _distance[v] < *best) && closes(*_S, v, _k, _interleaved, A)) {
        best = _distance[v];
      }
    }
    return best;
  }

  std::optional<std::vector<Element>> in_theta(FiniteSemigroup const&          S,
                                               SubsetMask const&               A,
                                               SequenceFamily const&           family,
                                               std::vector<std::size_t> const& indices) {
    if (indices.empty() || !strictly_increasing(indices)) {
      throw Error(Errc::InvalidArgument, "index set must be nonempty, 1-based and strictly increasing");
    }
    Engine const E(S, family, true);
    return E.coefficients(indices, A);
  }

  namespace {
    void check_blocks(std::vector<std::vector<std::size_t>> const& blocks) {
      for (std::size_t n = 0; n < blocks.size(); ++n) {
        auto const& H = blocks[n];
        if (H.empty() || !strictly_increasing(H)) {
          throw Error(Errc::BlockOrderViolation,
                      "block " + std::to_string(n + 1) + " must be nonempty, 1-based and increasing", {n + 1});
        }
        if (n + 1 < blocks.size() && !blocks[n + 1].empty() && H.back() >= blocks[n + 1].front()) {
          throw Error(Errc::BlockOrderViolation,
                      "max of block " + std::to_string(n + 1) + " is not below min of block "
                          + std::to_string(n + 2),
                      {n + 1, n + 2});
        }
      }
    }

    std::optional<BlockUnionWitness> search_blocks(FiniteSemigroup const&                       S,
                                                   SubsetMask const&                            A,
                                                   SequenceFamily const&                        family,
                                                   std::vector<std::vector<std::size_t>> const& blocks,
                                                   std::size_t                                  from,
                                                   std::size_t                                  depth) {
      std::size_t const r = blocks.size() - from;
      if (r == 0 || r > 63) {
        if (r > 63) {
          throw Error(Errc::BoundExceeded, "at most 63 blocks", {r});
        }
        return std::nullopt;
      }
      Engine const                     E(S, family, true);
      std::optional<BlockUnionWitness> found;
      for_each_subset_canonical(SubsetMask::full(r), [&](SubsetMask const& K) {
        if (K.empty()) {
          return false;
        }
        if (K.count() > depth) {
          return true;
        }
        std::vector<std::size_t> t;
        std::vector<std::size_t> numbers;
        K.for_each([&](Element b) {
          numbers.push_back(from + b + 1);
          t.insert(t.end(), blocks[from + b].begin(), blocks[from + b].end());
        });
        if (auto a = E.coefficients(t, A)) {
          std::size_t const m = t.size();
          found = BlockUnionWitness{std::move(numbers), JWitness{m, std::move(*a), std::move(t)}};
          return true;
        }
        return false;
      });
      return found;
    }
  }  // namespace

  std::optional<BlockUnionWitness> block_union_witness(FiniteSemigroup const&                       S,
                                                       SubsetMask const&                            A,
                                                       SequenceFamily const&                        family,
                                                       std::vector<std::vector<std::size_t>> const& blocks,
                                                       std::size_t                                  depth) {
    check_blocks(blocks);
    return search_blocks(S, A, family, blocks, 0, depth);
  }

  std::vector<BlockUnionWitness> union_subsystem(FiniteSemigroup const&                       S,
                                                 SubsetMask const&                            A,
                                                 SequenceFamily const&                        family,
                                                 std::vector<std::vector<std::size_t>> const& blocks,
                                                 std::size_t                                  depth,
                                                 std::size_t                                  count) {
    check_blocks(blocks);
    std::vector<BlockUnionWitness> out;
    std::size_t                    from = 0;
    while (out.size() < count) {
      auto next = search_blocks(S, A, family, blocks, from, depth);
      if (!next) {
        break;
      }
      from = next->K.back();
      out.push_back(std::move(*next));
    }
    return out;
  }

}  // namespace largeness
