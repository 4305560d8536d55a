#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "largeness/filter.hpp"
#include "largeness/semigroup.hpp"

namespace largeness {

  // A sequence N -> S, 1-based: the preperiod values come first, then the
  // period repeats forever.
  struct EventuallyPeriodicSeq {
    std::vector<Element> preperiod;
    std::vector<Element> period;

    Element at(std::size_t t) const;

    static EventuallyPeriodicSeq constant(Element e) {
      return EventuallyPeriodicSeq{{}, {e}};
    }

    friend bool operator==(EventuallyPeriodicSeq const&, EventuallyPeriodicSeq const&) = default;
  };

  using SequenceFamily = std::vector<EventuallyPeriodicSeq>;

  // "pre|period", e.g. "1|0,2"; "|3" for a constant.
  std::string to_string(EventuallyPeriodicSeq const& f);
  std::string to_string(SequenceFamily const& family);

  // Every sequence over {0..n-1} with at most max_preperiod leading values and
  // period length at most max_period, each written once: the period is
  // primitive and the last preperiod value differs from the last period
  // value. Ordered by (|preperiod|, |period|, values).
  std::vector<EventuallyPeriodicSeq> canonical_sequences(std::size_t n,
                                                         std::size_t max_preperiod,
                                                         std::size_t max_period);

  struct FamilyClass {
    std::size_t max_members   = 2;
    std::size_t max_preperiod = 1;
    std::size_t max_period    = 2;
  };

  // Families of 1..max_members distinct canonical sequences, as sorted index
  // combinations into canonical_sequences.
  std::vector<SequenceFamily> family_class(std::size_t n, FamilyClass const& c);

  // Throws Error(InvalidArgument) for an empty family or period, and
  // Error(BadEntry) for a value outside the carrier.
  void validate_family(FiniteSemigroup const& S, SequenceFamily const& family);

  // Longest preperiod and lcm of the periods.
  std::size_t family_preperiod(SequenceFamily const& family);
  std::size_t family_period(SequenceFamily const& family);

  // x(m, a, t, f) = a_1 f(t_1) a_2 f(t_2) ... a_m f(t_m) a_{m+1}
  struct JWitness {
    std::size_t              m = 0;
    std::vector<Element>     a;
    std::vector<std::size_t> t;

    friend bool operator==(JWitness const&, JWitness const&) = default;
  };

  // a * prod_{t in H} f(t), the additive form on commutative semigroups.
  struct CommutativeJWitness {
    Element                  a = 0;
    std::vector<std::size_t> H;

    friend bool operator==(CommutativeJWitness const&, CommutativeJWitness const&) = default;
  };

  Element evaluate(FiniteSemigroup const& S, JWitness const& w, EventuallyPeriodicSeq const& f);
  Element evaluate(FiniteSemigroup const& S, CommutativeJWitness const& w, EventuallyPeriodicSeq const& f);

  // Shape checks (t strictly increasing, |a| = m + 1) plus x(m, a, t, f) in A
  // for every member f.
  bool verify_j_witness(FiniteSemigroup const& S,
                        SubsetMask const&      A,
                        SequenceFamily const&  family,
                        JWitness const&        w);
  bool verify_j_witness(FiniteSemigroup const&     S,
                        SubsetMask const&          A,
                        SequenceFamily const&      family,
                        CommutativeJWitness const& w);

  // Products prod_{t in H} y_t over finite nonempty H with min H >= min_index,
  // each y_t a value at t of some member, factors in increasing t order.
  SubsetMask zfp(FiniteSemigroup const& S, SequenceFamily const& family, std::size_t min_index = 1);

  struct ZfpTrace {
    SubsetMask  result;
    // Last index folded in before the fixpoint was certified.
    std::size_t horizon = 0;
  };
  ZfpTrace zfp_traced(FiniteSemigroup const& S, SequenceFamily const& family, std::size_t min_index = 1);

  // The same set restricted to H inside [min_index, max_index]: every index
  // in the range is either skipped or contributes one member value, with no
  // stopping rule. Partial products are deduplicated per index.
  SubsetMask zfp_enumerate(FiniteSemigroup const& S,
                           SequenceFamily const&  family,
                           std::size_t            min_index,
                           std::size_t            max_index);

  // zfp(family) inside core(F). Throws Error(CoreNotSubsemigroup).
  bool is_good(FiniteSemigroup const& S, FilterBase const& F, SequenceFamily const& family);

  // Least k with zfp(family, k) inside `core`, if any.
  std::optional<std::size_t> good_from(FiniteSemigroup const& S,
                                       SubsetMask const&      core,
                                       SequenceFamily const&  family);

  enum class SearchStatus { Found, BoundExhausted, Refuted };

  struct JSearchResult {
    SearchStatus            status = SearchStatus::Refuted;
    std::optional<JWitness> witness;
  };

  struct JBounds {
    std::size_t m_max = 4;
    std::size_t t_max = 8;
  };

  // Least witness in (m, t, a) lexicographic order with m <= m_max and
  // t_m <= t_max; BoundExhausted when there is none inside the bounds.
  JSearchResult j_witness(FiniteSemigroup const& S,
                          SubsetMask const&      A,
                          SequenceFamily const&  family,
                          JBounds                bounds);

  // Unbounded: decides existence by reachability over the eventually periodic
  // tail and returns the least witness, or Refuted.
  JSearchResult j_witness(FiniteSemigroup const& S, SubsetMask const& A, SequenceFamily const& family);

  // Least (|H|, H, a) witness for the additive form, unbounded.
  std::optional<CommutativeJWitness> j_witness_commutative(FiniteSemigroup const& S,
                                                           SubsetMask const&      A,
                                                           SequenceFamily const&  family);

  // Closure-mode search for an F-good family. Throws Error(NotGoodFamily).
  JSearchResult f_j_witness(FiniteSemigroup const& S,
                            FilterBase const&      F,
                            SubsetMask const&      A,
                            SequenceFamily const&  family);

  // All vectors (f_1-product, ..., f_k-product) reachable by at least one
  // step, for repeated "does A admit a witness" queries on one family.
  class JReachability {
   public:
    JReachability(FiniteSemigroup const& S, SequenceFamily const& family, bool interleaved = true);

    bool hits(SubsetMask const& A) const;
    // Least number of steps m of a witness for A.
    std::optional<std::size_t> min_steps(SubsetMask const& A) const;

   private:
    FiniteSemigroup const*   _S;
    std::size_t              _k;
    bool                     _interleaved;
    std::vector<std::size_t> _distance;  // per vector; npos when unreachable
  };

  // Coefficients a (lexicographically least) making t = indices a witness,
  // i.e. the index set belongs to the family Theta of sets admitting a
  // witness.
  std::optional<std::vector<Element>> in_theta(FiniteSemigroup const&          S,
                                               SubsetMask const&               A,
                                               SequenceFamily const&           family,
                                               std::vector<std::size_t> const& indices);

  struct BlockUnionWitness {
    std::vector<std::size_t> K;  // 1-based block numbers
    JWitness                 witness;
  };

  // Least K (by size, then lexicographically) with |K| <= depth whose union of
  // blocks is in Theta. Blocks must be nonempty, sorted, with
  // max H_n < min H_{n+1}; otherwise Error(BlockOrderViolation).
  std::optional<BlockUnionWitness> block_union_witness(FiniteSemigroup const&                       S,
                                                       SubsetMask const&                            A,
                                                       SequenceFamily const&                        family,
                                                       std::vector<std::vector<std::size_t>> const& blocks,
                                                       std::size_t                                  depth);

  // Repeats block_union_witness on the blocks after the previous K, up to
  // `count` times, giving a union subsystem.
  std::vector<BlockUnionWitness> union_subsystem(FiniteSemigroup const&                       S,
                                                 SubsetMask const&                            A,
                                                 SequenceFamily const&                        family,
                                                 std::vector<std::vector<std::size_t>> const& blocks,
                                                 std::size_t                                  depth,
                                                 std::size_t                                  count);

}  // namespace largeness
