#ifndef BETTIPAIR_SEQ_HPP
#define BETTIPAIR_SEQ_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bettipair/fp.hpp"

namespace bettipair {

// Finite integer sequence indexed by degree, optionally eventually constant:
// entries past the listed ones repeat `eventual` forever (0 if unset).
// Differences of Hilbert functions can dip below zero, so entries are signed;
// O-sequence predicates reject negative values.
struct Sequence {
    std::vector<i64> values;
    std::optional<i64> eventual;

    Sequence() = default;
    Sequence(std::vector<i64> v) : values(std::move(v)) {}
    Sequence(std::vector<i64> v, i64 ev) : values(std::move(v)), eventual(ev) {}

    i64 at(int i) const {
        if (i < 0) return 0;
        if (i < static_cast<int>(values.size())) return values[i];
        return eventual.value_or(0);
    }
    int listed_size() const { return static_cast<int>(values.size()); }
    // First index from which the sequence is constant (listed tail collapsed).
    int stable_from() const;
    bool all_nonnegative() const;
    bool operator==(const Sequence& o) const;
    std::string str() const;
};

using OSequence = Sequence;

// C(n, k) with overflow guard; throws std::overflow_error past i64 range.
i64 binom(i64 n, i64 k);

// The i-binomial (Macaulay) expansion of a positive integer:
// a = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j) with
// m_i > m_{i-1} > ... > m_j >= j >= 1.
struct BinomialExpansion {
    // (top, bottom) pairs, bottoms strictly decreasing.
    std::vector<std::pair<i64, i64>> terms;
    i64 value() const;
    std::string str() const;
};

BinomialExpansion binomial_expansion(i64 a, i64 i);

// a^{<i>}: each term C(m,k) of the expansion shifted to C(m+1, k+1).
// By convention 0^{<i>} = 0.
i64 macaulay_bound(i64 a, i64 i);

struct OSequenceVerdict {
    bool pass;
    int violating_degree; // meaningful when !pass: first degree whose value
                          // is negative, breaks the leading 1, or exceeds the
                          // Macaulay bound from its predecessor
    std::string reason;
};

OSequenceVerdict is_o_sequence(const Sequence& s);

// k-fold first difference, with the convention a_{-1} = 0.
Sequence difference(const Sequence& s, int k = 1);

// Inverse of difference (partial sums).  Requires the input to be eventually
// zero (finite or eventual == 0); the result is eventually constant at the
// total sum.
Sequence accumulate(const Sequence& s, int k = 1);

// Partial sum of s over degrees 0..i.
i64 prefix_sum_at(const Sequence& s, int i);

// Pointwise minimum with e.  For a non-decreasing H that reaches e the result
// is eventually constant at e; if H stays below e it is returned unchanged.
Sequence truncate_hf(const Sequence& h, i64 e);

// Feasibility of an h-vector for the Weak Lefschetz Property: h must be a
// unimodal O-sequence whose positive first-difference part is again an
// O-sequence.
bool wlp_feasible(const Sequence& h);

} // namespace bettipair

#endif
