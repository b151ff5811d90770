#ifndef BETTIPAIR_INVARIANTS_HPP
#define BETTIPAIR_INVARIANTS_HPP

#include <utility>
#include <vector>

#include "bettipair/seq.hpp"

namespace bettipair {

// Numerical invariants of an admissible first difference
//   Delta H = (1, 3, b_2, ..., b_{t-1}, d, ..., d, b_{s+2}, ..., b_r, 0):
// d is the plateau value, t the first degree reaching it, s = floor((d-1)/2),
// and the tail lists the entries after degree s+1 (possibly empty).
struct ConstructionInvariants {
    i64 d = 0;
    int t = 0;
    int s = 0;
    bool d_even = false;
    std::pair<i64, i64> ci_type{2, 0}; // (2, s) by default
    std::vector<i64> tail;             // b_{s+2}, ..., b_r

    int last_plateau_degree() const { return s + 1; }
    int stabilization_degree() const { return s + 1 + static_cast<int>(tail.size()); }
    i64 tail_first() const { return tail.empty() ? 0 : tail.front(); }
};

} // namespace bettipair

#endif
