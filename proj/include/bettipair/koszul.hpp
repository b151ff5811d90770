#ifndef BETTIPAIR_KOSZUL_HPP
#define BETTIPAIR_KOSZUL_HPP

#include "bettipair/betti_diagram.hpp"
#include "bettipair/graded_model.hpp"

namespace bettipair {

struct WindowTooNarrowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graded Betti numbers beta_{i,j} = dim Tor_i(R/I, k)_j, computed as Koszul
// homology on the four variables: the (i, j) strand is
//   Lambda^{i+1} (x) M_{j-i-1}  ->  Lambda^i (x) M_{j-i}  ->  Lambda^{i-1} (x) M_{j-i+1}
// and beta is dim ker minus rank of the incoming map.  The model must cover
// degrees up to max_internal_degree + 1.
BettiDiagram koszul_betti(const GradedModel& model, int max_internal_degree);

} // namespace bettipair

#endif
