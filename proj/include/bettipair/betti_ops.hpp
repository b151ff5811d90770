#ifndef BETTIPAIR_BETTI_OPS_HPP
#define BETTIPAIR_BETTI_OPS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bettipair/betti_diagram.hpp"
#include "bettipair/invariants.hpp"

namespace bettipair {

struct HilbertMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entries the construction pins in a witness diagram: exact values and
// forced zeros ("*" cells stay free).
struct DiagramConstraints {
    std::vector<std::pair<std::pair<int, int>, i64>> required_values;
    std::vector<std::pair<int, int>> required_zeros;
};

struct ConstraintCheckResult {
    bool pass = true;
    std::vector<std::string> violations;
};

// Predicted constraints for the two sides of a witness pair.
//
// Z side (truncation of an ACM curve with regularity t+1):
//   beta_{1,s+2} = d - b_{s+2}; rows t+1..s vanish; column 3 vanishes in all
//   rows up to s (the curve has projective dimension 2).
// Z' side (liaison-addition scheme):
//   beta_{3,s+2} = 1; row s vanishes; beta_{1,s+2} = d - 1 - b_{s+2}.
std::pair<DiagramConstraints, DiagramConstraints> predict_constraints(
    const ConstructionInvariants& inv);

ConstraintCheckResult check_constraints(const BettiDiagram& b, const DiagramConstraints& c);

// Consecutive cancellation: subtract c_{i,j} >= 0 from both beta_{i,j} and
// beta_{i+1,j}.  Per internal degree the multiplicities are forced by a
// telescoping scan, so reachability is decided exactly.
struct CancellationCertificate {
    // (i, j) -> multiplicity cancelled between columns i and i+1
    std::vector<std::pair<std::pair<int, int>, i64>> multiplicities;
};

std::optional<CancellationCertificate> cancellation_reachable(const BettiDiagram& from,
                                                              const BettiDiagram& to);

// Strong incomparability: no diagram is reachable from both inputs.  The
// search is per internal degree over bounded multiplicity vectors and exact.
// A common numerical descendant does NOT prove the diagrams comparable (no
// ideal needs to realize it), so the negative verdict names the candidate
// and leaves the mathematical question open.
struct IncomparabilityVerdict {
    bool strongly_incomparable;
    std::optional<BettiDiagram> common_descendant;
};

IncomparabilityVerdict strongly_incomparable(const BettiDiagram& b1, const BettiDiagram& b2);

} // namespace bettipair

#endif
