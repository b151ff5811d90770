#ifndef BETTIPAIR_CONSTRUCTION_HPP
#define BETTIPAIR_CONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bettipair/betti_ops.hpp"
#include "bettipair/invariants.hpp"
#include "bettipair/koszul.hpp"
#include "bettipair/lifting.hpp"
#include "bettipair/monomial_ideal.hpp"
#include "bettipair/wlp.hpp"

namespace bettipair {

struct InputShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PlateauTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct KeyAssumptionViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TailNotAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDifferentiableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CiOverrideInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RegularSequenceRetryExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationSamplingExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstraintCheckFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The three-row difference table: Delta H against the complete-intersection
// row, with the e-row read off at its degree shift (degree of e_0).
struct DifferenceTable {
    Sequence delta_h;  // untruncated plateau form, eventually d
    Sequence delta_ci; // eventually a*b (2s for the default type (2,s))
    Sequence e_row;    // shifted; eventually d - a*b
    Sequence e_prime;  // finite: e_i for i <= b-1, then 0
    int shift = 2;     // table degree of e_0
    std::string render() const;
};

struct AnalyzeResult {
    ConstructionInvariants inv;
    DifferenceTable table;
    Sequence delta_h_bar; // finite first difference of the target (with tail)
    Sequence h_bar;       // the target Hilbert function, eventually |Z|
};

// Validates an h-vector first difference against the construction's
// hypotheses and builds the difference table.  A trailing run that ends at
// the plateau value means "the plateau continues"; an explicit drop pins
// the exact shape, whose plateau must then reach degree s+1.
AnalyzeResult analyze(const Sequence& delta_h,
                      std::optional<std::pair<i64, i64>> ci_override = std::nullopt);

struct ZsideBuild {
    MonomialIdeal curve_ideal_2v; // lex ideal of the curve h-vector
    LinesUnion curve;             // d lines, ACM prefixes
    PointSet points;
    Sequence hilbert;
};

struct ZprimeBuild {
    MonomialIdeal jprime;
    PointSet yprime;
    Polynomial F, Q;
    std::array<i64, 4> q_factor1, q_factor2;
    LinesUnion v_lines; // the 2s lines of V(F,Q)
    std::vector<Polynomial> iprime_gens;
    PointSet points;
    Sequence hilbert;
    i64 iprime_mingens_s2 = 0; // minimal generators of I' in degree s+2
};

struct BuildConfig {
    i64 prime = 32003;
    std::uint64_t seed = 0;
    int sample_attempts = 25;
    int wlp_trials = 3;
};

ZsideBuild build_z(const AnalyzeResult& a, const BuildConfig& cfg);
ZprimeBuild build_zprime(const AnalyzeResult& a, const BuildConfig& cfg);

struct NamedCheck {
    std::string name;
    bool pass;
    std::string details;
};

struct WitnessPair {
    AnalyzeResult analysis;
    BuildConfig config;
    ZsideBuild z;
    ZprimeBuild zprime;
    BettiDiagram betti_z;
    BettiDiagram betti_zprime;
    WlpReport wlp_z;
    WlpReport wlp_zprime;
    IncomparabilityVerdict verdict;
    std::vector<NamedCheck> checks;
    bool all_checks_pass = false;

    int betti_window = 0;
};

// The full pipeline: both witnesses, Betti diagrams via Koszul homology,
// predicted constraint checks, WLP reports, incomparability verdict.
WitnessPair build_witness_pair(const Sequence& delta_h, const BuildConfig& cfg);

} // namespace bettipair

#endif
