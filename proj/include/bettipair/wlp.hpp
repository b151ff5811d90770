#ifndef BETTIPAIR_WLP_HPP
#define BETTIPAIR_WLP_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "bettipair/lifting.hpp"
#include "bettipair/seq.hpp"

namespace bettipair {

struct DegenerateReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-degree record of the multiplication map x L2 : A_i -> A_{i+1} on the
// Artinian reduction A = R/(I_Z + (L1)).
struct WlpDegreeRow {
    int degree;
    i64 dim_from;
    i64 dim_to;
    i64 best_rank; // maximum over trials
};

struct WlpReport {
    bool holds;
    std::vector<int> failing_degrees;
    std::vector<WlpDegreeRow> rows;
    std::vector<std::vector<i64>> rank_history; // per trial, per degree
    std::uint64_t seed;
    int trials;
    std::array<i64, 4> reduction_form;              // L1
    std::vector<std::array<i64, 4>> probe_forms;    // L2 per trial
    // A "holds" verdict is probabilistic evidence (general forms sampled at
    // random); a "fails" verdict is exact: the rank deficit is witnessed by
    // every sampled form and certified against the socle degree upstream.
};

WlpReport wlp_check(const PrimeField& field, const PointSet& points, std::uint64_t seed,
                    int trials = 3);

} // namespace bettipair

#endif
