#ifndef BETTIPAIR_BETTI_DIAGRAM_HPP
#define BETTIPAIR_BETTI_DIAGRAM_HPP

#include <map>
#include <string>
#include <utility>

#include "bettipair/seq.hpp"

namespace bettipair {

// Graded Betti numbers of a cyclic quotient R/I, stored sparsely:
// (homological index i, internal degree j) -> multiplicity.  Diagrams are
// displayed the macaulay way, one row per r = j - i.
struct BettiDiagram {
    std::map<std::pair<int, int>, i64> entries;
    int ncols = 4; // columns 0..ncols-1 (projective dimension bound + 1)

    i64 get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, int j, i64 v) {
        if (v == 0) return;
        auto key = std::make_pair(i, j);
        entries[key] += v;
        if (entries[key] == 0) entries.erase(key);
    }
    void set(int i, int j, i64 v) {
        if (v == 0)
            entries.erase({i, j});
        else
            entries[{i, j}] = v;
    }
    int max_degree() const {
        int m = 0;
        for (const auto& [k, v] : entries) m = std::max(m, k.second);
        return m;
    }
    int max_row() const {
        int m = 0;
        for (const auto& [k, v] : entries) m = std::max(m, k.second - k.first);
        return m;
    }
    bool operator==(const BettiDiagram& o) const { return entries == o.entries; }

    // Column sums with alternating signs give the K-polynomial coefficients
    // K_j = sum_i (-1)^i beta_{i,j}.
    std::map<int, i64> k_polynomial() const;

    // Classic computer-algebra table: rows labelled r, entry beta_{i, i+r},
    // '-' for zero.
    std::string render() const;
};

// K-polynomial consistency: h(d) = sum_j K_j * C(d - j + nvars - 1, nvars - 1)
// for all d in [0, upto].  This ties a diagram to the Hilbert function of the
// module it came from.
bool alternating_sum_matches(const BettiDiagram& b, const Sequence& hf, int nvars, int upto);

// Hilbert function determined by the K-polynomial (used for cross-checks).
Sequence hilbert_from_k_polynomial(const BettiDiagram& b, int nvars, int upto);

} // namespace bettipair

#endif
