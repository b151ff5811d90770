#ifndef BETTIPAIR_MONOMIAL_IDEAL_HPP
#define BETTIPAIR_MONOMIAL_IDEAL_HPP

#include <stdexcept>
#include <vector>

#include "bettipair/betti_diagram.hpp"
#include "bettipair/poly.hpp"
#include "bettipair/seq.hpp"

namespace bettipair {

struct NotOSequenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooManyVariablesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotStableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotArtinianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomial ideal by its minimal generators, lex-sorted descending.
// Variables are generic indices 0..nvars-1; in the construction they stand
// for x1,x2,x3 (nvars = 3) or x2,x3 (nvars = 2).
struct MonomialIdeal {
    int nvars = 3;
    std::vector<Monomial> gens;

    bool contains(const Monomial& m) const {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    }
    // Standard (non-ideal) monomials of the given degree, lex-descending.
    std::vector<Monomial> standard_monomials(int degree) const;
    bool is_artinian() const; // finite-dimensional quotient
    int max_gen_degree() const {
        int d = 0;
        for (const auto& g : gens) d = std::max(d, g.degree());
        return d;
    }
};

// Lex-segment ideal with quotient Hilbert function h.  Requires h to be an
// O-sequence realizable in nvars variables; an eventually-constant h closes
// the generator list once the quotient growth turns maximal.
MonomialIdeal lex_ideal(const Sequence& h, int nvars);

// dim (S/J)_d
i64 graded_dimension(const MonomialIdeal& J, int d);

// Borel-fixed test: every swap of a dividing variable for an earlier one
// stays in the ideal.  (Checking minimal generators suffices.)
bool is_stable(const MonomialIdeal& J);

// Eliahou-Kervaire graded Betti numbers of the quotient S/J for a stable J:
// beta_{i+1, deg u + i} += C(max_index(u), i) over minimal generators u,
// with beta_{0,0} = 1 prepended.
BettiDiagram ek_betti(const MonomialIdeal& J);

// Degrees (with multiplicity) of standard monomials annihilated by every
// variable.  For ideals with a constant positive Hilbert tail the socle is
// computed on the finite part; beyond stabilization no monomial qualifies.
std::vector<int> socle_degrees(const MonomialIdeal& J);

// Quotient Hilbert function up to `upto`, with the eventual tail marked when
// it has stabilized.
Sequence quotient_hilbert(const MonomialIdeal& J, int upto);

} // namespace bettipair

#endif
