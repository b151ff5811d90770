#include "bettipair/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace bettipair {

std::vector<Monomial> MonomialIdeal::standard_monomials(int degree) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(nvars, degree))
        if (!contains(m)) out.push_back(m);
    return out;
}

bool MonomialIdeal::is_artinian() const {
    // Artinian iff each variable appears as a pure power of some generator.
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : gens) {
            bool pure = g.e[v] > 0;
            for (int w = 0; w < nvars && pure; ++w)
                if (w != v && g.e[w] > 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

MonomialIdeal lex_ideal(const Sequence& h, int nvars) {
    auto verdict = is_o_sequence(h);
    if (!verdict.pass)
        throw NotOSequenceError("lex_ideal: input is not an O-sequence (" + verdict.reason + ")");
    if (h.at(1) > nvars) {
        std::ostringstream os;
        os << "lex_ideal: h_1 = " << h.at(1) << " needs more than " << nvars << " variables";
        throw TooManyVariablesError(os.str());
    }

    MonomialIdeal J;
    J.nvars = nvars;
    // Generators are produced for the listed degrees only: an Artinian
    // target must list its trailing 0, and an eventually-constant target is
    // closed once the quotient growth turns maximal (checked below).
    int last = h.listed_size() - 1;
    for (int d = 1; d <= last; ++d) {
        i64 want_ideal = dim_poly_ring(nvars, d) - h.at(d);
        std::vector<Monomial> in_ideal, standard;
        for (const auto& m : monomials_of_degree(nvars, d))
            (J.contains(m) ? in_ideal : standard).push_back(m);
        i64 have = static_cast<i64>(in_ideal.size());
        if (want_ideal < have)
            throw NotOSequenceError("lex_ideal: required ideal dimension below inherited span in degree " +
                                    std::to_string(d));
        // take lex-largest standard monomials as new generators
        for (const auto& m : standard) {
            if (have >= want_ideal) break;
            J.gens.push_back(m);
            ++have;
        }
        if (have < want_ideal)
            throw NotOSequenceError("lex_ideal: Hilbert value unreachable in degree " + std::to_string(d));
    }
    if (h.eventual.value_or(0) > 0) {
        // stabilized tail must need no further generators one degree past
        // the listed entries
        int d = last + 1;
        if (graded_dimension(J, d) != h.at(d))
            throw NotOSequenceError("lex_ideal: eventual tail does not stabilize");
    }
    std::sort(J.gens.begin(), J.gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.lex_greater(b); });
    return J;
}

i64 graded_dimension(const MonomialIdeal& J, int d) {
    if (d < 0) return 0;
    i64 n = 0;
    for (const auto& m : monomials_of_degree(J.nvars, d))
        if (!J.contains(m)) ++n;
    return n;
}

bool is_stable(const MonomialIdeal& J) {
    for (const auto& g : J.gens)
        for (int v = 1; v < J.nvars; ++v) {
            if (g.e[v] == 0) continue;
            for (int w = 0; w < v; ++w) {
                Monomial m = g;
                --m.e[v];
                ++m.e[w];
                if (!J.contains(m)) return false;
            }
        }
    return true;
}

BettiDiagram ek_betti(const MonomialIdeal& J) {
    if (!is_stable(J)) throw NotStableError("ek_betti: ideal is not stable");
    BettiDiagram b;
    b.ncols = J.nvars + 1;
    b.set(0, 0, 1);
    for (const auto& g : J.gens) {
        int mi = g.max_index(); // 0-based; C(mi, i) nonzero for i <= mi
        int d = g.degree();
        for (int i = 0; i <= mi; ++i) b.add(i + 1, d + i, binom(mi, i));
    }
    return b;
}

std::vector<int> socle_degrees(const MonomialIdeal& J) {
    // Window covering all candidate degrees: beyond quotient stabilization a
    // standard monomial times the last variable stays standard.
    int bound = J.max_gen_degree() + 1;
    std::vector<int> out;
    for (int d = 0; d <= bound; ++d)
        for (const auto& m : J.standard_monomials(d)) {
            bool socle = true;
            for (int v = 0; v < J.nvars && socle; ++v)
                if (!J.contains(m.times_var(v))) socle = false;
            if (socle) out.push_back(d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Sequence quotient_hilbert(const MonomialIdeal& J, int upto) {
    Sequence h;
    for (int d = 0; d <= upto; ++d) h.values.push_back(graded_dimension(J, d));
    if (upto >= 1 && upto >= J.max_gen_degree() && h.values[upto] == h.values[upto - 1]) {
        // constant past the last generator degree persists forever
        i64 c = h.values[upto];
        if (c == 0 || graded_dimension(J, upto + 1) == c) h.eventual = c;
    }
    return h;
}

} // namespace bettipair
