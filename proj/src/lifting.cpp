#include "bettipair/lifting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bettipair {

std::string PointP3::str() const {
    std::ostringstream os;
    os << '[' << c[0] << ':' << c[1] << ':' << c[2] << ':' << c[3] << ']';
    return os.str();
}

int PointSet::lifted_count() const {
    int n = 0;
    for (auto p : provenance)
        if (p == PointProvenance::Lifted) ++n;
    return n;
}

int PointSet::sampled_count() const {
    return size() - lifted_count();
}

namespace {

// All standard monomials of an Artinian ideal, by (degree, lex-descending).
std::vector<Monomial> all_standard_monomials(const MonomialIdeal& J) {
    if (!J.is_artinian()) throw NotArtinianError("ideal has an infinite quotient");
    std::vector<Monomial> out;
    for (int d = 0;; ++d) {
        auto std_d = J.standard_monomials(d);
        if (std_d.empty()) break;
        out.insert(out.end(), std_d.begin(), std_d.end());
    }
    return out;
}

} // namespace

PointSet lift_points(const MonomialIdeal& J, const LiftScalars& scalars) {
    if (J.nvars != 3) throw std::invalid_argument("lift_points expects a 3-variable ideal");
    PointSet out;
    for (const auto& m : all_standard_monomials(J)) {
        PointP3 p;
        p.c = {1, scalars.at(1, m.e[0]), scalars.at(2, m.e[1]), scalars.at(3, m.e[2])};
        out.add(p, PointProvenance::Lifted);
    }
    return out;
}

Polynomial lift_generator(const PrimeField& F, const Monomial& m, const LiftScalars& scalars,
                          int var_offset) {
    Monomial one = Monomial::with_vars(4);
    Polynomial out = poly_from_monomial(one, 1);
    for (int v = 0; v < m.nvars; ++v) {
        int rvar = v + var_offset;
        for (int j = 0; j < m.e[v]; ++j) {
            std::array<i64, 4> coeffs{0, 0, 0, 0};
            coeffs[rvar] = 1;
            coeffs[0] = F.neg(F.reduce(scalars.at(rvar, j)));
            out = poly_mul(F, out, linear_form(F, coeffs));
        }
    }
    return out;
}

std::vector<Polynomial> lift_ideal_generators(const PrimeField& F, const MonomialIdeal& J,
                                              const LiftScalars& scalars, int var_offset) {
    std::vector<Polynomial> out;
    out.reserve(J.gens.size());
    for (const auto& g : J.gens) out.push_back(lift_generator(F, g, scalars, var_offset));
    return out;
}

namespace {

Line line_for_monomial(const PrimeField& F, const Monomial& m, const LiftScalars& scalars) {
    i64 alpha = F.reduce(scalars.at(2, m.e[0]));
    i64 beta = F.reduce(scalars.at(3, m.e[1]));
    Line l;
    l.form_a = {F.neg(alpha), 0, 1, 0}; // x2 - alpha x0
    l.form_b = {F.neg(beta), 0, 0, 1};  // x3 - beta x0
    l.base = {1, 0, alpha, beta};
    l.dir = {0, 1, 0, 0};
    return l;
}

} // namespace

LinesUnion distract_lines(const PrimeField& F, const MonomialIdeal& J2, const LiftScalars& scalars) {
    if (J2.nvars != 2) throw std::invalid_argument("distract_lines expects a 2-variable ideal");
    LinesUnion u;
    for (const auto& m : all_standard_monomials(J2)) u.lines.push_back(line_for_monomial(F, m, scalars));
    return u;
}

LinesUnion prefix_union(const LinesUnion& u, int i) {
    if (i < 1 || i > u.size()) throw std::out_of_range("prefix_union index out of range");
    LinesUnion out;
    out.lines.assign(u.lines.begin(), u.lines.begin() + i);
    return out;
}

std::vector<Polynomial> prefix_union_generators(const PrimeField& F, const MonomialIdeal& J2,
                                                int count, const LiftScalars& scalars) {
    auto std_monos = all_standard_monomials(J2);
    if (count < 1 || count > static_cast<int>(std_monos.size()))
        throw std::out_of_range("prefix size out of range");
    std_monos.resize(count);
    auto in_prefix = [&](const Monomial& m) {
        return std::find(std_monos.begin(), std_monos.end(), m) != std_monos.end();
    };
    // complement of the prefix order ideal, minimally generated
    MonomialIdeal comp;
    comp.nvars = 2;
    int top = 0;
    for (const auto& m : std_monos) top = std::max(top, m.degree());
    for (int d = 0; d <= top + 1; ++d)
        for (const auto& m : monomials_of_degree(2, d))
            if (!in_prefix(m) && !comp.contains(m)) comp.gens.push_back(m);
    return lift_ideal_generators(F, comp, scalars, 2);
}

} // namespace bettipair
