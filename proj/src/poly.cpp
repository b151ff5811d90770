#include "bettipair/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "bettipair/seq.hpp"

namespace bettipair {

std::string Monomial::str(int first_var_name) const {
    if (degree() == 0) return "1";
    std::ostringstream os;
    for (int i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        os << 'x' << (first_var_name + i);
        if (e[i] > 1) os << '^' << e[i];
    }
    return os.str();
}

namespace {

void enumerate_rec(int nvars, int var, int remaining, Monomial& cur,
                   std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.e[var] = remaining;
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.e[var] = k;
        enumerate_rec(nvars, var + 1, remaining - k, cur, out);
    }
    cur.e[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::with_vars(nvars);
    enumerate_rec(nvars, 0, degree, cur, out);
    return out;
}

i64 dim_poly_ring(int nvars, int degree) {
    if (degree < 0) return 0;
    return binom(degree + nvars - 1, nvars - 1);
}

std::string Polynomial::str(int first_var_name) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || m.degree() == 0) os << c;
        if (m.degree() > 0) {
            if (c != 1) os << '*';
            os << m.str(first_var_name);
        }
    }
    return os.str();
}

Polynomial poly_from_monomial(const Monomial& m, i64 coeff) {
    Polynomial f;
    f.nvars = m.nvars;
    if (coeff != 0) f.terms[m] = coeff;
    return f;
}

Polynomial poly_add(const PrimeField& F, const Polynomial& f, const Polynomial& g) {
    if (f.nvars != g.nvars && !f.is_zero() && !g.is_zero())
        throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out = f;
    out.nvars = f.is_zero() ? g.nvars : f.nvars;
    for (const auto& [m, c] : g.terms) {
        i64 v = F.add(F.reduce(out.terms.count(m) ? out.terms[m] : 0), F.reduce(c));
        if (v == 0)
            out.terms.erase(m);
        else
            out.terms[m] = v;
    }
    return out;
}

Polynomial poly_mul(const PrimeField& F, const Polynomial& f, const Polynomial& g) {
    if (f.nvars != g.nvars && !f.is_zero() && !g.is_zero())
        throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out;
    out.nvars = f.nvars;
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) {
            Monomial m = mf * mg;
            i64 v = F.add(out.terms.count(m) ? out.terms[m] : 0, F.mul(F.reduce(cf), F.reduce(cg)));
            if (v == 0)
                out.terms.erase(m);
            else
                out.terms[m] = v;
        }
    return out;
}

i64 poly_eval(const PrimeField& F, const Polynomial& f, const std::array<i64, 4>& point) {
    i64 acc = 0;
    for (const auto& [m, c] : f.terms) {
        i64 t = F.reduce(c);
        for (int v = 0; v < f.nvars; ++v)
            for (int k = 0; k < m.e[v]; ++k) t = F.mul(t, F.reduce(point[v]));
        acc = F.add(acc, t);
    }
    return acc;
}

Polynomial linear_form(const PrimeField& F, const std::array<i64, 4>& coeffs) {
    Polynomial f;
    f.nvars = 4;
    for (int v = 0; v < 4; ++v) {
        if (F.reduce(coeffs[v]) == 0) continue;
        Monomial m = Monomial::with_vars(4);
        m.e[v] = 1;
        f.terms[m] = F.reduce(coeffs[v]);
    }
    return f;
}

i64 eval_linear(const PrimeField& F, const std::array<i64, 4>& coeffs,
                const std::array<i64, 4>& point) {
    i64 acc = 0;
    for (int v = 0; v < 4; ++v) acc = F.add(acc, F.mul(F.reduce(coeffs[v]), F.reduce(point[v])));
    return acc;
}

} // namespace bettipair
