#ifndef BETTIPAIR_POLY_HPP
#define BETTIPAIR_POLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bettipair/fp.hpp"

namespace bettipair {

// Monomial with a fixed ambient arity (2, 3 or 4 variables).  Variables are
// indexed 0..nvars-1 and ordered x_0 > x_1 > ... in the lex order; callers
// attach the intended names (x1,x2,x3 for S, x0..x3 for R).
struct Monomial {
    std::array<int, 4> e{0, 0, 0, 0};
    int nvars = 4;

    Monomial() = default;
    Monomial(std::initializer_list<int> exps) {
        nvars = static_cast<int>(exps.size());
        int i = 0;
        for (int v : exps) e[i++] = v;
    }
    static Monomial with_vars(int nvars) {
        Monomial m;
        m.nvars = nvars;
        return m;
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (int i = 0; i < nvars; ++i) m.e[i] += o.e[i];
        return m;
    }
    Monomial times_var(int v) const {
        Monomial m = *this;
        ++m.e[v];
        return m;
    }
    // largest variable index with positive exponent, or -1 for 1
    int max_index() const {
        for (int i = nvars - 1; i >= 0; --i)
            if (e[i] > 0) return i;
        return -1;
    }
    bool operator==(const Monomial& o) const { return nvars == o.nvars && e == o.e; }

    // lex with x_0 > x_1 > ...: larger exponent on the earliest differing
    // variable wins
    bool lex_greater(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] != o.e[i]) return e[i] > o.e[i];
        return false;
    }
    std::string str(int first_var_name = 0) const;
};

struct MonoLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_greater(b); }
};

// All monomials of the given degree, lex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

i64 dim_poly_ring(int nvars, int degree); // C(degree + nvars - 1, nvars - 1)

// Homogeneous polynomial: monomial -> nonzero coefficient in [1, p).
struct Polynomial {
    int nvars = 4;
    std::map<Monomial, i64, MonoLexGreater> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : terms.begin()->first.degree(); }
    std::string str(int first_var_name = 0) const;
};

Polynomial poly_from_monomial(const Monomial& m, i64 coeff = 1);
Polynomial poly_add(const PrimeField& F, const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const PrimeField& F, const Polynomial& f, const Polynomial& g);
i64 poly_eval(const PrimeField& F, const Polynomial& f, const std::array<i64, 4>& point);

// Linear form c . x as a polynomial in 4 variables.
Polynomial linear_form(const PrimeField& F, const std::array<i64, 4>& coeffs);
i64 eval_linear(const PrimeField& F, const std::array<i64, 4>& coeffs,
                const std::array<i64, 4>& point);

} // namespace bettipair

#endif
