#ifndef BETTIPAIR_LIFTING_HPP
#define BETTIPAIR_LIFTING_HPP

#include <array>
#include <string>
#include <vector>

#include "bettipair/monomial_ideal.hpp"
#include "bettipair/poly.hpp"

namespace bettipair {

// Point of P^3 with first coordinate normalized to 1 (nothing we build or
// sample lies on the plane x0 = 0).
struct PointP3 {
    std::array<i64, 4> c{1, 0, 0, 0};
    bool operator==(const PointP3& o) const { return c == o.c; }
    bool operator<(const PointP3& o) const { return c < o.c; }
    std::string str() const;
};

enum class PointProvenance { Lifted, SampledOnLine };

struct PointSet {
    std::vector<PointP3> points;
    std::vector<PointProvenance> provenance;
    std::vector<int> line_index; // -1 for lifted points

    int size() const { return static_cast<int>(points.size()); }
    void add(const PointP3& p, PointProvenance prov, int line = -1) {
        points.push_back(p);
        provenance.push_back(prov);
        line_index.push_back(line);
    }
    bool contains(const PointP3& p) const {
        for (const auto& q : points)
            if (q == p) return true;
        return false;
    }
    int lifted_count() const;
    int sampled_count() const;
};

// Line in P^3, cut out by two independent linear forms, with the rational
// parametrization  v -> base + v * dir  (base has x0 = 1, dir has x0 = 0, so
// every parameter value gives an affine point).
struct Line {
    std::array<i64, 4> form_a;
    std::array<i64, 4> form_b;
    std::array<i64, 4> base;
    std::array<i64, 4> dir;

    PointP3 point_at(const PrimeField& F, i64 v) const {
        PointP3 p;
        for (int k = 0; k < 4; ++k) p.c[k] = F.add(F.reduce(base[k]), F.mul(F.reduce(v), F.reduce(dir[k])));
        return p;
    }
    bool operator==(const Line& o) const { return form_a == o.form_a && form_b == o.form_b; }
};

struct LinesUnion {
    std::vector<Line> lines;
    int size() const { return static_cast<int>(lines.size()); }
};

// Lifting scalars: variable index (1..3 in R) and exponent slot -> scalar.
// The default c_i(j) = j keeps coordinates tiny and distinct mod p.
struct LiftScalars {
    i64 at(int /*var*/, int j) const { return j; }
};

// One point [1 : c1(a) : c2(b) : c3(c)] per standard monomial x1^a x2^b x3^c
// of an Artinian ideal in 3 variables.
PointSet lift_points(const MonomialIdeal& J, const LiftScalars& scalars = {});

// Distraction of a single monomial (in S-variables var_offset..var_offset+n)
// to a product of linear forms in R = k[x0..x3].
Polynomial lift_generator(const PrimeField& F, const Monomial& m,
                          const LiftScalars& scalars = {}, int var_offset = 1);

// Lifted generating set of the distracted ideal in R.
std::vector<Polynomial> lift_ideal_generators(const PrimeField& F, const MonomialIdeal& J,
                                              const LiftScalars& scalars = {}, int var_offset = 1);

// Distraction of an Artinian ideal in the variables x2, x3 to a union of
// lines {x2 = c(a) x0, x3 = c(b) x0}, one per standard monomial x2^a x3^b.
// Lines are ordered by (total degree, lex) of their monomials, which makes
// every prefix the distraction of a smaller monomial ideal, hence ACM.
LinesUnion distract_lines(const PrimeField& F, const MonomialIdeal& J2,
                          const LiftScalars& scalars = {});

LinesUnion prefix_union(const LinesUnion& u, int i);

// Generators in R of the ideal of the first `count` lines of a distraction
// (the complement monomial ideal of the prefix order ideal, distracted).
std::vector<Polynomial> prefix_union_generators(const PrimeField& F, const MonomialIdeal& J2,
                                                int count, const LiftScalars& scalars = {});

} // namespace bettipair

#endif
