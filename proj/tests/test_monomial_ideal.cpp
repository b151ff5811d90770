#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bettipair/monomial_ideal.hpp"
#include "bettipair/rng.hpp"

using namespace bettipair;

namespace {

// variables x1,x2,x3 are monomial indices 0,1,2
Monomial mono3(int a, int b, int c) {
    Monomial m = Monomial::with_vars(3);
    m.e = {a, b, c, 0};
    return m;
}
Monomial mono2(int a, int b) {
    Monomial m = Monomial::with_vars(2);
    m.e = {a, b, 0, 0};
    return m;
}

Sequence random_hilbert(Rng& rng, int nvars) {
    Sequence s;
    s.values.push_back(1);
    s.values.push_back(1 + static_cast<i64>(rng.below(nvars)));
    for (int i = 2; i < 8; ++i) {
        i64 bound = std::min<i64>(macaulay_bound(s.values[i - 1], i - 1), 9);
        if (bound == 0) break;
        i64 next = static_cast<i64>(rng.below(static_cast<std::uint64_t>(bound) + 1));
        s.values.push_back(next);
        if (next == 0) break;
    }
    if (s.values.back() != 0) s.values.push_back(0);
    return s;
}

} // namespace

TEST_CASE("lex ideal of (1,2,2,1,1,0) in three variables") {
    MonomialIdeal J = lex_ideal(Sequence({1, 2, 2, 1, 1, 0}), 3);
    std::vector<Monomial> want{mono3(1, 0, 0), mono3(0, 2, 0), mono3(0, 1, 2), mono3(0, 0, 5)};
    REQUIRE(J.gens.size() == want.size());
    for (const auto& g : want)
        CHECK(std::find(J.gens.begin(), J.gens.end(), g) != J.gens.end());
    CHECK(J.is_artinian());
}

TEST_CASE("lex ideal of the full polynomial ring prefix is empty") {
    MonomialIdeal J = lex_ideal(Sequence({1, 3, 6, 10}), 3);
    CHECK(J.gens.empty());
}

TEST_CASE("lex ideal of (1,2,3,3,2,0) in two variables") {
    MonomialIdeal J = lex_ideal(Sequence({1, 2, 3, 3, 2, 0}), 2);
    std::vector<Monomial> want{mono2(3, 0), mono2(2, 2), mono2(1, 4), mono2(0, 5)};
    REQUIRE(J.gens.size() == want.size());
    for (const auto& g : want)
        CHECK(std::find(J.gens.begin(), J.gens.end(), g) != J.gens.end());
}

TEST_CASE("lex ideal rejects bad inputs") {
    CHECK_THROWS_AS(lex_ideal(Sequence({1, 2, 4}), 3), NotOSequenceError);
    CHECK_THROWS_AS(lex_ideal(Sequence({1, 4, 2, 0}), 3), TooManyVariablesError);
}

TEST_CASE("graded dimension fixtures") {
    MonomialIdeal empty;
    empty.nvars = 3;
    CHECK(graded_dimension(empty, 2) == 6);

    MonomialIdeal J = lex_ideal(Sequence({1, 2, 2, 1, 1, 0}), 3);
    CHECK(graded_dimension(J, 4) == 1); // only x3^4 survives

    MonomialIdeal whole;
    whole.nvars = 3;
    whole.gens = {mono3(1, 0, 0), mono3(0, 1, 0), mono3(0, 0, 1)};
    CHECK(graded_dimension(whole, 1) == 0);
}

TEST_CASE("stability") {
    MonomialIdeal J = lex_ideal(Sequence({1, 2, 2, 1, 1, 0}), 3);
    CHECK(is_stable(J));

    MonomialIdeal bad;
    bad.nvars = 3;
    bad.gens = {mono3(0, 2, 0)};
    CHECK(!is_stable(bad)); // x1 x2 is not in the ideal

    MonomialIdeal principal;
    principal.nvars = 3;
    principal.gens = {mono3(1, 0, 0)};
    CHECK(is_stable(principal));
}

TEST_CASE("Eliahou-Kervaire Betti numbers") {
    MonomialIdeal koszul;
    koszul.nvars = 3;
    koszul.gens = {mono3(1, 0, 0), mono3(0, 1, 0), mono3(0, 0, 1)};
    BettiDiagram b = ek_betti(koszul);
    CHECK(b.get(0, 0) == 1);
    CHECK(b.get(1, 1) == 3);
    CHECK(b.get(2, 2) == 3);
    CHECK(b.get(3, 3) == 1);
    CHECK(b.entries.size() == 4);

    MonomialIdeal J = lex_ideal(Sequence({1, 2, 2, 0}), 3); // {x1, x2^2, x2 x3^2, x3^3}
    BettiDiagram bj = ek_betti(J);
    CHECK(bj.get(1, 1) == 1);
    CHECK(bj.get(1, 2) == 1);
    CHECK(bj.get(1, 3) == 2);
    CHECK(bj.get(2, 3) == 1);
    CHECK(bj.get(2, 4) == 4);
    CHECK(bj.get(3, 5) == 2);
    // alternating-sum identity against the quotient Hilbert function
    CHECK(alternating_sum_matches(bj, quotient_hilbert(J, 8), 3, 8));

    MonomialIdeal principal;
    principal.nvars = 3;
    principal.gens = {mono3(2, 0, 0)};
    BettiDiagram bp = ek_betti(principal);
    CHECK(bp.get(0, 0) == 1);
    CHECK(bp.get(1, 2) == 1);
    CHECK(bp.entries.size() == 2);

    CHECK_THROWS_AS(ek_betti([] {
                        MonomialIdeal bad;
                        bad.nvars = 3;
                        bad.gens = {mono3(0, 2, 0)};
                        return bad;
                    }()),
                    NotStableError);
}

TEST_CASE("socle degrees") {
    MonomialIdeal J;
    J.nvars = 3;
    J.gens = {mono3(1, 0, 0), mono3(0, 2, 0), mono3(0, 1, 2), mono3(0, 0, 3)};
    CHECK(socle_degrees(J) == std::vector<int>{2, 2});

    MonomialIdeal m;
    m.nvars = 3;
    m.gens = {mono3(1, 0, 0), mono3(0, 1, 0), mono3(0, 0, 1)};
    CHECK(socle_degrees(m) == std::vector<int>{0});

    MonomialIdeal ci;
    ci.nvars = 3;
    ci.gens = {mono3(2, 0, 0), mono3(0, 2, 0), mono3(0, 0, 2)};
    CHECK(socle_degrees(ci) == std::vector<int>{3});
}

TEST_CASE("lex ideal reproduces its Hilbert function") {
    Rng rng(12345);
    int done = 0;
    while (done < 100) {
        int nvars = 2 + static_cast<int>(rng.below(2));
        Sequence h = random_hilbert(rng, nvars);
        MonomialIdeal J = lex_ideal(h, nvars);
        int upto = h.listed_size() + 3;
        for (int d = 0; d <= upto; ++d) CHECK(graded_dimension(J, d) == h.at(d));
        ++done;
    }
}

TEST_CASE("lex ideal with an eventually constant tail") {
    // e-row of the d = 11 construction: (1,2,2,1,1,1,...)
    Sequence h({1, 2, 2, 1, 1}, 1);
    MonomialIdeal J = lex_ideal(h, 3);
    CHECK(!J.is_artinian());
    for (int d = 0; d <= 9; ++d) CHECK(graded_dimension(J, d) == h.at(d));
    CHECK(quotient_hilbert(J, 8).eventual == 1);
}

TEST_CASE("EK alternating sums on random lex ideals") {
    Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        Sequence h = random_hilbert(rng, 3);
        MonomialIdeal J = lex_ideal(h, 3);
        REQUIRE(is_stable(J));
        BettiDiagram b = ek_betti(J);
        int upto = h.listed_size() + 3;
        CHECK(alternating_sum_matches(b, quotient_hilbert(J, upto), 3, upto));
    }
}
