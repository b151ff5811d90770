#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bettipair/certificate.hpp"
#include "bettipair/construction.hpp"
#include "bettipair/graded_model.hpp"
#include "bettipair/rng.hpp"

using namespace bettipair;

namespace {

// admissible plateau first differences: Delta^2 H = (1, 2, c_2, ..., c_t)
// with O-sequence growth, c_i >= 1, and t <= s - 1 for the resulting d
Sequence random_admissible(Rng& rng) {
    for (;;) {
        std::vector<i64> c{1, 2};
        int t = 2 + static_cast<int>(rng.below(5));
        bool ok = true;
        for (int i = 2; i <= t; ++i) {
            i64 bound = std::min<i64>(macaulay_bound(c[i - 1], i - 1), 6);
            if (bound < 1) { ok = false; break; }
            c.push_back(1 + static_cast<i64>(rng.below(static_cast<std::uint64_t>(bound))));
        }
        if (!ok) continue;
        i64 d = 0;
        for (i64 v : c) d += v;
        int s = static_cast<int>((d - 1) / 2);
        if (d <= 3 || t > s - 1) continue;
        Sequence dh = accumulate(Sequence(c));
        dh.values.resize(t + 1); // ends at the plateau value d
        dh.eventual.reset();
        return dh;
    }
}

} // namespace

TEST_CASE("analyze the d = 17 example") {
    AnalyzeResult a = analyze(Sequence({1, 3, 6, 10, 14, 16, 17, 17}));
    CHECK(a.inv.d == 17);
    CHECK(a.inv.t == 6);
    CHECK(a.inv.s == 8);
    CHECK(!a.inv.d_even);
    CHECK(a.inv.tail.empty());
    CHECK(a.h_bar.eventual == 118);
    CHECK(a.h_bar.at(9) == 118);
    CHECK(a.h_bar.at(4) == 34);
}

TEST_CASE("analyze the d = 29 example") {
    AnalyzeResult a = analyze(Sequence({1, 3, 6, 10, 15, 19, 23, 26, 27, 28, 29, 29}));
    CHECK(a.inv.t == 10);
    CHECK(a.inv.s == 14);
    Sequence want({1, 3, 6, 8, 10, 11, 10, 9, 8, 6, 4, 2, 1, 1}, 1);
    for (int i = 0; i <= 14; ++i) CHECK(a.table.e_row.at(i) == want.at(i));
}

TEST_CASE("analyze with CI override (4,7) rejects the e-row") {
    Sequence dh({1, 3, 6, 10, 15, 19, 23, 26, 27, 28, 29, 29});
    CHECK_THROWS_AS(analyze(dh, std::make_pair<i64, i64>(4, 7)), NotOSequenceError);
    try {
        analyze(dh, std::make_pair<i64, i64>(4, 7));
    } catch (const NotOSequenceError& e) {
        std::string msg = e.what();
        CHECK(msg.find("(1,1,1,1,0,") != std::string::npos);
    }
}

TEST_CASE("analyze with CI override (3,9) extends the e-row to allow a degree-9 generator") {
    Sequence dh({1, 3, 6, 10, 15, 19, 23, 26, 27, 28, 29, 29});
    AnalyzeResult a = analyze(dh, std::make_pair<i64, i64>(3, 9));
    CHECK(a.inv.ci_type == std::make_pair<i64, i64>(3, 9));
    CHECK(a.table.shift == 3);
    Sequence want({1, 3, 4, 5, 5, 3, 2, 2, 2, 0});
    for (int i = 0; i <= 9; ++i) CHECK(a.table.e_prime.at(i) == want.at(i));
    CHECK(is_o_sequence(a.table.e_row).pass);
}

TEST_CASE("analyze rejections") {
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 5})), KeyAssumptionViolatedError);
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 6, 9, 11, 11, 0})), PlateauTooSmallError);
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 3, 3})), PlateauTooSmallError); // d = 3
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 7, 9, 9})), NotDifferentiableError);
    CHECK_THROWS_AS(analyze(Sequence({1, 2, 3})), InputShapeError);
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 6, 9, 11, 11, 11, 11, 9, 0})),
                    TailNotAdmissibleError); // plateau sticks out past s+1
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 6, 9, 11, 11, 11, 3, 9, 0})),
                    TailNotAdmissibleError); // increasing tail
    CHECK_THROWS_AS(analyze(Sequence({1, 3, 6, 9, 11, 11, 11, 11, 0})),
                    TailNotAdmissibleError); // tail entry d itself
}

TEST_CASE("analyze the d = 11 example and its difference table") {
    AnalyzeResult a = analyze(Sequence({1, 3, 6, 9, 11, 11, 11, 0}));
    CHECK(a.inv.d == 11);
    CHECK(a.inv.t == 4);
    CHECK(a.inv.s == 5);
    CHECK(a.table.shift == 2);
    CHECK(a.table.e_row == Sequence({1, 2, 2, 1, 1}, 1));
    CHECK(a.table.e_prime == Sequence({1, 2, 2, 1, 1, 0}));
    CHECK(a.h_bar == Sequence({1, 4, 10, 19, 30, 41, 52, 52}, 52));
}

TEST_CASE("generated admissible inputs force b_2 = 6 and an O-sequence e-row") {
    Rng rng(1001);
    for (int trial = 0; trial < 60; ++trial) {
        Sequence dh = random_admissible(rng);
        AnalyzeResult a = analyze(dh);
        CHECK(dh.values[2] == 6);
        CHECK(is_o_sequence(a.table.e_row).pass);
    }
}

TEST_CASE("witness pair for a small even-d input") {
    // d = 12: Delta^2 H = (1,2,3,3,3), t = 4, s = 5
    Sequence dh({1, 3, 6, 9, 12, 12, 12, 0});
    BuildConfig cfg;
    WitnessPair w = build_witness_pair(dh, cfg);
    CHECK(w.analysis.inv.d == 12);
    CHECK(w.analysis.inv.d_even);
    CHECK(w.all_checks_pass);
    CHECK(w.verdict.strongly_incomparable);
    CHECK(w.zprime.iprime_mingens_s2 == 1); // even d keeps one generator in degree s+2
    // J' has two minimal generators in degree s for even d
    int degree_s_gens = 0;
    for (const auto& g : w.zprime.jprime.gens)
        if (g.degree() == w.analysis.inv.s) ++degree_s_gens;
    CHECK(degree_s_gens == 2);
}

TEST_CASE("witness pair for the d = 11 example") {
    Sequence dh({1, 3, 6, 9, 11, 11, 11, 0});
    BuildConfig cfg;
    WitnessPair w = build_witness_pair(dh, cfg);

    CHECK(w.z.points.size() == 52);
    CHECK(w.zprime.points.size() == 52);
    CHECK(w.zprime.yprime.size() == 7);
    CHECK(w.zprime.v_lines.size() == 10);
    CHECK(w.z.curve.size() == 11);
    CHECK(w.all_checks_pass);

    // one minimal generator of J' in degree s for odd d
    int degree_s_gens = 0;
    for (const auto& g : w.zprime.jprime.gens)
        if (g.degree() == w.analysis.inv.s) ++degree_s_gens;
    CHECK(degree_s_gens == 1);

    // liaison ideal piece at degree s+1 has codimension h'(s+1) = 52 in R_6
    PrimeField F(cfg.prime);
    MatrixFp piece = ideal_piece(F, w.zprime.iprime_gens, w.analysis.inv.s + 1);
    CHECK(dim_poly_ring(4, 6) - piece.rows() == 52);

    // hilbert functions agree with the target on both sides
    CHECK(w.z.hilbert == w.analysis.h_bar);
    CHECK(w.zprime.hilbert == w.analysis.h_bar);
}

TEST_CASE("witness builds are deterministic") {
    Sequence dh({1, 3, 6, 9, 11, 11, 11, 0});
    BuildConfig cfg;
    cfg.seed = 314159;
    WitnessPair w1 = build_witness_pair(dh, cfg);
    WitnessPair w2 = build_witness_pair(dh, cfg);
    CHECK(certificate_bytes(w1) == certificate_bytes(w2));

    cfg.seed = 1;
    WitnessPair w3 = build_witness_pair(dh, cfg);
    CHECK(w3.all_checks_pass); // different randomness, same verdicts
    CHECK(w3.betti_z == w1.betti_z);
    CHECK(w3.betti_zprime == w1.betti_zprime);
}

TEST_CASE("a tail case carries the shifted generator counts") {
    Sequence dh({1, 3, 6, 9, 11, 11, 11, 9, 6, 3, 1});
    BuildConfig cfg;
    WitnessPair w = build_witness_pair(dh, cfg);
    CHECK(w.all_checks_pass);
    CHECK(w.z.points.size() == 71);
    CHECK(w.betti_z.get(1, 7) == 2);        // d - b_{s+2} = 11 - 9
    CHECK(w.betti_zprime.get(1, 7) == 1);   // d - 1 - b_{s+2}
    CHECK(w.betti_zprime.get(3, 7) == 1);   // the permanent socle witness
    CHECK(w.verdict.strongly_incomparable);
}
