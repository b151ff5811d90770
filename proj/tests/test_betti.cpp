#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bettipair/betti_ops.hpp"
#include "bettipair/rng.hpp"

using namespace bettipair;

namespace {

// Brute-force descendant oracle: per internal degree, BFS over single unit
// cancellations; a common descendant exists iff the per-degree reachable
// column sets intersect for every degree.
using Column = std::array<i64, 4>;

std::set<Column> reachable_columns(Column start) {
    std::set<Column> seen{start};
    std::vector<Column> queue{start};
    while (!queue.empty()) {
        Column u = queue.back();
        queue.pop_back();
        for (int i = 0; i < 3; ++i) {
            if (u[i] > 0 && u[i + 1] > 0) {
                Column v = u;
                --v[i];
                --v[i + 1];
                if (seen.insert(v).second) queue.push_back(v);
            }
        }
    }
    return seen;
}

bool oracle_common_descendant(const BettiDiagram& a, const BettiDiagram& b) {
    std::set<int> degrees;
    for (const auto& [k, v] : a.entries) degrees.insert(k.second);
    for (const auto& [k, v] : b.entries) degrees.insert(k.second);
    for (int j : degrees) {
        Column ca{a.get(0, j), a.get(1, j), a.get(2, j), a.get(3, j)};
        Column cb{b.get(0, j), b.get(1, j), b.get(2, j), b.get(3, j)};
        auto ra = reachable_columns(ca);
        auto rb = reachable_columns(cb);
        bool meet = false;
        for (const auto& u : ra)
            if (rb.count(u)) { meet = true; break; }
        if (!meet) return false;
    }
    return true;
}

BettiDiagram random_diagram(Rng& rng, int max_degree, i64 max_entry) {
    BettiDiagram b;
    b.set(0, 0, 1);
    for (int j = 1; j <= max_degree; ++j)
        for (int i = 1; i <= 3; ++i)
            if (rng.below(2) == 0) b.set(i, j, 1 + static_cast<i64>(rng.below(max_entry)));
    return b;
}

// K-polynomial-preserving mutation: add or (when possible) remove ghost
// pairs at random cells.
BettiDiagram mutate_same_k(const BettiDiagram& base, Rng& rng, int moves, int max_degree) {
    BettiDiagram b = base;
    for (int m = 0; m < moves; ++m) {
        int i = static_cast<int>(rng.below(3));
        int j = static_cast<int>(rng.below(max_degree + 1));
        if (rng.below(2) == 0) {
            b.add(i, j, 1);
            b.add(i + 1, j, 1);
        } else if (b.get(i, j) > 0 && b.get(i + 1, j) > 0) {
            b.add(i, j, -1);
            b.add(i + 1, j, -1);
        }
    }
    return b;
}

// Example 4.5 diagrams as computed by the engine (d = 11, t = 4, s = 5).
BettiDiagram example_z() {
    BettiDiagram b;
    b.set(0, 0, 1);
    b.set(1, 3, 1);
    b.set(1, 4, 1);
    b.set(2, 5, 1);
    b.set(1, 5, 2);
    b.set(2, 6, 2);
    b.set(1, 7, 11);
    b.set(2, 8, 22);
    b.set(3, 9, 11);
    return b;
}
BettiDiagram example_zprime() {
    BettiDiagram b = example_z();
    // the odd-column (3,7) entry and the smaller (1,7) leave the
    // K-polynomial unchanged: -10 - 1 = -11
    b.set(3, 7, 1);
    b.set(1, 7, 10);
    return b;
}

} // namespace

TEST_CASE("predicted constraints for the d = 11 example") {
    ConstructionInvariants inv;
    inv.d = 11;
    inv.t = 4;
    inv.s = 5;
    inv.d_even = false;
    auto [z, zp] = predict_constraints(inv);

    auto has_value = [](const DiagramConstraints& c, int i, int j, i64 v) {
        for (const auto& [cell, want] : c.required_values)
            if (cell == std::make_pair(i, j) && want == v) return true;
        return false;
    };
    auto has_zero = [](const DiagramConstraints& c, int i, int j) {
        for (const auto& cell : c.required_zeros)
            if (cell == std::make_pair(i, j)) return true;
        return false;
    };
    CHECK(has_value(z, 1, 7, 11));
    CHECK(has_zero(z, 3, 7));
    CHECK(has_value(zp, 1, 7, 10));
    CHECK(has_value(zp, 3, 7, 1));
    CHECK(has_zero(zp, 2, 7)); // row s
}

TEST_CASE("predicted constraints instantiate at d = 17 and with tails") {
    ConstructionInvariants inv;
    inv.d = 17;
    inv.t = 6;
    inv.s = 8;
    auto [z, zp] = predict_constraints(inv);
    CHECK(z.required_values.front() == std::make_pair(std::make_pair(1, 10), i64(17)));
    CHECK(zp.required_values.back() == std::make_pair(std::make_pair(1, 10), i64(16)));

    ConstructionInvariants tail_inv;
    tail_inv.d = 11;
    tail_inv.t = 4;
    tail_inv.s = 5;
    tail_inv.tail = {9, 6, 3, 1};
    auto [zt, zpt] = predict_constraints(tail_inv);
    CHECK(zt.required_values.front() == std::make_pair(std::make_pair(1, 7), i64(2)));
    CHECK(zpt.required_values.back() == std::make_pair(std::make_pair(1, 7), i64(1)));
}

TEST_CASE("constraint checking reports violations") {
    BettiDiagram b = example_z();
    DiagramConstraints c;
    c.required_values.push_back({{1, 7}, 11});
    c.required_zeros.push_back({3, 7});
    CHECK(check_constraints(b, c).pass);
    c.required_values.push_back({{1, 7}, 10});
    auto res = check_constraints(b, c);
    CHECK(!res.pass);
    CHECK(res.violations.size() == 1);
}

TEST_CASE("cancellation reachability") {
    BettiDiagram b = example_z();
    auto cert = cancellation_reachable(b, b);
    REQUIRE(cert.has_value());
    CHECK(cert->multiplicities.empty());

    // ghost pair: one unit at (2,5)/(3,5)
    BettiDiagram from = b;
    from.add(2, 5, 1);
    from.add(3, 5, 1);
    auto cert2 = cancellation_reachable(from, b);
    REQUIRE(cert2.has_value());
    REQUIRE(cert2->multiplicities.size() == 1);
    CHECK(cert2->multiplicities[0] == std::make_pair(std::make_pair(2, 5), i64(1)));

    // cancellation only decreases
    CHECK(!cancellation_reachable(b, from).has_value());

    BettiDiagram different;
    different.set(0, 0, 2);
    CHECK_THROWS_AS((void)cancellation_reachable(b, different), HilbertMismatchError);
}

TEST_CASE("the two example diagrams are strongly incomparable") {
    auto verdict = strongly_incomparable(example_z(), example_zprime());
    CHECK(verdict.strongly_incomparable);
    CHECK(!verdict.common_descendant.has_value());
}

TEST_CASE("identical diagrams have a common descendant (themselves)") {
    auto verdict = strongly_incomparable(example_z(), example_z());
    CHECK(!verdict.strongly_incomparable);
    REQUIRE(verdict.common_descendant.has_value());
    // the found descendant must be reachable from both inputs
    CHECK(cancellation_reachable(example_z(), *verdict.common_descendant).has_value());
}

TEST_CASE("diagrams differing by disjoint ghost pairs meet downstairs") {
    BettiDiagram base = example_z();
    BettiDiagram a = base, b = base;
    a.add(1, 5, 1);
    a.add(2, 5, 1);
    b.add(2, 5, 1);
    b.add(3, 5, 1);
    auto verdict = strongly_incomparable(a, b);
    CHECK(!verdict.strongly_incomparable);
    REQUIRE(verdict.common_descendant.has_value());
    CHECK(cancellation_reachable(a, *verdict.common_descendant).has_value());
    CHECK(cancellation_reachable(b, *verdict.common_descendant).has_value());
}

TEST_CASE("decision agrees with the brute-force oracle on random pairs") {
    Rng rng(20240809);
    for (int trial = 0; trial < 200; ++trial) {
        BettiDiagram a = random_diagram(rng, 5, 3);
        BettiDiagram b = mutate_same_k(a, rng, 1 + static_cast<int>(rng.below(6)), 5);
        auto verdict = strongly_incomparable(a, b);
        bool oracle = oracle_common_descendant(a, b);
        CHECK(verdict.strongly_incomparable == !oracle);
        if (verdict.common_descendant) {
            CHECK(cancellation_reachable(a, *verdict.common_descendant).has_value());
            CHECK(cancellation_reachable(b, *verdict.common_descendant).has_value());
        }
    }
}

TEST_CASE("reachability is transitive along random cancellation chains") {
    Rng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        BettiDiagram top = random_diagram(rng, 4, 3);
        // walk down two steps of random cancellations
        BettiDiagram mid = top, bottom;
        for (int step = 0; step < 2; ++step) {
            BettiDiagram next = mid;
            for (int tries = 0; tries < 10; ++tries) {
                int i = static_cast<int>(rng.below(3));
                int j = static_cast<int>(rng.below(5));
                if (next.get(i, j) > 0 && next.get(i + 1, j) > 0) {
                    next.add(i, j, -1);
                    next.add(i + 1, j, -1);
                    break;
                }
            }
            if (step == 0) mid = next;
            else bottom = next;
        }
        CHECK(cancellation_reachable(top, mid).has_value());
        CHECK(cancellation_reachable(mid, bottom).has_value());
        CHECK(cancellation_reachable(top, bottom).has_value());
    }
}

TEST_CASE("strong incomparability implies plain incomparability") {
    Rng rng(777);
    int verdicts = 0;
    for (int trial = 0; trial < 300; ++trial) {
        BettiDiagram a = random_diagram(rng, 4, 2);
        BettiDiagram b = mutate_same_k(a, rng, 3, 4);
        auto verdict = strongly_incomparable(a, b);
        if (!verdict.strongly_incomparable) continue;
        ++verdicts;
        bool a_le_b = true, b_le_a = true;
        std::set<std::pair<int, int>> cells;
        for (const auto& [k, v] : a.entries) cells.insert(k);
        for (const auto& [k, v] : b.entries) cells.insert(k);
        for (const auto& [i, j] : cells) {
            if (a.get(i, j) > b.get(i, j)) a_le_b = false;
            if (b.get(i, j) > a.get(i, j)) b_le_a = false;
        }
        CHECK(!a_le_b);
        CHECK(!b_le_a);
    }
    CHECK(verdicts > 0); // the suite must actually exercise the implication
}
