#include "bettipair/betti_ops.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bettipair {

namespace {

std::set<int> degree_support(const BettiDiagram& a, const BettiDiagram& b) {
    std::set<int> degs;
    for (const auto& [k, v] : a.entries) degs.insert(k.second);
    for (const auto& [k, v] : b.entries) degs.insert(k.second);
    return degs;
}

void require_same_k_polynomial(const BettiDiagram& a, const BettiDiagram& b) {
    if (a.k_polynomial() != b.k_polynomial())
        throw HilbertMismatchError("diagrams do not share a Hilbert function");
}

void require_column_range(const BettiDiagram& a) {
    for (const auto& [k, v] : a.entries)
        if (k.first < 0 || k.first > 3)
            throw std::invalid_argument("Betti diagram outside columns 0..3");
}

} // namespace

std::pair<DiagramConstraints, DiagramConstraints> predict_constraints(
    const ConstructionInvariants& inv) {
    const int s = inv.s, t = inv.t;
    const i64 d = inv.d;
    const i64 bs2 = inv.tail_first();

    DiagramConstraints z, zp;
    z.required_values.push_back({{1, s + 2}, d - bs2});
    for (int r = t + 1; r <= s; ++r)
        for (int i = 1; i <= 3; ++i) z.required_zeros.push_back({i, i + r});
    // the curve side has projective dimension 2: no column-3 entries above
    // row s+1
    for (int r = 0; r <= s; ++r) {
        std::pair<int, int> cell{3, 3 + r};
        if (std::find(z.required_zeros.begin(), z.required_zeros.end(), cell) ==
            z.required_zeros.end())
            z.required_zeros.push_back(cell);
    }

    zp.required_values.push_back({{3, s + 2}, 1});
    zp.required_values.push_back({{1, s + 2}, d - 1 - bs2});
    for (int i = 1; i <= 3; ++i) zp.required_zeros.push_back({i, i + s});
    return {z, zp};
}

ConstraintCheckResult check_constraints(const BettiDiagram& b, const DiagramConstraints& c) {
    ConstraintCheckResult res;
    for (const auto& [cell, want] : c.required_values) {
        i64 got = b.get(cell.first, cell.second);
        if (got != want) {
            res.pass = false;
            std::ostringstream os;
            os << "beta_{" << cell.first << "," << cell.second << "} = " << got
               << ", expected " << want;
            res.violations.push_back(os.str());
        }
    }
    for (const auto& cell : c.required_zeros) {
        i64 got = b.get(cell.first, cell.second);
        if (got != 0) {
            res.pass = false;
            std::ostringstream os;
            os << "beta_{" << cell.first << "," << cell.second << "} = " << got
               << ", expected 0";
            res.violations.push_back(os.str());
        }
    }
    return res;
}

std::optional<CancellationCertificate> cancellation_reachable(const BettiDiagram& from,
                                                              const BettiDiagram& to) {
    require_column_range(from);
    require_column_range(to);
    require_same_k_polynomial(from, to);

    CancellationCertificate cert;
    for (int j : degree_support(from, to)) {
        i64 diff[4], c[3];
        for (int i = 0; i < 4; ++i) diff[i] = from.get(i, j) - to.get(i, j);
        c[0] = diff[0];
        c[1] = diff[1] - c[0];
        c[2] = diff[2] - c[1];
        if (c[0] < 0 || c[1] < 0 || c[2] < 0 || diff[3] != c[2]) return std::nullopt;
        for (int i = 0; i < 3; ++i)
            if (c[i] > 0) cert.multiplicities.push_back({{i, j}, c[i]});
    }
    return cert;
}

IncomparabilityVerdict strongly_incomparable(const BettiDiagram& b1, const BettiDiagram& b2) {
    require_column_range(b1);
    require_column_range(b2);
    require_same_k_polynomial(b1, b2);

    BettiDiagram descendant;
    descendant.ncols = 4;
    for (int j : degree_support(b1, b2)) {
        i64 a[4], b[4];
        for (int i = 0; i < 4; ++i) {
            a[i] = b1.get(i, j);
            b[i] = b2.get(i, j);
        }
        bool found = false;
        i64 u[4];
        for (i64 c0 = 0; c0 <= std::min(a[0], a[1]) && !found; ++c0)
            for (i64 c1 = 0; c1 <= std::min(a[1] - c0, a[2]) && !found; ++c1)
                for (i64 c2 = 0; c2 <= std::min(a[2] - c1, a[3]) && !found; ++c2) {
                    u[0] = a[0] - c0;
                    u[1] = a[1] - c0 - c1;
                    u[2] = a[2] - c1 - c2;
                    u[3] = a[3] - c2;
                    i64 e0 = b[0] - u[0];
                    i64 e1 = b[1] - u[1] - e0;
                    i64 e2 = b[2] - u[2] - e1;
                    if (e0 >= 0 && e1 >= 0 && e2 >= 0 && b[3] - u[3] == e2) found = true;
                }
        if (!found) return {true, std::nullopt};
        for (int i = 0; i < 4; ++i) descendant.set(i, j, u[i]);
    }
    return {false, descendant};
}

} // namespace bettipair
