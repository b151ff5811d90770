#include "bettipair/wlp.hpp"

#include <algorithm>

#include "bettipair/graded_model.hpp"
#include "bettipair/matrix.hpp"
#include "bettipair/rng.hpp"

namespace bettipair {

namespace {

std::array<i64, 4> random_form(const PrimeField& F, Rng& rng) {
    std::array<i64, 4> c{};
    bool nonzero = false;
    while (!nonzero) {
        for (int k = 0; k < 4; ++k) {
            c[k] = static_cast<i64>(rng.below(static_cast<std::uint64_t>(F.p())));
            if (c[k] != 0) nonzero = true;
        }
    }
    return c;
}

// L(P) for every point; the reduction form must be nonzero everywhere so
// that multiplication by it is injective (points are arithmetically CM).
std::vector<i64> values_at_points(const PrimeField& F, const PointSet& pts,
                                  const std::array<i64, 4>& form) {
    std::vector<i64> vals(pts.size());
    for (int i = 0; i < pts.size(); ++i) vals[i] = eval_linear(F, form, pts.points[i].c);
    return vals;
}

// rank of the induced map A_i -> A_{i+1} where A = V / L1 V:
// rank [L2 B_i ; L1 B_i] - rank [L1 B_i].
i64 induced_rank(const PrimeField& F, const MatrixFp& basis, const std::vector<i64>& l1,
                 const std::vector<i64>& l2) {
    int n = basis.cols();
    int m = basis.rows();
    MatrixFp stacked(2 * m, n, F);
    MatrixFp lower(m, n, F);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            stacked.at(r, c) = F.mul(basis.at(r, c), l2[c]);
            i64 v1 = F.mul(basis.at(r, c), l1[c]);
            stacked.at(m + r, c) = v1;
            lower.at(r, c) = v1;
        }
    return mat_rank(stacked) - mat_rank(lower);
}

} // namespace

WlpReport wlp_check(const PrimeField& field, const PointSet& points, std::uint64_t seed,
                    int trials) {
    if (points.size() == 0) throw std::invalid_argument("wlp_check needs a nonempty point set");
    Rng rng(seed);

    WlpReport report;
    report.seed = seed;
    report.trials = trials;

    // L1 with no zero at any point: pointwise scaling is then injective and
    // dim A_i = (first difference of h_Z)(i) exactly.
    std::array<i64, 4> l1{};
    std::vector<i64> l1_vals;
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
        l1 = random_form(field, rng);
        l1_vals = values_at_points(field, points, l1);
        ok = std::all_of(l1_vals.begin(), l1_vals.end(), [](i64 v) { return v != 0; });
    }
    if (!ok) throw DegenerateReductionError("no reduction form avoids all points");
    report.reduction_form = l1;

    // Build the evaluation model out to stabilization of h_Z.
    int max_deg = 1;
    std::unique_ptr<EvaluationModel> model;
    for (;;) {
        model = std::make_unique<EvaluationModel>(points, field, max_deg);
        if (model->dim(max_deg) == points.size() && max_deg >= 2 &&
            model->dim(max_deg - 1) == points.size())
            break;
        ++max_deg;
    }
    Sequence h = hilbert_function(*model, max_deg);
    int sigma = max_deg - 1; // h(sigma) = |Z|, A_i = 0 for i > sigma

    std::vector<i64> delta(sigma + 2);
    for (int i = 0; i <= sigma + 1; ++i) delta[i] = h.at(i) - h.at(i - 1);

    std::vector<i64> best(sigma + 1, 0);
    for (int t = 0; t < trials; ++t) {
        std::array<i64, 4> l2 = random_form(field, rng);
        report.probe_forms.push_back(l2);
        std::vector<i64> l2_vals = values_at_points(field, points, l2);
        std::vector<i64> this_trial(sigma + 1);
        for (int i = 0; i <= sigma; ++i) {
            i64 r = induced_rank(field, model->basis(i), l1_vals, l2_vals);
            best[i] = std::max(best[i], r);
            this_trial[i] = best[i];
        }
        report.rank_history.push_back(this_trial);
    }

    report.holds = true;
    for (int i = 0; i <= sigma; ++i) {
        WlpDegreeRow row{i, delta[i], delta[i + 1], best[i]};
        report.rows.push_back(row);
        if (best[i] != std::min(delta[i], delta[i + 1])) {
            report.holds = false;
            report.failing_degrees.push_back(i);
        }
    }
    return report;
}

} // namespace bettipair
