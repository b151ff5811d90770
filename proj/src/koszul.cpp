#include "bettipair/koszul.hpp"

#include <array>
#include <vector>

namespace bettipair {

namespace {

// Subsets of {0,1,2,3} of each size, in a fixed enumeration.
const std::vector<std::vector<int>>& subsets_of_size(int k) {
    static std::array<std::vector<std::vector<int>>, 5> table = [] {
        std::array<std::vector<std::vector<int>>, 5> t;
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> s;
            for (int b = 0; b < 4; ++b)
                if (mask & (1 << b)) s.push_back(b);
            t[s.size()].push_back(s);
        }
        return t;
    }();
    return table[k];
}

int subset_index(const std::vector<int>& s) {
    const auto& all = subsets_of_size(static_cast<int>(s.size()));
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
        if (all[i] == s) return i;
    return -1;
}

// Matrix of the Koszul differential
//   Lambda^i (x) M_{j-i} -> Lambda^{i-1} (x) M_{j-i+1},
// e_S (x) m  |->  sum_l (-1)^l e_{S minus a_l} (x) x_{a_l} m.
MatrixFp koszul_differential(const GradedModel& model, int i, int j) {
    const PrimeField& F = model.field();
    int src_deg = j - i;
    int tgt_deg = src_deg + 1;
    int src_dim_block = src_deg < 0 ? 0 : model.dim(src_deg);
    int tgt_dim_block = tgt_deg < 0 ? 0 : model.dim(tgt_deg);
    const auto& src_subsets = subsets_of_size(i);
    const auto& tgt_subsets = subsets_of_size(i - 1);
    int rows = static_cast<int>(tgt_subsets.size()) * tgt_dim_block;
    int cols = static_cast<int>(src_subsets.size()) * src_dim_block;
    MatrixFp out(rows, cols, F);
    if (rows == 0 || cols == 0 || src_dim_block == 0) return out;

    for (int si = 0; si < static_cast<int>(src_subsets.size()); ++si) {
        const auto& S = src_subsets[si];
        for (int l = 0; l < i; ++l) {
            std::vector<int> T = S;
            int var = T[l];
            T.erase(T.begin() + l);
            int ti = subset_index(T);
            const MatrixFp& X = model.mult(var, src_deg);
            bool negative = (l % 2) != 0;
            for (int r = 0; r < X.rows(); ++r)
                for (int c = 0; c < X.cols(); ++c) {
                    i64 v = X.at(r, c);
                    if (v == 0) continue;
                    int rr = ti * tgt_dim_block + r;
                    int cc = si * src_dim_block + c;
                    out.at(rr, cc) = F.add(out.at(rr, cc), negative ? F.neg(v) : v);
                }
        }
    }
    return out;
}

} // namespace

BettiDiagram koszul_betti(const GradedModel& model, int max_internal_degree) {
    if (model.max_degree() < max_internal_degree + 1)
        throw WindowTooNarrowError("model window must exceed the Betti window by one degree");
    const int jmax = max_internal_degree;

    // rank of each differential Lambda^i -> Lambda^{i-1} at internal degree j
    std::vector<std::array<int, 6>> rank(jmax + 1, {0, 0, 0, 0, 0, 0});
    std::vector<std::pair<int, int>> work;
    for (int j = 0; j <= jmax; ++j)
        for (int i = 1; i <= 4; ++i)
            if (j - i >= 0) work.emplace_back(i, j);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t w = 0; w < work.size(); ++w) {
        auto [i, j] = work[w];
        MatrixFp d = koszul_differential(model, i, j);
        rank[j][i] = mat_rank_serial(d);
    }

    BettiDiagram b;
    b.ncols = 5; // track column 4 too; it must vanish for our modules
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= 4; ++i) {
            int deg = j - i;
            if (deg < 0) continue;
            i64 src_dim = static_cast<i64>(subsets_of_size(i).size()) * model.dim(deg);
            i64 kernel = src_dim - rank[j][i]; // rank[j][0] = 0
            i64 image = rank[j][i + 1];        // rank[j][5] = 0
            i64 beta = kernel - image;
            if (beta != 0) b.add(i, j, beta);
        }
    return b;
}

} // namespace bettipair
