#include "bettipair/graded_model.hpp"

#include <map>
#include <stdexcept>

namespace bettipair {

namespace {

// Coordinates of v in an RREF row basis: read off the pivot columns.
// v must lie in the row space; callers rely on exactness, so we check.
std::vector<i64> coords_in_rref(const PrimeField& F, const MatrixFp& basis,
                                const std::vector<int>& pivots, const std::vector<i64>& v) {
    std::vector<i64> coord(basis.rows());
    for (int r = 0; r < basis.rows(); ++r) coord[r] = F.reduce(v[pivots[r]]);
    std::vector<i64> residual = v;
    for (int r = 0; r < basis.rows(); ++r) {
        if (coord[r] == 0) continue;
        const i64* row = basis.row(r);
        for (std::size_t c = 0; c < residual.size(); ++c)
            residual[c] = F.sub(F.reduce(residual[c]), F.mul(coord[r], row[c]));
    }
    for (i64 x : residual)
        if (F.reduce(x) != 0) throw std::logic_error("vector outside graded piece");
    return coord;
}

} // namespace

EvaluationModel::EvaluationModel(const PointSet& points, const PrimeField& field, int max_degree)
    : field_(field), max_degree_(max_degree), npoints_(points.size()) {
    if (npoints_ == 0) throw std::invalid_argument("evaluation model needs a nonempty point set");
    coords_.reserve(npoints_);
    for (const auto& p : points.points) {
        std::array<i64, 4> c;
        for (int k = 0; k < 4; ++k) c[k] = field_.reduce(p.c[k]);
        coords_.push_back(c);
    }

    basis_.resize(max_degree_ + 1);
    pivots_.resize(max_degree_ + 1);
    mult_.resize(max_degree_ + 1);

    MatrixFp b0(1, npoints_, field_);
    for (int c = 0; c < npoints_; ++c) b0.at(0, c) = 1;
    pivots_[0] = rref(b0);
    basis_[0] = b0;

    for (int j = 1; j <= max_degree_; ++j) {
        const MatrixFp& prev = basis_[j - 1];
        MatrixFp stacked(4 * prev.rows(), npoints_, field_);
        for (int v = 0; v < 4; ++v)
            for (int r = 0; r < prev.rows(); ++r)
                for (int c = 0; c < npoints_; ++c)
                    stacked.at(v * prev.rows() + r, c) = field_.mul(prev.at(r, c), coords_[c][v]);
        auto piv = rref(stacked);
        MatrixFp b(static_cast<int>(piv.size()), npoints_, field_);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < npoints_; ++c) b.at(r, c) = stacked.at(r, c);
        basis_[j] = b;
        pivots_[j] = piv;
    }

    for (int j = 0; j < max_degree_; ++j) {
        for (int v = 0; v < 4; ++v) {
            MatrixFp m(basis_[j + 1].rows(), basis_[j].rows(), field_);
            std::vector<i64> scaled(npoints_);
            for (int r = 0; r < basis_[j].rows(); ++r) {
                for (int c = 0; c < npoints_; ++c) scaled[c] = field_.mul(basis_[j].at(r, c), coords_[c][v]);
                auto coord = coords_in_rref(field_, basis_[j + 1], pivots_[j + 1], scaled);
                for (int t = 0; t < m.rows(); ++t) m.at(t, r) = coord[t];
            }
            mult_[j][v] = m;
        }
    }
}

int EvaluationModel::dim(int j) const {
    if (j < 0) return 0;
    if (j > max_degree_) throw std::out_of_range("degree beyond model window");
    return basis_[j].rows();
}

const MatrixFp& EvaluationModel::mult(int var, int j) const {
    if (j < 0 || j >= max_degree_) throw std::out_of_range("multiplication beyond model window");
    return mult_[j][var];
}

IdealPieces::IdealPieces(const PrimeField& field, const std::vector<Polynomial>& gens,
                         int max_degree, int nvars)
    : field_(field), nvars_(nvars), max_degree_(max_degree) {
    basis_.resize(max_degree_ + 1);
    pivots_.resize(max_degree_ + 1);
    monos_.resize(max_degree_ + 1);

    std::vector<std::map<Monomial, int, MonoLexGreater>> index(max_degree_ + 1);
    for (int j = 0; j <= max_degree_; ++j) {
        monos_[j] = monomials_of_degree(nvars_, j);
        for (int i = 0; i < static_cast<int>(monos_[j].size()); ++i) index[j][monos_[j][i]] = i;
    }

    for (int j = 0; j <= max_degree_; ++j) {
        int ncols = static_cast<int>(monos_[j].size());
        std::vector<std::vector<i64>> rows;

        if (j > 0) {
            const MatrixFp& prev = basis_[j - 1];
            for (int v = 0; v < nvars_; ++v)
                for (int r = 0; r < prev.rows(); ++r) {
                    std::vector<i64> row(ncols, 0);
                    for (int c = 0; c < prev.cols(); ++c) {
                        i64 coeff = prev.at(r, c);
                        if (coeff == 0) continue;
                        row[index[j].at(monos_[j - 1][c].times_var(v))] = coeff;
                    }
                    rows.push_back(std::move(row));
                }
        }
        for (const auto& g : gens) {
            if (g.degree() != j) continue;
            std::vector<i64> row(ncols, 0);
            for (const auto& [m, c] : g.terms) row[index[j].at(m)] = field_.reduce(c);
            rows.push_back(std::move(row));
        }

        MatrixFp stacked(static_cast<int>(rows.size()), ncols, field_);
        for (int r = 0; r < stacked.rows(); ++r)
            for (int c = 0; c < ncols; ++c) stacked.at(r, c) = rows[r][c];
        auto piv = rref(stacked);
        MatrixFp b(static_cast<int>(piv.size()), ncols, field_);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < ncols; ++c) b.at(r, c) = stacked.at(r, c);
        basis_[j] = b;
        pivots_[j] = piv;
    }
}

i64 IdealPieces::minimal_generators_in_degree(int j) const {
    if (j < 0 || j > max_degree_) throw std::out_of_range("degree beyond computed window");
    if (j == 0) return dim(0);
    const MatrixFp& prev = basis_[j - 1];
    int ncols = static_cast<int>(monos_[j].size());
    std::map<Monomial, int, MonoLexGreater> index;
    for (int i = 0; i < ncols; ++i) index[monos_[j][i]] = i;
    MatrixFp shifted(nvars_ * prev.rows(), ncols, field_);
    for (int v = 0; v < nvars_; ++v)
        for (int r = 0; r < prev.rows(); ++r)
            for (int c = 0; c < prev.cols(); ++c) {
                i64 coeff = prev.at(r, c);
                if (coeff == 0) continue;
                shifted.at(v * prev.rows() + r, index.at(monos_[j - 1][c].times_var(v))) = coeff;
            }
    return dim(j) - mat_rank(shifted);
}

Sequence IdealPieces::quotient_hilbert() const {
    Sequence h;
    for (int j = 0; j <= max_degree_; ++j) h.values.push_back(quotient_dim(j));
    return h;
}

MatrixFp ideal_piece(const PrimeField& field, const std::vector<Polynomial>& gens, int j,
                     int nvars) {
    IdealPieces pieces(field, gens, j, nvars);
    return pieces.basis(j);
}

PresentationModel::PresentationModel(const PrimeField& field, const std::vector<Polynomial>& gens,
                                     int max_degree)
    : field_(field), max_degree_(max_degree), pieces_(field, gens, max_degree, 4) {
    std_cols_.resize(max_degree_ + 1);
    mult_.resize(max_degree_ + 1);

    std::vector<std::vector<int>> col_kind(max_degree_ + 1); // std index or -(pivot row)-1
    for (int j = 0; j <= max_degree_; ++j) {
        int ncols = static_cast<int>(pieces_.monomials(j).size());
        col_kind[j].assign(ncols, 0);
        for (int r = 0; r < static_cast<int>(pieces_.pivots(j).size()); ++r)
            col_kind[j][pieces_.pivots(j)[r]] = -(r + 1);
        for (int c = 0; c < ncols; ++c)
            if (col_kind[j][c] >= 0) {
                col_kind[j][c] = static_cast<int>(std_cols_[j].size());
                std_cols_[j].push_back(c);
            }
    }

    for (int j = 0; j < max_degree_; ++j) {
        std::map<Monomial, int, MonoLexGreater> index_next;
        const auto& monos_next = pieces_.monomials(j + 1);
        for (int i = 0; i < static_cast<int>(monos_next.size()); ++i) index_next[monos_next[i]] = i;
        int dim_j = static_cast<int>(std_cols_[j].size());
        int dim_next = static_cast<int>(std_cols_[j + 1].size());
        for (int v = 0; v < 4; ++v) {
            MatrixFp m(dim_next, dim_j, field_);
            for (int s = 0; s < dim_j; ++s) {
                Monomial prod = pieces_.monomials(j)[std_cols_[j][s]].times_var(v);
                int col = index_next.at(prod);
                int kind = col_kind[j + 1][col];
                if (kind >= 0) {
                    m.at(kind, s) = 1;
                } else {
                    // normal form of a pivot monomial: minus the row tail,
                    // which lives on standard columns only (reduced REF)
                    int row = -kind - 1;
                    for (int t = 0; t < dim_next; ++t) {
                        i64 c = pieces_.basis(j + 1).at(row, std_cols_[j + 1][t]);
                        if (c != 0) m.at(t, s) = field_.neg(c);
                    }
                }
            }
            mult_[j][v] = m;
        }
    }
}

int PresentationModel::dim(int j) const {
    if (j < 0) return 0;
    if (j > max_degree_) throw std::out_of_range("degree beyond model window");
    return static_cast<int>(std_cols_[j].size());
}

const MatrixFp& PresentationModel::mult(int var, int j) const {
    if (j < 0 || j >= max_degree_) throw std::out_of_range("multiplication beyond model window");
    return mult_[j][var];
}

Sequence hilbert_function(const GradedModel& model, int max_degree) {
    Sequence h;
    for (int j = 0; j <= max_degree; ++j) h.values.push_back(model.dim(j));
    if (const auto* ev = dynamic_cast<const EvaluationModel*>(&model)) {
        if (!h.values.empty() && h.values.back() == ev->point_count()) h.eventual = ev->point_count();
    }
    return h;
}

std::vector<Polynomial> point_ideal_generators(const PrimeField& field, const PointSet& points,
                                               int max_degree) {
    std::vector<Polynomial> gens;
    // span of R_1 * I_{j-1} tracked as an eliminated row set per degree
    std::vector<MatrixFp> ideal_basis(max_degree + 1);
    for (int j = 0; j <= max_degree; ++j) {
        auto monos = monomials_of_degree(4, j);
        int ncols = static_cast<int>(monos.size());
        // evaluation matrix: row per point
        MatrixFp ev(points.size(), ncols, field);
        for (int r = 0; r < points.size(); ++r)
            for (int c = 0; c < ncols; ++c) {
                i64 t = 1;
                for (int v = 0; v < 4; ++v)
                    for (int k = 0; k < monos[c].e[v]; ++k) t = field.mul(t, field.reduce(points.points[r].c[v]));
                ev.at(r, c) = t;
            }
        MatrixFp ker = mat_kernel(ev); // basis of (I_Z)_j
        // rows of x_v * I_{j-1}
        std::map<Monomial, int, MonoLexGreater> index;
        for (int i = 0; i < ncols; ++i) index[monos[i]] = i;
        std::vector<std::vector<i64>> shifted_rows;
        if (j > 0) {
            const MatrixFp& prev = ideal_basis[j - 1];
            auto monos_prev = monomials_of_degree(4, j - 1);
            for (int v = 0; v < 4; ++v)
                for (int r = 0; r < prev.rows(); ++r) {
                    std::vector<i64> row(ncols, 0);
                    for (int c = 0; c < prev.cols(); ++c)
                        if (prev.at(r, c) != 0) row[index.at(monos_prev[c].times_var(v))] = prev.at(r, c);
                    shifted_rows.push_back(std::move(row));
                }
        }
        // Reduce each kernel row against the span of R_1 I_{j-1}; a nonzero
        // remainder is a minimal generator and joins the span.
        MatrixFp acc(static_cast<int>(shifted_rows.size()), ncols, field);
        for (int r = 0; r < acc.rows(); ++r)
            for (int c = 0; c < ncols; ++c) acc.at(r, c) = shifted_rows[r][c];
        auto acc_pivots = rref(acc);
        std::vector<std::vector<i64>> acc_rows_v;
        std::vector<int> acc_piv_cols;
        for (int r = 0; r < static_cast<int>(acc_pivots.size()); ++r) {
            std::vector<i64> row(ncols);
            for (int c = 0; c < ncols; ++c) row[c] = acc.at(r, c);
            acc_rows_v.push_back(std::move(row));
            acc_piv_cols.push_back(acc_pivots[r]);
        }
        for (int r = 0; r < ker.rows(); ++r) {
            std::vector<i64> v(ncols);
            for (int c = 0; c < ncols; ++c) v[c] = ker.at(r, c);
            for (std::size_t t = 0; t < acc_rows_v.size(); ++t) {
                i64 f = field.reduce(v[acc_piv_cols[t]]);
                if (f == 0) continue;
                for (int c = 0; c < ncols; ++c)
                    v[c] = field.sub(field.reduce(v[c]), field.mul(f, acc_rows_v[t][c]));
            }
            int lead = -1;
            for (int c = 0; c < ncols; ++c)
                if (field.reduce(v[c]) != 0) { lead = c; break; }
            if (lead < 0) continue;
            i64 linv = field.inv(v[lead]);
            for (int c = 0; c < ncols; ++c) v[c] = field.mul(field.reduce(v[c]), linv);
            Polynomial g;
            g.nvars = 4;
            for (int c = 0; c < ncols; ++c)
                if (ker.at(r, c) != 0) g.terms[monos[c]] = ker.at(r, c);
            gens.push_back(g);
            // keep the accumulated set fully reduced: clear the new pivot
            // column from existing rows, then insert in pivot order
            for (std::size_t t = 0; t < acc_rows_v.size(); ++t) {
                i64 f = field.reduce(acc_rows_v[t][lead]);
                if (f == 0) continue;
                for (int c = 0; c < ncols; ++c)
                    acc_rows_v[t][c] = field.sub(field.reduce(acc_rows_v[t][c]), field.mul(f, v[c]));
            }
            std::size_t pos = 0;
            while (pos < acc_piv_cols.size() && acc_piv_cols[pos] < lead) ++pos;
            acc_rows_v.insert(acc_rows_v.begin() + pos, std::move(v));
            acc_piv_cols.insert(acc_piv_cols.begin() + pos, lead);
        }
        // store RREF basis of (I_Z)_j for the next degree
        MatrixFp store = ker;
        auto piv = rref(store);
        MatrixFp b(static_cast<int>(piv.size()), ncols, field);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < ncols; ++c) b.at(r, c) = store.at(r, c);
        ideal_basis[j] = b;
    }
    return gens;
}

} // namespace bettipair
