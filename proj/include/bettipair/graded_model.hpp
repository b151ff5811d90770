#ifndef BETTIPAIR_GRADED_MODEL_HPP
#define BETTIPAIR_GRADED_MODEL_HPP

#include <memory>
#include <vector>

#include "bettipair/lifting.hpp"
#include "bettipair/matrix.hpp"
#include "bettipair/poly.hpp"
#include "bettipair/seq.hpp"

namespace bettipair {

// Degreewise model of a cyclic graded module R/I over R = k[x0..x3]:
// a basis of each graded piece inside a fixed coordinate space and the four
// multiplication maps (R/I)_j -> (R/I)_{j+1} in those bases.
class GradedModel {
public:
    virtual ~GradedModel() = default;
    virtual const PrimeField& field() const = 0;
    virtual int max_degree() const = 0;
    virtual int dim(int j) const = 0;
    // dim(j+1) x dim(j) matrix of multiplication by x_var
    virtual const MatrixFp& mult(int var, int j) const = 0;
};

// Coordinate ring of a reduced point set, realized inside the space of
// functions on the points: (R/I_Z)_j is spanned by evaluations of degree-j
// forms, and multiplication by x_k is pointwise scaling by the k-th
// coordinate (points are normalized to x0 = 1).
class EvaluationModel : public GradedModel {
public:
    EvaluationModel(const PointSet& points, const PrimeField& field, int max_degree);

    const PrimeField& field() const override { return field_; }
    int max_degree() const override { return max_degree_; }
    int dim(int j) const override;
    const MatrixFp& mult(int var, int j) const override;

    const MatrixFp& basis(int j) const { return basis_[j]; }
    int point_count() const { return npoints_; }

private:
    PrimeField field_;
    int max_degree_;
    int npoints_;
    std::vector<MatrixFp> basis_;              // RREF rows in F_p^{points}
    std::vector<std::vector<int>> pivots_;
    std::vector<std::array<MatrixFp, 4>> mult_;
    std::vector<std::array<i64, 4>> coords_;
};

// Graded pieces of an ideal given by homogeneous generators, as RREF bases
// in monomial coordinates: (I)_j = R_1 (I)_{j-1} + (generators of degree j).
class IdealPieces {
public:
    IdealPieces(const PrimeField& field, const std::vector<Polynomial>& gens, int max_degree,
                int nvars = 4);

    const PrimeField& field() const { return field_; }
    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    i64 dim(int j) const { return basis_[j].rows(); }
    i64 quotient_dim(int j) const { return dim_poly_ring(nvars_, j) - dim(j); }
    const MatrixFp& basis(int j) const { return basis_[j]; }
    const std::vector<int>& pivots(int j) const { return pivots_[j]; }
    const std::vector<Monomial>& monomials(int j) const { return monos_[j]; }

    // Number of minimal generators in degree j: dim I_j - dim R_1 I_{j-1}.
    i64 minimal_generators_in_degree(int j) const;

    Sequence quotient_hilbert() const;

private:
    PrimeField field_;
    int nvars_;
    int max_degree_;
    std::vector<MatrixFp> basis_;
    std::vector<std::vector<int>> pivots_;
    std::vector<std::vector<Monomial>> monos_;
};

// Reduced basis of the degree-j piece of the ideal spanned by the given
// generators (rows in monomial coordinates, lex-descending column order).
MatrixFp ideal_piece(const PrimeField& field, const std::vector<Polynomial>& gens, int j,
                     int nvars = 4);

// Quotient model R/<gens> with coset bases given by standard monomials
// (the non-pivot columns of the RREF ideal bases).
class PresentationModel : public GradedModel {
public:
    PresentationModel(const PrimeField& field, const std::vector<Polynomial>& gens,
                      int max_degree);

    const PrimeField& field() const override { return field_; }
    int max_degree() const override { return max_degree_; }
    int dim(int j) const override;
    const MatrixFp& mult(int var, int j) const override;

    const IdealPieces& pieces() const { return pieces_; }

private:
    PrimeField field_;
    int max_degree_;
    IdealPieces pieces_;
    std::vector<std::vector<int>> std_cols_;
    std::vector<std::array<MatrixFp, 4>> mult_;
};

// Hilbert function of a model on [0, max_degree]; for point sets the tail is
// marked eventually constant once it reaches the point count.
Sequence hilbert_function(const GradedModel& model, int max_degree);

// Minimal generators of I_Z extracted degree by degree from the evaluation
// kernels, up to and including degree max_degree.
std::vector<Polynomial> point_ideal_generators(const PrimeField& field, const PointSet& points,
                                               int max_degree);

} // namespace bettipair

#endif
