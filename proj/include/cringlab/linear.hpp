#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cringlab/matrix.hpp"

namespace cringlab {

/// A named finite-dimensional space with labelled basis.
struct FinSpace {
    std::string id;
    std::vector<std::string> labels;

    std::size_t dim() const { return labels.size(); }
    static FinSpace numbered(std::string id, std::size_t dim, const std::string& prefix = "v");
    friend bool operator==(const FinSpace&, const FinSpace&) = default;
};

/// X⊗Y with labels "x⊗y" in x-index-major order.
FinSpace tensor(const FinSpace& x, const FinSpace& y);
FinSpace tensor(std::initializer_list<FinSpace> factors);
/// Throws ShapeError if the labels are not distinct.
void require_distinct_labels(const FinSpace& s);

struct LinMap {
    FinSpace domain;
    FinSpace codomain;
    Matrix matrix;

    LinMap() = default;
    LinMap(FinSpace dom, FinSpace cod, Matrix m);
};

LinMap compose(const LinMap& g, const LinMap& f);
LinMap tensor(const LinMap& f, const LinMap& g);

/// Incremental reduced row echelon form over sparse rows.
class RowReducer {
public:
    explicit RowReducer(std::size_t ncols);

    /// Adds a row; returns true if it was independent of the rows so far.
    bool add(SparseVec row);
    /// Remainder of v after elimination against the current rows.
    SparseVec reduce(const SparseVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    /// Pivot columns in increasing order, with the matching reduced rows.
    std::vector<std::size_t> pivots() const;
    std::vector<SparseVec> rows_by_pivot() const;
    std::optional<std::size_t> row_for_pivot(std::size_t col) const;
    const SparseVec& row(std::size_t index) const { return rows_[index]; }

private:
    std::size_t ncols_;
    std::vector<SparseVec> rows_;
    std::vector<std::int64_t> pivot_row_;
    std::vector<std::uint32_t> pivot_col_;
};

/// A subspace of k^n in canonical form: the basis columns are the rows of the
/// reduced echelon form of any spanning set, so equal subspaces compare equal
/// and coordinates are read off at the pivot positions.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const Matrix& columns);
    static Subspace whole(std::size_t n, Field f = Field::rationals());
    static Subspace zero(std::size_t n, Field f = Field::rationals());

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    Field field() const { return basis_.field(); }
    /// ambient × dim inclusion.
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// dim × ambient left inverse of basis() (selection of pivot coordinates).
    Matrix retraction() const;
    /// Coordinates of vectors already known to lie in the subspace.
    Matrix coords(const Matrix& x) const { return x.select_rows(pivots_); }
    bool contains(const Matrix& x) const;
    bool contains(const Subspace& other) const;
    /// First column of x not in the subspace, or x.cols() if none.
    std::size_t first_outside(const Matrix& x) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct QuotientData {
    Subspace kernel;
    Matrix projection;                   // q × n
    Matrix section;                      // n × q
    std::vector<std::size_t> complement;  // ambient indices spanning the quotient
};

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);
bool is_bijective(const Matrix& m);
QuotientData quotient(std::size_t n, const Subspace& sub);
/// Inverse of a bijective square matrix; throws ShapeError otherwise.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// coefficients · x = target, with x the vector of unknowns.
struct AffineConstraint {
    std::string name;
    Matrix coefficients;
    Matrix target;
};

struct AffineResult {
    std::optional<Matrix> solution;
    /// Row combination y of the stacked system with yᵀA = 0 and yᵀb ≠ 0.
    std::optional<Matrix> certificate;
    bool feasible() const { return solution.has_value(); }
};

AffineResult solve_affine(const std::vector<AffineConstraint>& constraints, std::size_t unknowns, Field f);

/// Turns residual(X) = 0, affine in the entries of an r × c unknown matrix X
/// (flattened row-major), into a constraint by probing with unit matrices.
AffineConstraint linearize(std::string name, std::size_t rows, std::size_t cols, Field f,
                           const std::function<Matrix(const Matrix&)>& residual);

}  // namespace cringlab
