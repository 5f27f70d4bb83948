#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cringlab/scalar.hpp"

namespace cringlab {

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// dst += c * src
void axpy(SparseVec& dst, const Scalar& c, const SparseVec& src);
Scalar lookup(const SparseVec& v, std::uint32_t index);

/// Exact matrix over a Field, stored column by column. Structure constants are
/// very sparse, so only nonzero entries are kept.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

    static Matrix identity(std::size_t n, Field field = Field::rationals());
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field field = Field::rationals());
    static Matrix from_columns(std::size_t rows, std::vector<SparseVec> columns, Field field);
    /// Column vector with the given entries.
    static Matrix vector(const std::vector<Scalar>& entries, Field field = Field::rationals());
    /// 1 × n row vector.
    static Matrix row(const std::vector<Scalar>& entries, Field field = Field::rationals());
    /// n × 1 basis vector e_i.
    static Matrix unit(std::size_t n, std::size_t i, Field field = Field::rationals());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    const SparseVec& col(std::size_t j) const { return data_[j]; }
    Scalar at(std::size_t i, std::size_t j) const;
    std::size_t nnz() const;
    bool is_zero() const;

    void set(std::size_t i, std::size_t j, const Scalar& value);

    Matrix transpose() const;
    Matrix column(std::size_t j) const;
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix select_rows(std::span<const std::size_t> indices) const;
    Matrix select_cols(std::span<const std::size_t> indices) const;
    /// Same entries, reinterpreted over f.
    Matrix in(Field f) const;
    /// Row-major flattening of an r × c matrix into an (r·c) × 1 vector, and back.
    Matrix flatten() const;
    static Matrix unflatten(const Matrix& v, std::size_t rows, std::size_t cols);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// First column where the two matrices differ, or cols() if equal.
    std::size_t first_difference(const Matrix& o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<SparseVec> data_;
};

Matrix hstack(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);
Matrix hstack(std::initializer_list<Matrix> blocks);
Matrix vstack(std::initializer_list<Matrix> blocks);

/// Kronecker product with the x-index-major basis ordering of X⊗Y.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(std::initializer_list<Matrix> factors);
/// I_left ⊗ f ⊗ I_right.
Matrix embed(std::size_t left, const Matrix& f, std::size_t right);
/// X⊗Y → Y⊗X.
Matrix twist(std::size_t x, std::size_t y, Field field = Field::rationals());
/// Reorders tensor factors: factor i of the domain becomes factor position perm[i] of the codomain.
Matrix permute_factors(std::span<const std::size_t> dims, std::span<const std::size_t> perm,
                       Field field = Field::rationals());

}  // namespace cringlab
