#pragma once

#include <random>

#include "cringlab/coalgebra.hpp"

namespace gen {

using cringlab::Field;
using cringlab::Matrix;
using cringlab::Scalar;

inline Scalar small_scalar(std::mt19937_64& rng, Field f, long long bound = 3)
{
    std::uniform_int_distribution<long long> d(-bound, bound);
    return Scalar(d(rng)).in(f);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Field f, double density = 0.6)
{
    std::bernoulli_distribution keep(density);
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) m.set(i, j, small_scalar(rng, f));
    return m;
}

/// Unit lower triangular times unit upper triangular: always invertible.
inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, Field f)
{
    Matrix l = Matrix::identity(n, f);
    Matrix u = Matrix::identity(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l.set(i, j, small_scalar(rng, f, 2));
            u.set(j, i, small_scalar(rng, f, 2));
        }
    return l * u;
}

/// Same coalgebra in the basis given by the columns of p.
inline cringlab::CoalgebraPtr transport(const cringlab::Coalgebra& c, const Matrix& p)
{
    Matrix pinv = cringlab::inverse(p);
    std::optional<Matrix> counit;
    if (c.counit) counit = *c.counit * p;
    return cringlab::make_coalgebra(c.space, kron(pinv, pinv) * c.comult * p, counit);
}

inline cringlab::AlgebraPtr transport(const cringlab::Algebra& a, const Matrix& p)
{
    Matrix pinv = cringlab::inverse(p);
    return cringlab::make_algebra(a.space, pinv * a.mult * kron(p, p), pinv * a.unit);
}

inline std::vector<std::size_t> random_partition(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::size_t> block(n);
    for (std::size_t i = 0; i < n; ++i) block[i] = std::uniform_int_distribution<std::size_t>(0, i)(rng);
    return block;
}

}  // namespace gen
