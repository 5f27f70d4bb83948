#include "cringlab/fixtures.hpp"

namespace cringlab::fixtures {

namespace {

/// h4 basis index of g^a x^b.
std::size_t h4_index(int a, int b) { return static_cast<std::size_t>(a + 2 * b); }

}  // namespace

CoalgebraPtr grouplike(std::size_t n, Field f)
{
    FinSpace s = FinSpace::numbered("C" + std::to_string(n), n, "g");
    Matrix comult(n * n, n, f);
    Matrix counit(1, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        comult.set(i * n + i, i, Scalar(1).in(f));
        counit.set(0, i, Scalar(1).in(f));
    }
    return make_coalgebra(std::move(s), std::move(comult), std::move(counit));
}

CoalgebraPtr matrix_coalgebra(std::size_t n, Field f)
{
    FinSpace s{"Mc" + std::to_string(n), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    std::size_t d = n * n;
    Matrix comult(d * d, d, f);
    Matrix counit(1, d, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) comult.set((i * n + k) * d + (k * n + j), i * n + j, Scalar(1).in(f));
            if (i == j) counit.set(0, i * n + j, Scalar(1).in(f));
        }
    return make_coalgebra(std::move(s), std::move(comult), std::move(counit));
}

AlgebraPtr matrix_algebra(std::size_t n, Field f)
{
    FinSpace s{"M" + std::to_string(n), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    std::size_t d = n * n;
    Matrix mult(d, d * d, f);
    Matrix unit(d, 1, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) mult.set(i * n + l, (i * n + j) * d + (j * n + l), Scalar(1).in(f));
            if (i == j) unit.set(i * n + j, 0, Scalar(1).in(f));
        }
    return make_algebra(std::move(s), std::move(mult), std::move(unit));
}

AlgebraPtr group_algebra_z2(Field f)
{
    Matrix mult(2, 4, f);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) mult.set((a + b) % 2, a * 2 + b, Scalar(1).in(f));
    return make_algebra(FinSpace{"kZ2", {"1", "g"}}, std::move(mult), Matrix::unit(2, 0, f));
}

AlgebraPtr dual_numbers(Field f)
{
    Matrix mult(2, 4, f);
    mult.set(0, 0, Scalar(1).in(f));
    mult.set(1, 1, Scalar(1).in(f));
    mult.set(1, 2, Scalar(1).in(f));
    return make_algebra(FinSpace{"k[t]/t2", {"1", "t"}}, std::move(mult), Matrix::unit(2, 0, f));
}

AlgebraPtr h4_algebra(Field f)
{
    Matrix mult(4, 16, f);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (b + d >= 2) continue;
                    // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
                    long long sign = (b * c) % 2 ? -1 : 1;
                    mult.set(h4_index((a + c) % 2, b + d), h4_index(a, b) * 4 + h4_index(c, d), Scalar(sign).in(f));
                }
    return make_algebra(FinSpace{"H4", {"1", "g", "x", "gx"}}, std::move(mult), Matrix::unit(4, 0, f));
}

CoalgebraPtr h4_coalgebra(Field f)
{
    Matrix comult(16, 4, f);
    auto put = [&](std::size_t src, std::size_t l, std::size_t r) { comult.set(l * 4 + r, src, Scalar(1).in(f)); };
    put(0, 0, 0);
    put(1, 1, 1);
    put(2, 2, 0);
    put(2, 1, 2);
    put(3, 3, 1);
    put(3, 0, 3);
    Matrix counit = Matrix::row({1, 1, 0, 0}, f);
    return make_coalgebra(FinSpace{"H4", {"1", "g", "x", "gx"}}, std::move(comult), std::move(counit));
}

Matrix h4_antipode(Field f)
{
    return Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}, f);
}

Matrix h4_antipode_inverse(Field f)
{
    return Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}, f);
}

Comodule matrix_comodule(const CoalgebraPtr& mc, std::size_t n)
{
    Field f = mc->field();
    std::size_t d = n * n;
    Matrix rho(n * d, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rho.set(j * d + (j * n + i), i, Scalar(1).in(f));
    return make_comodule(FinSpace::numbered("k" + std::to_string(n), n, "v"), std::nullopt, Coaction{mc, rho});
}

}  // namespace cringlab::fixtures
