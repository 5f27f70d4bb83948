#include "doctest.h"

#include <set>

#include "cringlab/fixtures.hpp"
#include "cringlab/polynomial.hpp"
#include "generators.hpp"

using namespace cringlab;

namespace {

Matrix col(std::vector<Scalar> v, Field f = Field::rationals()) { return Matrix::vector(v, f); }

}  // namespace

TEST_CASE("coalgebra axioms")
{
    CHECK(check_coalgebra(*fixtures::grouplike(2)).ok());
    CHECK(check_coalgebra(*fixtures::matrix_coalgebra(2)).ok());
    CHECK(check_coalgebra(*fixtures::h4_coalgebra()).ok());

    auto g = fixtures::grouplike(2);
    auto broken = make_coalgebra(g->space, g->comult, Matrix(1, 2));
    Report r = check_coalgebra(*broken);
    CHECK_FALSE(r.ok());
    REQUIRE(r.find("CounitLaw") != nullptr);
    CHECK(r.find("CounitLaw")->witness == "g1");
    CHECK(r.passed("Coassociativity"));
}

TEST_CASE("algebra axioms")
{
    CHECK(check_algebra(*fixtures::group_algebra_z2()).ok());
    CHECK(check_algebra(*fixtures::h4_algebra()).ok());
    CHECK(check_algebra(*fixtures::dual_numbers()).ok());
    CHECK(check_algebra(*fixtures::matrix_algebra(2)).ok());

    auto kz2 = fixtures::group_algebra_z2();
    auto broken = make_algebra(kz2->space, kz2->mult, Matrix(2, 1));
    Report r = check_algebra(*broken);
    CHECK_FALSE(r.passed("UnitLaw"));
    CHECK(r.passed("Associativity"));
}

TEST_CASE("sweedler products by hand")
{
    auto h = fixtures::h4_algebra();
    auto e = [](std::size_t i) { return Matrix::unit(4, i); };
    auto times = [&](std::size_t i, std::size_t j) { return h->mult * kron(e(i), e(j)); };
    // Indices 0..3 stand for 1, g, x, gx.
    CHECK(times(1, 1) == e(0));
    CHECK(times(2, 2).is_zero());
    CHECK(times(1, 2) == e(3));
    CHECK(times(2, 1) == Scalar(-1) * e(3));
    CHECK(times(3, 1) == Scalar(-1) * e(2));
    CHECK(times(3, 3).is_zero());
    CHECK(times(2, 3).is_zero());
    CHECK(times(3, 2).is_zero());
    auto s = fixtures::h4_antipode();
    CHECK(s * fixtures::h4_antipode_inverse() == Matrix::identity(4));
}

TEST_CASE("duality")
{
    auto kz2 = fixtures::group_algebra_z2();
    auto dc = dual_coalgebra(*kz2);
    CHECK(check_coalgebra(*dc).ok());
    // Transposed table of kZ2: Δ1* = 1*⊗1* + g*⊗g*, Δg* = 1*⊗g* + g*⊗1*.
    CHECK(dc->comult.column(0) == col({1, 0, 0, 1}));
    CHECK(dc->comult.column(1) == col({0, 1, 1, 0}));
    CHECK(dc->space.labels == std::vector<std::string>{"1*", "g*"});
    auto back = dual_algebra(*dc);
    CHECK(back->mult == kz2->mult);
    CHECK(back->unit == kz2->unit);
    CHECK(back->space == kz2->space);

    auto m2 = dual_coalgebra(*fixtures::matrix_algebra(2));
    auto mc = fixtures::matrix_coalgebra(2);
    CHECK(m2->comult == mc->comult);
    CHECK(*m2->counit == *mc->counit);
}

TEST_CASE("coideals and quotients")
{
    auto mc = fixtures::matrix_coalgebra(2);
    // Basis order e11, e12, e21, e22.
    Subspace i = Subspace::span(hstack({col({0, 1, 0, 0}), col({0, 0, 1, 0}), col({1, 0, 0, -1})}));
    REQUIRE(is_coideal(*mc, i));
    auto q = quotient_coalgebra(mc, i);
    REQUIRE(q.coalgebra->dim() == 1);
    CHECK(check_coalgebra(*q.coalgebra).ok());
    CHECK(q.coalgebra->comult == Matrix::identity(1));
    CHECK(*q.coalgebra->counit == Matrix::identity(1));
    CHECK(check_coalgebra_map(q.projection).ok());

    auto zero = quotient_coalgebra(mc, Subspace::zero(4));
    CHECK(zero.coalgebra->comult == mc->comult);
    CHECK_THROWS_AS(quotient_coalgebra(mc, Subspace::whole(4)), NotACoideal);

    // span{e12} alone: Δe12 = e11⊗e12 + e12⊗e22 is in I⊗C + C⊗I, but ε vanishes, so it is a coideal.
    CHECK(is_coideal(*mc, Subspace::span(col({0, 1, 0, 0}))));
    // span{e11}: ε(e11) = 1.
    auto why = coideal_failure(*mc, Subspace::span(col({1, 0, 0, 0})));
    REQUIRE(why.has_value());
    CHECK(why->find("e11") != std::string::npos);
}

TEST_CASE("firmness")
{
    CHECK(is_firm(*fixtures::grouplike(2)).firm);
    CHECK(is_firm(*fixtures::matrix_coalgebra(2)).firm);
    auto zero = make_coalgebra(FinSpace{"D", {"d"}}, Matrix(1, 1), std::nullopt);
    CHECK_FALSE(is_firm(*zero).firm);
    auto line = make_coalgebra(FinSpace{"D", {"d"}}, Matrix::identity(1), std::nullopt);
    FirmResult fr = is_firm(*line);
    CHECK(fr.firm);
    CHECK(fr.square.dim() == 1);
    CHECK(fr.nabla == Matrix::identity(1));
}

TEST_CASE("separability")
{
    auto e = separability_element(*fixtures::group_algebra_z2());
    REQUIRE(e.has_value());
    // Hand solution: e = ½(1⊗1 + g⊗g) in basis 1⊗1, 1⊗g, g⊗1, g⊗g.
    CHECK(*e == col({Scalar(1, 2), 0, 0, Scalar(1, 2)}));
    CHECK(is_separability_element(*fixtures::group_algebra_z2(), *e));
    CHECK_FALSE(separability_element(*fixtures::group_algebra_z2(Field::prime(2))).has_value());
    CHECK(separability_element(*fixtures::group_algebra_z2(Field::prime(3))).has_value());

    auto k = make_algebra(FinSpace{"k", {"1"}}, Matrix::identity(1), Matrix::identity(1));
    CHECK(separability_element(*k) == std::optional<Matrix>(Matrix::identity(1)));
    CHECK_FALSE(separability_element(*fixtures::dual_numbers()).has_value());
    CHECK_FALSE(separability_element(*fixtures::h4_algebra()).has_value());
}

TEST_CASE("frobenius forms")
{
    auto kz2 = fixtures::group_algebra_z2();
    CHECK(is_frobenius_form(*kz2, Matrix::row({1, 0})));
    auto h4 = fixtures::h4_algebra();
    CHECK(is_frobenius_form(*h4, Matrix::row({0, 0, 0, 1})));
    CHECK_FALSE(is_frobenius_form(*h4, Matrix::row({1, 0, 0, 0})));
    auto dn = fixtures::dual_numbers();
    CHECK(is_frobenius_form(*dn, Matrix::row({0, 1})));
    CHECK_FALSE(is_frobenius_form(*dn, Matrix::row({1, 0})));

    FrobeniusResult r = frobenius_form(*h4);
    REQUIRE(r.form.has_value());
    CHECK(r.decided);
    CHECK(is_frobenius_form(*h4, *r.form));

    // k[x,y]/(x,y)²: the x and y rows of any Gram matrix are proportional, so none is invertible.
    Matrix mult(3, 9);
    mult.set(0, 0, 1);
    mult.set(1, 1, 1);
    mult.set(1, 3, 1);
    mult.set(2, 2, 1);
    mult.set(2, 6, 1);
    auto local = make_algebra(FinSpace{"L", {"1", "x", "y"}}, mult, Matrix::unit(3, 0));
    REQUIRE(check_algebra(*local).ok());
    FrobeniusResult none = frobenius_form(*local);
    CHECK(none.decided);
    CHECK_FALSE(none.form.has_value());
    CHECK(none.path == "symbolic");
}

TEST_CASE("frobenius symbolic path over a small field")
{
    // k×k×k has Gram matrix diag(x1, x2, x3); no single dual-basis functional works.
    Field f2 = Field::prime(2);
    Matrix mult(3, 9, f2);
    for (std::size_t i = 0; i < 3; ++i) mult.set(i, i * 3 + i, Scalar(1).in(f2));
    auto a = make_algebra(FinSpace{"k3", {"e1", "e2", "e3"}}, mult, Matrix::vector({1, 1, 1}, f2));
    REQUIRE(check_algebra(*a).ok());
    FrobeniusResult r = frobenius_form(*a);
    REQUIRE(r.form.has_value());
    CHECK(r.path == "symbolic");
    CHECK(*r.form == Matrix::row({1, 1, 1}, f2));
}

TEST_CASE("polynomial determinant and points")
{
    Field q = Field::rationals();
    auto x = Polynomial::variable(2, 0, q);
    auto y = Polynomial::variable(2, 1, q);
    // det [[x, y], [y, x]] = x² - y²
    Polynomial d = determinant({{x, y}, {y, x}});
    CHECK(d == (x * x - y * y));
    CHECK(d.evaluate({Scalar(3), Scalar(2)}) == Scalar(5));
    auto p = nonvanishing_point(d, q);
    REQUIRE(p.point.has_value());
    CHECK_FALSE(d.evaluate(*p.point).is_zero());
    // x² + x vanishes on all of GF(2) while being a nonzero polynomial.
    Field f2 = Field::prime(2);
    auto t = Polynomial::variable(1, 0, f2);
    auto s = nonvanishing_point(t * t + t, f2);
    CHECK(s.decided);
    CHECK_FALSE(s.point.has_value());
}

TEST_CASE("property: transported coalgebras and their quotients stay valid")
{
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + trial % 4;
        Field f = trial % 3 == 0 ? Field::prime(5) : Field::rationals();
        auto base = fixtures::grouplike(n, f);
        Matrix p = gen::random_invertible(rng, n, f);
        auto c = gen::transport(*base, p);
        REQUIRE(check_coalgebra(*c).ok());
        // Differences of grouplikes in the same block span a coideal.
        auto block = gen::random_partition(rng, n);
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (block[i] == block[j]) gens.push_back(inverse(p) * (Matrix::unit(n, i, f) - Matrix::unit(n, j, f)));
        Subspace i = gens.empty() ? Subspace::zero(n, f) : Subspace::span(hstack(std::span<const Matrix>(gens)));
        REQUIRE(is_coideal(*c, i));
        auto q = quotient_coalgebra(c, i);
        std::set<std::size_t> distinct(block.begin(), block.end());
        CHECK(q.coalgebra->dim() == distinct.size());
        CHECK(check_coalgebra(*q.coalgebra).ok());
        CHECK(check_coalgebra_map(q.projection).ok());
    }
}

TEST_CASE("property: double dual returns identical constants")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Field f = trial % 2 ? Field::prime(7) : Field::rationals();
        auto a = gen::transport(*fixtures::h4_algebra(f), gen::random_invertible(rng, 4, f));
        REQUIRE(check_algebra(*a).ok());
        auto dd = dual_algebra(*dual_coalgebra(*a));
        CHECK(dd->mult == a->mult);
        CHECK(dd->unit == a->unit);
        CHECK(check_coalgebra(*dual_coalgebra(*a)).ok());
    }
}

TEST_CASE("property: separability and frobenius certificates verify")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        Field f = trial % 2 ? Field::prime(3) : Field::rationals();
        auto a = gen::transport(*fixtures::matrix_algebra(2, f), gen::random_invertible(rng, 4, f));
        auto e = separability_element(*a);
        REQUIRE(e.has_value());
        CHECK(is_separability_element(*a, *e));
        auto fr = frobenius_form(*a);
        REQUIRE(fr.form.has_value());
        CHECK(is_bijective(gram_matrix(*a, *fr.form)));
    }
}
