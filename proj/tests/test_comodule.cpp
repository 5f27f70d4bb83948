#include "doctest.h"

#include "cringlab/fixtures.hpp"
#include "generators.hpp"

using namespace cringlab;

TEST_CASE("comodule axioms")
{
    auto c = fixtures::grouplike(2);
    CHECK(check_comodule(regular(c, false, true)).ok());
    CHECK(check_comodule(regular(c)).ok());
    auto mc = fixtures::matrix_coalgebra(2);
    Comodule k2 = fixtures::matrix_comodule(mc, 2);
    CHECK(check_comodule(k2).ok());
    Comodule k2dual = dual_comodule(k2);
    CHECK(k2dual.left.has_value());
    CHECK(check_comodule(k2dual).ok());

    Comodule zero = make_comodule(c->space, std::nullopt, Coaction{c, Matrix(4, 2)});
    Report r = check_comodule(zero);
    CHECK_FALSE(r.passed("RightCounit"));
    CHECK(r.passed("RightCoassociativity"));
}

TEST_CASE("cotensor examples")
{
    auto c = fixtures::grouplike(2);
    Comodule cr = regular(c, false, true);
    Comodule cl = regular(c, true, false);
    Cotensor cc = cotensor(cr, cl);
    REQUIRE(cc.dim() == 2);
    // Ambient basis g1⊗g1, g1⊗g2, g2⊗g1, g2⊗g2.
    CHECK(cc.inclusion().column(0) == Matrix::unit(4, 0));
    CHECK(cc.inclusion().column(1) == Matrix::unit(4, 3));
    CHECK(cc.comodule.space.labels == std::vector<std::string>{"g1⊗g1", "g2⊗g2"});

    auto mc = fixtures::matrix_coalgebra(2);
    Comodule k2 = fixtures::matrix_comodule(mc, 2);
    Cotensor kk = cotensor(k2, dual_comodule(k2));
    CHECK(kk.dim() == 1);
    // The invariant vector is v1⊗v1* + v2⊗v2*.
    CHECK(kk.inclusion() == Matrix::vector({1, 0, 0, 1}));

    Cotensor kc = cotensor(k2, regular(mc, true, false));
    CHECK(kc.dim() == 2);
    CHECK(is_bijective(right_unitor(kc, *mc)));
}

TEST_CASE("bicomodule cotensor carries commuting coactions")
{
    auto mc = fixtures::matrix_coalgebra(2);
    Comodule c = regular(mc);
    Cotensor t = cotensor_chain({&c, &c, &c});
    CHECK(t.dim() == 4);
    CHECK(check_cotensor(t, {&c, &c, &c}).ok());
}

TEST_CASE("corestriction")
{
    auto c = fixtures::grouplike(2);
    CoalgebraMap idmap{c, c, Matrix::identity(2)};
    Comodule r = regular(c);
    Comodule same = corestrict(r, idmap);
    CHECK(same.right->matrix == r.right->matrix);
    CHECK(same.left->matrix == r.left->matrix);

    auto one = fixtures::grouplike(1);
    CoalgebraMap collapse{c, one, Matrix::row({1, 1})};
    REQUIRE(check_coalgebra_map(collapse).ok());
    Comodule trivial = corestrict(regular(c, false, true), collapse);
    CHECK(check_comodule(trivial).ok());
    CHECK(trivial.right->matrix == Matrix::identity(2));
}

TEST_CASE("injective retractions")
{
    auto h = fixtures::h4_coalgebra();
    Comodule d = regular(h, true, false);
    AffineResult r = injective_retraction(d);
    REQUIRE(r.feasible());
    Matrix delta = Matrix::unflatten(*r.solution, 4, 16);
    CHECK(delta * d.left->matrix == Matrix::identity(4));
    Comodule zero = make_comodule(FinSpace{"0", {}}, Coaction{h, Matrix(0, 0)}, std::nullopt);
    CHECK(injective_retraction(zero).feasible());
    CHECK(right_injective_retraction(regular(h, false, true)).feasible());
}

TEST_CASE("property: counit isomorphisms and coaction commuting on transported coalgebras")
{
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 20; ++trial) {
        Field f = trial % 2 ? Field::prime(3) : Field::rationals();
        CoalgebraPtr base = trial % 3 == 0 ? fixtures::matrix_coalgebra(2, f) : fixtures::grouplike(2 + trial % 3, f);
        auto c = gen::transport(*base, gen::random_invertible(rng, base->dim(), f));
        Comodule reg = regular(c);
        REQUIRE(check_comodule(reg).ok());
        Cotensor right = cotensor(right_part(reg), reg);
        Cotensor left = cotensor(reg, left_part(reg));
        CHECK(right.dim() == c->dim());
        CHECK(is_bijective(right_unitor(right, *c)));
        CHECK(is_bijective(left_unitor(left, *c)));
        Cotensor both = cotensor(reg, reg);
        CHECK(check_cotensor(both, {&reg, &reg}).ok());
    }
}
