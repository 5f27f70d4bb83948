#include "doctest.h"

#include "cringlab/context.hpp"
#include "cringlab/fixtures.hpp"
#include "generators.hpp"

using namespace cringlab;

namespace {

CoalgebraMap identity_map(const CoalgebraPtr& c) { return CoalgebraMap{c, c, Matrix::identity(c->dim(), c->field())}; }

CoalgebraMap collapse(const CoalgebraPtr& c)
{
    auto one = fixtures::grouplike(1, c->field());
    return CoalgebraMap{c, one, *c->counit};
}

}  // namespace

TEST_CASE("trivial contexts verify")
{
    auto c2 = fixtures::grouplike(2);
    CHECK(verify_context(trivial_context_from_map(identity_map(c2))).ok());
    CHECK(verify_context(trivial_context_from_map(collapse(c2))).ok());
    auto mc = fixtures::matrix_coalgebra(2);
    CHECK(verify_context(trivial_context_from_map(identity_map(mc))).ok());
    CHECK(verify_context(trivial_context_from_map(collapse(mc))).ok());

    MatrixRingContext ctx = trivial_context_from_map(identity_map(c2));
    ctx.sigma = Scalar(2) * ctx.sigma;
    Report r = verify_context(ctx);
    CHECK_FALSE(r.passed("UnitTriangle"));
    CHECK_FALSE(r.passed("CounitTriangle"));
    CHECK(r.passed("Sigma.LeftColinear"));

    CoalgebraMap bad{c2, c2, Matrix::from_rows({{1, 0}, {0, 0}})};
    CHECK_THROWS_AS(trivial_context_from_map(bad), std::invalid_argument);
}

TEST_CASE("trivial context over a quotient of the dual of H4")
{
    auto h4d = dual_coalgebra(*fixtures::h4_algebra());
    // Restriction to the subalgebra span{1, g} kills x* and gx*.
    Subspace i = Subspace::span(hstack({Matrix::unit(4, 2), Matrix::unit(4, 3)}));
    auto q = quotient_coalgebra(h4d, i);
    CHECK(q.coalgebra->dim() == 2);
    MatrixRingContext ctx = trivial_context_from_map(q.projection);
    CHECK(verify_context(ctx).ok());
    MatrixCRing a = build_matrix_cring(ctx);
    CHECK(check_cring(*a.ring).ok());
    CHECK(a.ring->dim() == 8);
}

TEST_CASE("matrix C-ring of a trivial context")
{
    auto c2 = fixtures::grouplike(2);
    MatrixCRing a = build_matrix_cring(trivial_context_from_map(identity_map(c2)));
    REQUIRE(a.ring->dim() == 2);
    CHECK(check_cring(*a.ring).ok());
    CHECK(check_right_module(a.m).ok());
    CHECK(check_left_module(a.n).ok());
    // Hand computation: A = span{g1⊗g1, g2⊗g2} and the product is diagonal.
    CHECK(a.ring->carrier.space.labels == std::vector<std::string>{"g1⊗g1", "g2⊗g2"});
    Matrix mu = a.ring->mult_ambient();
    CHECK(mu * kron(Matrix::unit(2, 0), Matrix::unit(2, 0)) == Matrix::unit(2, 0));
    CHECK(mu * kron(Matrix::unit(2, 1), Matrix::unit(2, 1)) == Matrix::unit(2, 1));
    CHECK(a.ring->unit == Matrix::identity(2));

    MatrixCRing full = build_matrix_cring(trivial_context_from_map(collapse(c2)));
    CHECK(full.ring->dim() == 4);
    CHECK(check_cring(*full.ring).ok());

    auto mc = fixtures::matrix_coalgebra(2);
    MatrixCRing m = build_matrix_cring(trivial_context_from_map(identity_map(mc)));
    CHECK(m.ring->dim() == 4);
    CHECK(check_cring(*m.ring).ok());

    MatrixRingContext broken = trivial_context_from_map(identity_map(c2));
    broken.tau = Matrix(2, 4);
    CHECK_THROWS_AS(build_matrix_cring(broken), ContextNotVerified);
}

TEST_CASE("doubled product breaks the unit law")
{
    auto c2 = fixtures::grouplike(2);
    MatrixCRing a = build_matrix_cring(trivial_context_from_map(identity_map(c2)));
    CRingPtr doubled = make_cring(a.ring->coalgebra, a.ring->carrier, Scalar(2) * a.ring->mult_ambient(), a.ring->unit);
    Report r = check_cring(*doubled);
    CHECK_FALSE(r.passed("RightUnit"));
    CHECK_FALSE(r.passed("LeftUnit"));
}

TEST_CASE("completion solvers")
{
    auto mc = fixtures::matrix_coalgebra(2);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(mc));
    Completion tau = complete_tau_given_sigma(ctx);
    REQUIRE(tau.context.has_value());
    CHECK(verify_context(*tau.context).ok());
    CHECK(tau.context->tau_hat() * ctx.mn.inclusion() == ctx.tau_hat() * ctx.mn.inclusion());
    CHECK(tau.bijective);

    MatrixRingContext zero = ctx;
    zero.sigma = Matrix(ctx.sigma.rows(), ctx.sigma.cols());
    Completion none = complete_tau_given_sigma(zero);
    CHECK_FALSE(none.context.has_value());
    CHECK(none.solve.certificate.has_value());

    auto c2 = fixtures::grouplike(2);
    MatrixRingContext g = trivial_context_from_map(collapse(c2));
    Completion sigma = complete_sigma_given_tau(g);
    REQUIRE(sigma.context.has_value());
    CHECK(verify_context(*sigma.context).ok());
}

TEST_CASE("adjunction triangles")
{
    auto mc = fixtures::matrix_coalgebra(2);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(mc));
    CHECK(adjunction_triangles(ctx, regular(mc, false, true)).ok());
    CHECK(adjunction_triangles(ctx, fixtures::matrix_comodule(mc, 2)).ok());
    MatrixRingContext broken = ctx;
    broken.tau = Scalar(3) * broken.tau;
    Report r = adjunction_triangles(broken, regular(mc, false, true));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("CounitAfterUnit")->witness.empty());
}

TEST_CASE("firm contexts")
{
    auto c2 = fixtures::grouplike(2);
    MatrixRingContext triv = trivial_context_from_map(identity_map(c2));
    FirmContext fc = make_firm_context(triv);
    Report r;
    CRingPtr firm = build_firm_cring(fc, &r);
    CHECK(r.ok());
    CHECK(firm->mult == build_matrix_cring(triv).ring->mult);

    auto d = make_coalgebra(FinSpace{"D", {"d"}}, Matrix::identity(1), std::nullopt);
    auto k = fixtures::grouplike(1);
    Comodule n = make_comodule(FinSpace{"N", {"d"}}, Coaction{k, Matrix::identity(1)}, Coaction{d, Matrix::identity(1)});
    Comodule m = make_comodule(FinSpace{"M", {"d"}}, Coaction{d, Matrix::identity(1)}, Coaction{k, Matrix::identity(1)});
    FirmContext line = make_firm_context(make_context(k, d, n, m, Matrix::identity(1), Matrix::identity(1)));
    CHECK(verify_firm_context(line).ok());
    Report er;
    CoalgebraPtr e = build_firm_e(line, &er);
    CHECK(er.ok());
    CHECK(e->dim() == 1);
    Report ar;
    build_firm_cring(line, &ar);
    CHECK(ar.ok());

    auto zero = make_coalgebra(FinSpace{"D", {"d"}}, Matrix(1, 1), std::nullopt);
    Comodule n0 = make_comodule(FinSpace{"N", {"d"}}, Coaction{k, Matrix::identity(1)}, Coaction{zero, Matrix(1, 1)});
    Comodule m0 = make_comodule(FinSpace{"M", {"d"}}, Coaction{zero, Matrix(1, 1)}, Coaction{k, Matrix::identity(1)});
    CHECK_THROWS_AS(make_firm_context(make_context(k, zero, n0, m0, Matrix::identity(1), Matrix::identity(1))), ShapeError);
}

TEST_CASE("property: trivial contexts on transported coalgebras")
{
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        Field f = trial % 2 ? Field::prime(5) : Field::rationals();
        CoalgebraPtr base = trial % 3 == 0 ? fixtures::matrix_coalgebra(2, f) : fixtures::grouplike(2 + trial % 2, f);
        auto c = gen::transport(*base, gen::random_invertible(rng, base->dim(), f));
        MatrixRingContext ctx = trivial_context_from_map(identity_map(c));
        REQUIRE(verify_context(ctx).ok());
        MatrixCRing a = build_matrix_cring(ctx);
        CHECK(check_cring(*a.ring).ok());
        CHECK(check_right_module(a.m).ok());
        CHECK(check_left_module(a.n).ok());
        CHECK(adjunction_triangles(ctx, regular(c, false, true)).ok());
        CHECK(a.ring->dim() == c->dim());
    }
}
