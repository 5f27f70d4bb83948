#include "doctest.h"

#include "cringlab/fixtures.hpp"
#include "cringlab/galois.hpp"
#include "generators.hpp"

using namespace cringlab;

namespace {

CoalgebraMap identity_map(const CoalgebraPtr& c) { return CoalgebraMap{c, c, Matrix::identity(c->dim(), c->field())}; }

CoalgebraMap collapse(const CoalgebraPtr& c)
{
    return CoalgebraMap{c, fixtures::grouplike(1, c->field()), *c->counit};
}

// A = C⊗C over D = k for C grouplike of rank 2, with the upper triangular sub-C-ring.
struct Triangular {
    GaloisBase base;
    Subspace b;
    CRingPtr ring;
    RightModule m;
};

Triangular triangular(Field f = Field::rationals())
{
    auto c = fixtures::grouplike(2, f);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(c));
    CoalgebraPtr e = coendomorphism_coalgebra(ctx);
    GaloisBase base = make_galois_base(ctx, collapse(e));
    Subspace b = Subspace::span(hstack({Matrix::unit(4, 0, f), Matrix::unit(4, 1, f), Matrix::unit(4, 3, f)}));
    CRingPtr ring = sub_cring(*base.a.ring, b);
    RightModule m = restrict_module(base, ring, b);
    return Triangular{std::move(base), b, ring, std::move(m)};
}

void theorem_equivalences(const RightModule& m, const MatrixRingContext& ctx)
{
    GaloisReport g = beta(m, ctx);
    CHECK(g.report.ok());
    CHECK(chi_solver(m, g, ChiCodomain::tensor).feasible() == g.principal);
    CHECK(chi_solver(m, g, ChiCodomain::cotensor).feasible() == g.bijective);
    if (g.principal) CHECK(injective_retraction(left_part(m.ring->carrier)).feasible());
}

}  // namespace

TEST_CASE("coendomorphism coalgebra of a trivial context")
{
    auto mc = fixtures::matrix_coalgebra(2);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(mc));
    CoalgebraPtr e = coendomorphism_coalgebra(ctx);
    CHECK(e->dim() == 4);
    CHECK(check_coalgebra(*e).ok());
    // E ≅ C through the counit on the left factor.
    Matrix iso = kron(*mc->counit, Matrix::identity(4)) * ctx.mn.inclusion();
    REQUIRE(is_bijective(iso));
    CHECK(check_coalgebra_map(CoalgebraMap{e, mc, iso}).ok());
    MatrixRingContext same = context_over(ctx, identity_map(e));
    CHECK(verify_context(same).ok());
}

TEST_CASE("C over C□_C C is Galois and principal")
{
    for (CoalgebraPtr c : {fixtures::grouplike(2), fixtures::grouplike(3), fixtures::matrix_coalgebra(2)}) {
        MatrixRingContext ctx = trivial_context_from_map(identity_map(c));
        MatrixCRing a = build_matrix_cring(ctx);
        Report r("induced");
        LeftModule n = induced_left_action(ctx, a.m, &r);
        CHECK(r.ok());
        CHECK(n.action == a.n.action);
        GaloisReport g = beta(a.m, ctx);
        CHECK(g.report.ok());
        CHECK(g.coend.s.coalgebra->dim() == c->dim());
        CHECK(g.coend.relations.dim() == 0);
        CHECK(g.bijective);
        CHECK(g.principal);
        theorem_equivalences(a.m, ctx);
    }
}

TEST_CASE("full matrix ring over k collapses S to k")
{
    auto c = fixtures::grouplike(3);
    MatrixRingContext ctx = trivial_context_from_map(collapse(c));
    MatrixCRing a = build_matrix_cring(ctx);
    REQUIRE(a.ring->dim() == 9);
    GaloisReport g = beta(a.m, ctx);
    CHECK(g.report.ok());
    CHECK(g.coend.s.coalgebra->dim() == 1);
    CHECK(g.coend.relations.dim() == 2);
    CHECK(g.bijective);
    // β is the identity of C⊗C here.
    CHECK(g.beta == kron(Matrix::identity(3), Matrix::identity(3)));
    theorem_equivalences(a.m, ctx);
}

TEST_CASE("upper triangular sub-C-ring is not Galois")
{
    Triangular t = triangular();
    CHECK_FALSE(sub_cring_failure(*t.base.a.ring, t.b));
    GaloisReport g = beta(t.m, t.base.ctx);
    CHECK(g.report.ok());
    CHECK(g.image_in_cotensor);
    CHECK(g.coend.s.coalgebra->dim() == 1);
    CHECK(rank(g.beta) == 3);
    CHECK(g.coend.context.nm.dim() == 4);
    CHECK_FALSE(g.bijective);
    CHECK_FALSE(g.principal);
    CHECK_FALSE(chi_solver(t.m, g, ChiCodomain::tensor).feasible());
    CHECK_FALSE(chi_solver(t.m, g, ChiCodomain::cotensor).feasible());
    CHECK(x_of_b(t.base, t.b) == t.base.ker_pi);
}

TEST_CASE("characters and coinvariants")
{
    auto c = fixtures::grouplike(2);
    MatrixCRing a = build_matrix_cring(trivial_context_from_map(identity_map(c)));
    Character k = character_from_action(a.m);
    CHECK(k.kappa == Matrix::row({1, 1}));
    CHECK_FALSE(character_failure(*a.ring, k.kappa));
    CHECK(action_from_character(k).action == a.m.action);
    Coinvariants inv = coinvariant_coalgebra(k);
    CHECK(inv.ideal.subspace.dim() == 0);
    CHECK(inv.quotient.coalgebra->dim() == 2);
    CHECK(is_galois_cring(k).report.ok());

    MatrixCRing full = build_matrix_cring(trivial_context_from_map(collapse(c)));
    Character eps{full.ring, Matrix::row({1, 1, 1, 1})};
    CHECK_FALSE(character_failure(*full.ring, eps.kappa));
    Coinvariants i2 = coinvariant_coalgebra(eps);
    // κ(a₀)a₁ − a₋₁κ(a₀) on g1⊗g2 is g2 − g1.
    CHECK(i2.ideal.subspace == Subspace::span(Matrix::vector({1, -1})));
    CHECK(i2.quotient.coalgebra->dim() == 1);
    GaloisCRing gc = is_galois_cring(eps);
    CHECK(gc.report.ok());
    CHECK(gc.beta == Matrix::identity(4));
    CHECK(character_from_action(action_from_character(eps)).kappa == eps.kappa);

    // κ(g_i⊗g_j) = x_i/x_j is a character; I_κ is still spanned by the difference.
    Character scaled{full.ring, Matrix::row({1, 2, Scalar(1, 2), 1})};
    CHECK_FALSE(character_failure(*full.ring, scaled.kappa));
    CHECK(coinvariant_coalgebra(scaled).ideal.subspace.dim() == 1);
    CHECK(is_galois_cring(scaled).report.ok());

    Character doubled{full.ring, Matrix::row({2, 2, 2, 2})};
    CHECK(character_failure(*full.ring, doubled.kappa));
    CHECK_THROWS_AS(action_from_character(doubled), std::invalid_argument);

    Triangular t = triangular();
    GaloisCRing broken = is_galois_cring(Character{t.ring, Matrix::row({1, 1, 1})});
    CHECK_FALSE(broken.report.ok());
    CHECK_FALSE(broken.report.passed("Bijective"));
    CHECK(broken.report.passed("KappaCompatible"));
}

TEST_CASE("C Galois for A makes A a Galois C-ring")
{
    for (CoalgebraPtr c : {fixtures::grouplike(3), fixtures::matrix_coalgebra(2)}) {
        for (bool full : {false, true}) {
            MatrixRingContext ctx = trivial_context_from_map(full ? collapse(c) : identity_map(c));
            MatrixCRing a = build_matrix_cring(ctx);
            if (a.m.comodule.dim() != c->dim()) continue;
            MatrixRingContext ec = trivial_context_from_map(identity_map(c));
            RightModule mc = make_right_module(a.ring, ec.m, a.m.action_ambient());
            if (!is_galois(mc, ec)) continue;
            Character k = character_from_action(mc);
            CHECK(is_galois_cring(k).report.ok());
        }
    }
}

TEST_CASE("Galois connection over GF(2)")
{
    Field f = Field::prime(2);
    auto c4 = fixtures::grouplike(4, f);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(c4));
    GaloisBase base = make_galois_base(ctx, collapse(coendomorphism_coalgebra(ctx)));
    CHECK(base.a.ring->dim() == 16);
    CHECK(base.ker_pi.dim() == 3);
    Report r = connection_report(base);
    CHECK(r.ok());
    // Coideals inside the augmentation ideal of a grouplike coalgebra are the
    // partitions of the four grouplikes; the Bell number is 15.
    CHECK(r.value("subspaces of ker π") == "16");
    CHECK(r.value("subcoideals") == "15");
    CHECK(r.value("closed subcoideals") == "15");

    Triangular t = triangular(f);
    Report small = connection_report(t.base);
    CHECK(small.ok());
    CHECK(small.value("sub-C-rings") == "4");
    CHECK(small.value("Galois sub-C-rings") == "2");

    Triangular q = triangular();
    Report rational = connection_report(q.base);
    CHECK(rational.ok());
    CHECK(rational.find("Subcoideals")->status == Status::skipped);
}

TEST_CASE("A(X) at the extremes")
{
    auto c = fixtures::grouplike(3);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(c));
    GaloisBase base = make_galois_base(ctx, collapse(coendomorphism_coalgebra(ctx)));
    Intermediate top = a_of_x(base, base.ker_pi);
    CHECK(top.in_a.dim() == 9);
    Intermediate bottom = a_of_x(base, Subspace::zero(3));
    CHECK(bottom.in_a.dim() == 3);
    CHECK_THROWS_AS(a_of_x(base, Subspace::whole(3)), ShapeError);
    Subspace not_coideal = Subspace::span(Matrix::vector({1, 1, -2}));
    CHECK(base.ker_pi.contains(not_coideal));
    CHECK_THROWS_AS(a_of_x(base, not_coideal), NotACoideal);
}

TEST_CASE("enumerate subspaces")
{
    Field f = Field::prime(2);
    CHECK(enumerate_subspaces(Matrix::identity(3, f), 1000)->size() == 16);
    CHECK(enumerate_subspaces(Matrix::identity(4, f), 1000)->size() == 67);
    CHECK(enumerate_subspaces(Matrix::identity(2, Field::prime(3)), 1000)->size() == 6);
    CHECK_FALSE(enumerate_subspaces(Matrix::identity(4, f), 20).has_value());
}

TEST_CASE("property: Galois equivalences on transported coalgebras")
{
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 8; ++trial) {
        Field f = trial % 2 ? Field::prime(7) : Field::rationals();
        CoalgebraPtr base = trial % 4 == 0 ? fixtures::matrix_coalgebra(2, f) : fixtures::grouplike(2 + trial % 2, f);
        auto c = gen::transport(*base, gen::random_invertible(rng, base->dim(), f));
        MatrixRingContext ctx = trivial_context_from_map(trial % 3 ? identity_map(c) : collapse(c));
        MatrixCRing a = build_matrix_cring(ctx);
        GaloisReport g = beta(a.m, ctx);
        CHECK(g.bijective);
        theorem_equivalences(a.m, ctx);
        Character k = character_from_action(action_from_character(character_from_action(
            make_right_module(a.ring, trivial_context_from_map(identity_map(c)).m, a.m.action_ambient()))));
        CHECK_FALSE(character_failure(*a.ring, k.kappa));
    }
}
