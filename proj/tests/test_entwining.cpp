#include "doctest.h"

#include "cringlab/entwining.hpp"
#include "cringlab/fixtures.hpp"
#include "generators.hpp"

using namespace cringlab;

namespace {

Matrix incl_a(Field f = Field::rationals()) { return fixtures::h4_projection(f).transpose(); }

// C = k·g1 ⊕ k·g2 over the dual numbers, with t sending g2 to g1 and g1 to 0.
Matrix nilpotent_action()
{
    Matrix act(2, 4);
    act.set(0, 0, 1);  // g1·1
    act.set(1, 2, 1);  // g2·1
    act.set(0, 3, 1);  // g2·t
    return act;
}

WeakEntwinedModule free_h4_module(std::size_t n)
{
    auto s = fixtures::h4_entwining();
    // H⊗V⊗A → H⊗A⊗V
    const std::size_t dims[] = {4, n, 2};
    const std::size_t perm[] = {0, 2, 1};
    Matrix act = kron(fixtures::h4_action(), Matrix::identity(n)) * permute_factors(dims, perm);
    const std::size_t cdims[] = {4, 4, n};
    const std::size_t cperm[] = {0, 2, 1};
    Matrix co = permute_factors(cdims, cperm) * kron(s.right.c->comult, Matrix::identity(n));
    return WeakEntwinedModule{tensor(s.right.c->space, FinSpace::numbered("V", n)), act, co};
}

}  // namespace

TEST_CASE("flip is an invertible entwining")
{
    for (Field f : {Field::rationals(), Field::prime(5)}) {
        auto s = fixtures::flip_entwining(fixtures::group_algebra_z2(f), fixtures::matrix_coalgebra(2, f));
        CHECK(check_right_we(s.right).ok());
        CHECK(check_left_we(s.left).ok());
        CHECK(check_invertible(s).ok());
        Projections pr = projections(s.right);
        CHECK(pr.p_bar == Matrix::identity(8, f));
        CHECK(pr.p == Matrix::identity(8, f));
        Report r;
        EntwiningCRing a = cring_from_we(s.right, &r);
        CHECK(r.ok());
        CHECK(a.ring->dim() == 8);
        CHECK(iso_psi_restrictions(s).ok());
    }
}

TEST_CASE("zero ψ is a degenerate weak entwining")
{
    auto c = fixtures::grouplike(2);
    auto a = fixtures::dual_numbers();
    RightWeakEntwining zero = make_right_we(a, c, Matrix(4, 4));
    CHECK(check_right_we(zero).ok());
    Report r;
    EntwiningCRing ring = cring_from_we(zero, &r);
    CHECK(ring.ring->dim() == 0);
    CHECK_THROWS_AS(make_right_we(a, c, Matrix(4, 3)), ShapeError);
}

TEST_CASE("non-multiplicative twist breaks the counit axiom")
{
    auto c = fixtures::grouplike(2);
    auto a = fixtures::dual_numbers();
    // ψ(c⊗a) = θ(a)⊗c with θ(1) = 1 and θ(t) = 0
    Matrix theta = Matrix::from_rows({{1, 0}, {0, 0}});
    RightWeakEntwining s = make_right_we(a, c, kron(theta, Matrix::identity(2)) * twist(2, 2));
    Report r = check_right_we(s);
    CHECK_FALSE(r.passed("WE2"));
    CHECK(r.find("WE2")->witness == "g1⊗t");
    CHECK_THROWS_AS(cring_from_we(s), std::invalid_argument);
}

TEST_CASE("Sweedler entwining")
{
    auto s = fixtures::h4_entwining();
    Report inv = check_invertible(s);
    CHECK(inv.ok());
    CHECK(inv.value("Right.rank p̄_R") == "8");
    CHECK(projections(s.right).p_bar == Matrix::identity(8));

    Report rr;
    EntwiningCRing a = cring_from_we(s.right, &rr);
    CHECK(rr.ok());
    CHECK(a.ring->dim() == 8);
    Report lr;
    EntwiningCRing b = cring_from_left_we(s.left, &lr);
    CHECK(lr.ok());
    CHECK(b.ring->dim() == 8);
    CHECK(iso_psi_restrictions(s).ok());

    Matrix act = fixtures::h4_action();
    CHECK(check_entwined_module(s.right, regular_entwined(s.right, act)).ok());

    // a·h = hS⁻¹(a)
    Report lar("left action");
    Matrix l = induced_left_action_on_c(s, act, &lar);
    CHECK(lar.ok());
    auto h = fixtures::h4_algebra();
    Matrix expected = h->mult * kron(Matrix::identity(4), fixtures::h4_antipode_inverse() * incl_a()) * twist(2, 4);
    CHECK(l == expected);
    CHECK(l * kron(Matrix::unit(2, 0), Matrix::identity(4)) == Matrix::identity(4));
}

TEST_CASE("Sweedler entwining as a coextension")
{
    auto s = fixtures::h4_entwining();
    Matrix act = fixtures::h4_action();
    CoextensionData data = coextension(s.right.a, s.right.c, act);
    CHECK(data.b.coalgebra->dim() == 2);
    REQUIRE(data.chi_bar.has_value());
    Report g = galois_coextension_check(data);
    CHECK(g.ok());
    CHECK(g.passed("IdealIsIKappa"));
    CHECK(g.passed("GaloisCRing.Bijective"));
    RightWeakEntwining psi = psi_from_coextension(data);
    CHECK(psi.psi == s.right.psi);

    // ĝ(h⊗h′) = p(S(h)h′)
    auto h = fixtures::h4_algebra();
    Matrix ghat = fixtures::h4_projection() * h->mult * kron(fixtures::h4_antipode(), Matrix::identity(4));
    CHECK(check_ghat(s, act, ghat).ok());
    CHECK(ghat_solver(s, act).feasible());

    KtsResult k = kts_pipeline(s, act);
    CHECK(k.report.ok());
    CHECK(k.certificate == "separable");
    CHECK(k.dim_b == 2);
    CHECK(k.lambda.has_value());
    CHECK(k.report.passed("LambdaBColinear"));
}

TEST_CASE("Sweedler entwining in characteristic two")
{
    Field f = Field::prime(2);
    auto s = fixtures::h4_entwining(f);
    Matrix act = fixtures::h4_action(f);
    CHECK(check_invertible(s).ok());
    CHECK_FALSE(separability_element(*s.right.a).has_value());
    AffineResult g = ghat_solver(s, act);
    KtsResult k = kts_pipeline(s, act);
    // kℤ₂ is Frobenius but not separable in characteristic two; ĝ still exists.
    CHECK(g.feasible());
    CHECK(k.report.ok());
    CHECK(k.certificate == "frobenius:dual-basis");
    CHECK(k.report.find("EquivariantRetraction")->status == Status::skipped);
    CHECK(g.feasible() == k.ghat.has_value());
}

TEST_CASE("degenerate unit gives a genuinely weak entwining")
{
    auto s = fixtures::degenerate_unit_entwining();
    CHECK(check_invertible(s).ok());
    CHECK(rank(projections(s.right).p_bar) == 2);
    Report r;
    EntwiningCRing a = cring_from_we(s.right, &r);
    CHECK(r.ok());
    CHECK(a.ring->dim() == 2);
    CHECK(iso_psi_restrictions(s).ok());
    Matrix act = Matrix::identity(3, Field::prime(3));
    Report e = check_entwined_module(s.right, regular_entwined(s.right, act));
    CHECK_FALSE(e.passed("Compatible"));
    CHECK(e.find("Compatible")->witness == "g3⊗1");
    KtsResult k = kts_pipeline(s, act);
    CHECK_FALSE(k.report.ok());
}

TEST_CASE("mismatched halves fail invertibility")
{
    auto h = fixtures::h4_entwining();
    auto flip = fixtures::flip_entwining(h.right.a, h.right.c);
    InvertibleWeakEntwining mixed{h.right, flip.left};
    Report r = check_invertible(mixed);
    CHECK(r.passed("Right.WE1"));
    CHECK(r.passed("Left.LE1"));
    CHECK_FALSE(r.passed("B.RightLeft"));
    CHECK_FALSE(r.find("B.RightLeft")->witness.empty());
    CHECK(r.passed("BAgreesWithBStar"));
    Report iso = iso_psi_restrictions(mixed);
    CHECK_FALSE(iso.ok());

    InvertibleWeakEntwining scaled{h.right, make_left_we(h.right.a, h.right.c, Scalar(2) * h.left.psi)};
    CHECK_FALSE(iso_psi_restrictions(scaled).ok());
}

TEST_CASE("trivial coextension over k")
{
    auto c = fixtures::grouplike(2);
    auto k = fixtures::ground_algebra();
    auto s = fixtures::flip_entwining(k, c);
    Matrix act = Matrix::identity(2);
    CoextensionData data = coextension(k, c, act);
    CHECK(data.ideal.subspace.dim() == 0);
    CHECK(data.b.coalgebra->dim() == 2);
    REQUIRE(data.chi_bar.has_value());
    CHECK(galois_coextension_check(data).ok());
    CHECK(psi_from_coextension(data).psi == s.right.psi);
    Matrix eps_eps = kron(*c->counit, *c->counit);
    CHECK(check_ghat(s, act, eps_eps).ok());
    KtsResult r = kts_pipeline(s, act);
    CHECK(r.report.ok());
    CHECK(r.dim_b == 2);
}

TEST_CASE("nilpotent action is not a Galois coextension")
{
    auto c = fixtures::grouplike(2);
    auto a = fixtures::dual_numbers();
    CoextensionData data = coextension(a, c, nilpotent_action());
    CHECK(data.ideal.subspace == Subspace::span(Matrix::vector({1, -1})));
    CHECK(data.b.coalgebra->dim() == 1);
    CHECK(rank(data.beta_bar) == 3);
    CHECK(data.over_b.nm.dim() == 4);
    CHECK_FALSE(data.chi_bar.has_value());
    Report r = galois_coextension_check(data);
    CHECK(r.find("Chi")->status == Status::infeasible);
    CHECK_THROWS_AS(psi_from_coextension(data), std::runtime_error);
    CHECK_THROWS_AS(coextension(a, c, Matrix(2, 4)), std::invalid_argument);
}

TEST_CASE("non-injective β stops the pipeline")
{
    auto a = fixtures::dual_numbers();
    auto c = fixtures::grouplike(1);
    auto s = fixtures::flip_entwining(a, c);
    Matrix act = Matrix::row({1, 0});
    KtsResult k = kts_pipeline(s, act);
    CHECK_FALSE(k.report.ok());
    CHECK_FALSE(k.report.passed("BetaInjective"));
    CHECK_FALSE(k.ghat.has_value());
}

TEST_CASE("entwined modules and C-ring modules")
{
    auto s = fixtures::h4_entwining();
    EntwiningCRing a = cring_from_we(s.right);
    WeakEntwinedModule c = regular_entwined(s.right, fixtures::h4_action());
    RightModule m = to_cring_module(a, s.right, c);
    CHECK(check_right_module(m).ok());
    WeakEntwinedModule back = from_cring_module(a, s.right, m);
    CHECK(back.action == c.action);
    CHECK(to_cring_module(a, s.right, back).action == m.action);

    WeakEntwinedModule zero{FinSpace{"0", {}}, Matrix(0, 0), Matrix(0, 0)};
    CHECK(check_entwined_module(s.right, zero).ok());
    RightModule mz = to_cring_module(a, s.right, zero);
    CHECK(from_cring_module(a, s.right, mz).action == zero.action);
}

TEST_CASE("property: round trips on transported free modules")
{
    std::mt19937_64 rng(4242);
    auto s = fixtures::h4_entwining();
    EntwiningCRing a = cring_from_we(s.right);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t n = 1 + trial % 2;
        WeakEntwinedModule m = free_h4_module(n);
        Matrix p = gen::random_invertible(rng, 4 * n, Field::rationals());
        Matrix pinv = inverse(p);
        m.action = pinv * m.action * kron(p, Matrix::identity(2));
        m.coaction = kron(pinv, Matrix::identity(4)) * m.coaction * p;
        REQUIRE(check_entwined_module(s.right, m).ok());
        RightModule theta = to_cring_module(a, s.right, m);
        CHECK(check_right_module(theta).ok());
        CHECK(from_cring_module(a, s.right, theta).action == m.action);
        CHECK(to_cring_module(a, s.right, from_cring_module(a, s.right, theta)).action == theta.action);
    }
}

TEST_CASE("property: ψ of a flip coextension is the flip")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 4; ++trial) {
        Field f = trial % 2 ? Field::prime(7) : Field::rationals();
        auto c = gen::transport(*fixtures::grouplike(2 + trial % 2, f), gen::random_invertible(rng, 2 + trial % 2, f));
        auto k = fixtures::ground_algebra(f);
        CoextensionData data = coextension(k, c, Matrix::identity(c->dim(), f));
        REQUIRE(data.chi_bar.has_value());
        CHECK(psi_from_coextension(data).psi == fixtures::flip_entwining(k, c).right.psi);
        CHECK(galois_coextension_check(data).ok());
    }
}
