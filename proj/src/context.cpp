#include "cringlab/context.hpp"

#include <stdexcept>

namespace cringlab {

namespace {

Matrix id(std::size_t n, Field f) { return Matrix::identity(n, f); }

void agree(Report& r, const Matrix& lhs, const Matrix& rhs, const std::string& name, const FinSpace& s)
{
    std::size_t j = lhs.first_difference(rhs);
    r.expect(j == lhs.cols(), name, j == lhs.cols() ? std::string() : (j < s.dim() ? s.labels[j] : "#" + std::to_string(j)));
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw ShapeError(what);
}

}  // namespace

Matrix MatrixRingContext::tau_hat() const
{
    if (!d->counit) throw ShapeError("reduced counit needs a counital D");
    return *d->counit * tau;
}

MatrixRingContext make_context(CoalgebraPtr c, CoalgebraPtr d, Comodule n, Comodule m, Matrix sigma, Matrix tau)
{
    require(n.left && n.right, "N must be a (C,D)-bicomodule");
    require(m.left && m.right, "M must be a (D,C)-bicomodule");
    require(same_coalgebra(*n.left->coalgebra, *c) && same_coalgebra(*n.right->coalgebra, *d), "N must be a (C,D)-bicomodule");
    require(same_coalgebra(*m.left->coalgebra, *d) && same_coalgebra(*m.right->coalgebra, *c), "M must be a (D,C)-bicomodule");
    require(sigma.rows() == n.dim() * m.dim() && sigma.cols() == c->dim(), "σ should be a map C → N⊗M");
    require(tau.rows() == d->dim() && tau.cols() == m.dim() * n.dim(), "τ should be a map M⊗N → D");
    Cotensor nm = cotensor(n, m);
    Cotensor mn = cotensor(m, n);
    return MatrixRingContext{std::move(c), std::move(d), std::move(n), std::move(m),
                             std::move(nm), std::move(mn), std::move(sigma), std::move(tau)};
}

Report verify_context(const MatrixRingContext& ctx)
{
    Report r("matrix ring context");
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    r.merge(check_comodule(ctx.n), "N");
    r.merge(check_comodule(ctx.m), "M");
    std::size_t j = ctx.nm.subspace.first_outside(ctx.sigma);
    r.expect(j == ctx.sigma.cols(), "SigmaInCotensor", j < ctx.c->dim() ? ctx.c->space.labels[j] : std::string());
    r.merge(check_comodule_map(regular(ctx.c), ctx.nm.comodule, ctx.sigma_coords()), "Sigma");
    r.merge(check_comodule_map(ctx.mn.comodule, regular(ctx.d), ctx.tau_coords()), "Tau");
    if (!ctx.d->counit) {
        r.add("UnitTriangle", Status::skipped, {}, "D has no counit");
        r.add("CounitTriangle", Status::skipped, {}, "D has no counit");
        return r;
    }
    Matrix th = ctx.tau_hat();
    const Matrix& incl = ctx.mn.inclusion();
    agree(r, kron(id(ctx.d->dim(), f), th) * kron(ctx.m.left->matrix, id(n, f)) * incl,
          kron(th, id(ctx.d->dim(), f)) * kron(id(m, f), ctx.n.right->matrix) * incl, "ReducedCounitBicolinear",
          ctx.mn.comodule.space);
    agree(r, kron(id(n, f), th) * kron(ctx.sigma, id(n, f)) * ctx.n.left->matrix, id(n, f), "UnitTriangle", ctx.n.space);
    agree(r, kron(th, id(m, f)) * kron(id(m, f), ctx.sigma) * ctx.m.right->matrix, id(m, f), "CounitTriangle", ctx.m.space);
    const Coalgebra& c = *ctx.c;
    if (c.counit) {
        Cotensor cn = cotensor(regular(ctx.c, false, true), left_part(ctx.n));
        agree(r, kron(id(n, f), th) * kron(ctx.sigma, id(n, f)) * cn.inclusion(), left_unitor(cn, c),
              "UnitTriangleOnCotensor", cn.comodule.space);
        Cotensor mc = cotensor(right_part(ctx.m), regular(ctx.c, true, false));
        agree(r, kron(th, id(m, f)) * kron(id(m, f), ctx.sigma) * mc.inclusion(), right_unitor(mc, c),
              "CounitTriangleOnCotensor", mc.comodule.space);
    }
    return r;
}

MatrixRingContext trivial_context_from_map(const CoalgebraMap& f)
{
    Report check = check_coalgebra_map(f);
    if (!check.ok()) throw std::invalid_argument("not a coalgebra map:\n" + check.text());
    const CoalgebraPtr& c = f.source;
    const CoalgebraPtr& d = f.target;
    require(c->counit.has_value(), "trivial context needs a counital C");
    Field k = c->field();
    std::size_t n = c->dim();
    Comodule reg = regular(c);
    Comodule nn = make_comodule(c->space, reg.left, Coaction{d, kron(id(n, k), f.map) * c->comult});
    Comodule mm = make_comodule(c->space, Coaction{d, kron(f.map, id(n, k)) * c->comult}, reg.right);
    return make_context(c, d, std::move(nn), std::move(mm), c->comult, f.map * kron(*c->counit, id(n, k)));
}

MatrixCRing build_matrix_cring(const MatrixRingContext& ctx)
{
    Report v = verify_context(ctx);
    if (!v.ok()) throw ContextNotVerified("context does not verify:\n" + v.text());
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    Matrix th = ctx.tau_hat();
    const Matrix& b = ctx.nm.inclusion();
    Matrix ret = ctx.nm.retraction();
    Matrix mult = ret * kron({id(n, f), th, id(m, f)}) * kron(b, b);
    CRingPtr ring = make_cring(ctx.c, ctx.nm.comodule, mult, ctx.sigma_coords());
    RightModule mod_m = make_right_module(ring, ctx.m, kron(th, id(m, f)) * kron(id(m, f), b));
    LeftModule mod_n = make_left_module(ring, ctx.n, kron(id(n, f), th) * kron(b, id(n, f)));
    return MatrixCRing{ring, std::move(mod_m), std::move(mod_n)};
}

Completion complete_tau_given_sigma(const MatrixRingContext& ctx)
{
    require(ctx.d->counit.has_value(), "τ completion needs a counital D");
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    std::size_t d = ctx.d->dim();
    std::size_t e = ctx.mn.dim();
    Matrix ret = ctx.mn.retraction();
    const Matrix& eps = *ctx.d->counit;
    const Comodule& mn = ctx.mn.comodule;
    Matrix unit_side = kron(ctx.sigma, id(n, f)) * ctx.n.left->matrix;
    Matrix counit_side = kron(id(m, f), ctx.sigma) * ctx.m.right->matrix;
    AffineConstraint left = linearize("left D-colinear", d, e, f, [&](const Matrix& t) {
        return ctx.d->comult * t - kron(id(d, f), t) * mn.left->matrix;
    });
    AffineConstraint right = linearize("right D-colinear", d, e, f, [&](const Matrix& t) {
        return ctx.d->comult * t - kron(t, id(d, f)) * mn.right->matrix;
    });
    AffineConstraint tri_n = linearize("unit triangle", d, e, f, [&](const Matrix& t) {
        return kron(id(n, f), eps * t * ret) * unit_side - id(n, f);
    });
    AffineConstraint tri_m = linearize("counit triangle", d, e, f, [&](const Matrix& t) {
        return kron(eps * t * ret, id(m, f)) * counit_side - id(m, f);
    });
    Completion out;
    out.solve = solve_affine({left, right, tri_n, tri_m}, d * e, f);
    if (out.solve.solution) {
        Matrix t = Matrix::unflatten(*out.solve.solution, d, e);
        out.bijective = is_bijective(t);
        MatrixRingContext done = ctx;
        done.tau = t * ret;
        out.context = std::move(done);
    }
    return out;
}

Completion complete_sigma_given_tau(const MatrixRingContext& ctx)
{
    require(ctx.d->counit.has_value(), "σ completion needs a counital D");
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    std::size_t c = ctx.c->dim();
    std::size_t a = ctx.nm.dim();
    const Matrix& b = ctx.nm.inclusion();
    const Comodule& nm = ctx.nm.comodule;
    Matrix th = ctx.tau_hat();
    AffineConstraint left = linearize("left C-colinear", a, c, f, [&](const Matrix& s) {
        return nm.left->matrix * s - kron(id(c, f), s) * ctx.c->comult;
    });
    AffineConstraint right = linearize("right C-colinear", a, c, f, [&](const Matrix& s) {
        return nm.right->matrix * s - kron(s, id(c, f)) * ctx.c->comult;
    });
    AffineConstraint tri_n = linearize("unit triangle", a, c, f, [&](const Matrix& s) {
        return kron(id(n, f), th) * kron(b * s, id(n, f)) * ctx.n.left->matrix - id(n, f);
    });
    AffineConstraint tri_m = linearize("counit triangle", a, c, f, [&](const Matrix& s) {
        return kron(th, id(m, f)) * kron(id(m, f), b * s) * ctx.m.right->matrix - id(m, f);
    });
    Completion out;
    out.solve = solve_affine({left, right, tri_n, tri_m}, a * c, f);
    if (out.solve.solution) {
        Matrix s = Matrix::unflatten(*out.solve.solution, a, c);
        out.bijective = is_bijective(s);
        MatrixRingContext done = ctx;
        done.sigma = b * s;
        out.context = std::move(done);
    }
    return out;
}

Report adjunction_triangles(const MatrixRingContext& ctx, const Comodule& x)
{
    Report r("adjunction triangles at " + x.space.id);
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    std::size_t k = x.dim();
    Matrix th = ctx.tau_hat();
    Comodule xr = right_part(x);
    Cotensor xn = cotensor(xr, left_part(ctx.n));
    Matrix phi = kron(id(k, f), ctx.sigma) * xr.right_side().matrix;
    Matrix lhs = kron({id(k, f), id(n, f), th}) * kron(phi, id(n, f)) * xn.inclusion();
    agree(r, lhs, xn.inclusion(), "CounitAfterUnit", xn.comodule.space);
    Matrix g = kron(th, id(m, f)) * kron(id(m, f), ctx.sigma) * ctx.m.right->matrix;
    agree(r, g, id(m, f), "UnitThenCounit", ctx.m.space);
    return r;
}

FirmContext make_firm_context(MatrixRingContext base)
{
    FirmResult d = is_firm(*base.d);
    require(d.firm, "D is not firm");
    Cotensor n_d = cotensor(right_part(base.n), regular(base.d, true, false));
    Cotensor d_m = cotensor(regular(base.d, false, true), left_part(base.m));
    require(n_d.subspace.contains(base.n.right->matrix), "N's right coaction does not land in N□_D D");
    require(d_m.subspace.contains(base.m.left->matrix), "M's left coaction does not land in D□_D M");
    Matrix rn = n_d.retraction() * base.n.right->matrix;
    Matrix lm = d_m.retraction() * base.m.left->matrix;
    require(is_bijective(rn), "N is not firm as a right D-comodule");
    require(is_bijective(lm), "M is not firm as a left D-comodule");
    Matrix nabla_n = inverse(rn);
    Matrix nabla_m = inverse(lm);
    return FirmContext{std::move(base), std::move(n_d), std::move(d_m), std::move(nabla_n), std::move(nabla_m)};
}

Report verify_firm_context(const FirmContext& fc)
{
    const MatrixRingContext& ctx = fc.base;
    Report r("firm matrix ring context");
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    r.expect(is_firm(*ctx.d).firm, "DFirm");
    r.expect(fc.nabla_n * fc.n_d.retraction() * ctx.n.right->matrix == id(n, f), "NFirm");
    r.expect(fc.nabla_m * fc.d_m.retraction() * ctx.m.left->matrix == id(m, f), "MFirm");
    r.merge(check_comodule(ctx.n), "N");
    r.merge(check_comodule(ctx.m), "M");
    std::size_t j = ctx.nm.subspace.first_outside(ctx.sigma);
    r.expect(j == ctx.sigma.cols(), "SigmaInCotensor", j < ctx.c->dim() ? ctx.c->space.labels[j] : std::string());
    r.merge(check_comodule_map(regular(ctx.c), ctx.nm.comodule, ctx.sigma_coords()), "Sigma");
    r.merge(check_comodule_map(ctx.mn.comodule, regular(ctx.d), ctx.tau_coords()), "Tau");
    agree(r, kron(id(n, f), ctx.tau) * kron(ctx.sigma, id(n, f)) * ctx.n.left->matrix, ctx.n.right->matrix, "UnitDiagram",
          ctx.n.space);
    agree(r, kron(ctx.tau, id(m, f)) * kron(id(m, f), ctx.sigma) * ctx.m.right->matrix, ctx.m.left->matrix,
          "CounitDiagram", ctx.m.space);
    return r;
}

CRingPtr build_firm_cring(const FirmContext& fc, Report* report)
{
    const MatrixRingContext& ctx = fc.base;
    Report v = verify_firm_context(fc);
    if (!v.ok()) throw ContextNotVerified("firm context does not verify:\n" + v.text());
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    const Matrix& b = ctx.nm.inclusion();
    Matrix ret = ctx.nm.retraction();
    Matrix through_tau = kron({id(n, f), ctx.tau, id(m, f)}) * kron(b, b);
    Matrix nabla_n = fc.nabla_n * fc.n_d.retraction();
    Matrix nabla_m = fc.nabla_m * fc.d_m.retraction();
    Matrix first = kron(nabla_n, id(m, f)) * through_tau;
    Matrix second = kron(id(n, f), nabla_m) * through_tau;
    CRingPtr ring = make_cring(ctx.c, ctx.nm.comodule, ret * first, ctx.sigma_coords());
    if (report) {
        const Matrix& sq = ring->square.inclusion();
        report->expect(ctx.nm.subspace.contains(first * sq), "ProductWellDefined");
        agree(*report, first * sq, second * sq, "ProductFormsAgree", ring->square.comodule.space);
        report->merge(check_cring(*ring));
    }
    return ring;
}

CoalgebraPtr build_firm_e(const FirmContext& fc, Report* report)
{
    const MatrixRingContext& ctx = fc.base;
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    const Matrix& b = ctx.mn.inclusion();
    Matrix ret = ctx.mn.retraction();
    Matrix via_m = kron({id(m, f), ctx.sigma, id(n, f)}) * kron(ctx.m.right->matrix, id(n, f)) * b;
    Matrix via_n = kron({id(m, f), ctx.sigma, id(n, f)}) * kron(id(m, f), ctx.n.left->matrix) * b;
    Subspace ee = Subspace::span(kron(b, b));
    if (report) {
        agree(*report, via_m, via_n, "CoproductFormsAgree", ctx.mn.comodule.space);
        report->expect(ee.contains(via_m), "CoproductWellDefined");
    }
    Matrix comult = kron(ret, ret) * via_m;
    CoalgebraPtr e = make_coalgebra(ctx.mn.comodule.space, comult, std::nullopt);
    if (report) {
        report->merge(check_coalgebra(*e), "E");
        FirmResult fr = is_firm(*e);
        report->expect(fr.firm, "EFirm");
        if (fr.firm) {
            Matrix nabla_m = fc.nabla_m * fc.d_m.retraction();
            Matrix formula = ret * kron(nabla_m, id(n, f)) * kron({ctx.tau, id(m, f), id(n, f)}) * kron(b, b) *
                             fr.square.basis();
            report->expect(formula == fr.nabla, "NablaFormula");
        }
    }
    return e;
}

}  // namespace cringlab
