#include "cringlab/galois.hpp"

#include <map>
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

void require_verified(const MatrixRingContext& ctx)
{
    Report v = verify_context(ctx);
    if (!v.ok()) throw ContextNotVerified("context does not verify:\n" + v.text());
}

std::string key(const Subspace& s)
{
    std::string k;
    const Matrix& b = s.basis();
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < b.rows(); ++i) k += b.at(i, j).str() + ",";
        k += ";";
    }
    return k;
}

std::string describe_subspace(const Subspace& s, const std::vector<std::string>& labels)
{
    if (s.dim() == 0) return "0";
    std::string out = "span{";
    for (std::size_t j = 0; j < s.dim(); ++j) out += (j ? ", " : "") + describe(s.basis().column(j), labels);
    return out + "}";
}

}  // namespace

CoalgebraPtr coendomorphism_coalgebra(const MatrixRingContext& ctx)
{
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    const Matrix& b = ctx.mn.inclusion();
    Matrix ret = ctx.mn.retraction();
    Matrix comult = kron(ret, ret) * kron({id(m, f), ctx.sigma, id(n, f)}) * kron(ctx.m.right->matrix, id(n, f)) * b;
    return make_coalgebra(ctx.mn.comodule.space, comult, ctx.tau_hat() * b);
}

MatrixRingContext context_over(const MatrixRingContext& ctx, const CoalgebraMap& pi)
{
    require(pi.map.cols() == ctx.mn.dim(), "map out of E has the wrong number of columns");
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t m = ctx.m.dim();
    Matrix p = pi.map * ctx.mn.retraction();
    Comodule mm = make_comodule(ctx.m.space, Coaction{pi.target, kron(p, id(m, f)) * kron(id(m, f), ctx.sigma) * ctx.m.right->matrix},
                                ctx.m.right);
    Comodule nn = make_comodule(ctx.n.space, ctx.n.left,
                                Coaction{pi.target, kron(id(n, f), p) * kron(ctx.sigma, id(n, f)) * ctx.n.left->matrix});
    return make_context(ctx.c, pi.target, std::move(nn), std::move(mm), ctx.sigma, p);
}

LeftModule induced_left_action(const MatrixRingContext& ctx, const RightModule& m, Report* report)
{
    require_verified(ctx);
    require(m.comodule.right && m.comodule.dim() == ctx.m.dim() && m.comodule.right->matrix == ctx.m.right->matrix,
            "module is not the M of the context");
    const CRing& a = *m.ring;
    require(same_coalgebra(*a.coalgebra, *ctx.c), "C-ring and context have different coalgebras");
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t k = a.dim();
    Matrix th = ctx.tau_hat();
    Matrix rho = m.action_ambient();
    Matrix action = kron(id(n, f), th) * kron({id(n, f), rho, id(n, f)}) * kron({ctx.sigma, id(k, f), id(n, f)}) *
                    kron(a.carrier.left->matrix, id(n, f));
    LeftModule out = make_left_module(m.ring, ctx.n, action);
    if (report) {
        report->merge(check_left_module(out), "N");
        Comodule mr = right_part(ctx.m);
        Comodule nl = left_part(ctx.n);
        Cotensor chain = cotensor_chain({&mr, &a.carrier, &nl});
        agree(*report, th * kron(rho, id(n, f)) * chain.inclusion(),
              th * kron(id(ctx.m.dim(), f), out.action_ambient()) * chain.inclusion(), "Balanced", chain.comodule.space);
    }
    return out;
}

Coendomorphism coend_coalgebra(const RightModule& m, const MatrixRingContext& ctx, Report* report)
{
    Report local("coendomorphism coalgebra");
    Report& r = report ? *report : local;
    LeftModule nmod = induced_left_action(ctx, m, &r);
    const CRing& a = *m.ring;
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t md = ctx.m.dim();
    std::size_t k = a.dim();
    CoalgebraPtr e = coendomorphism_coalgebra(ctx);
    r.merge(check_coalgebra(*e), "E");

    Comodule mr = right_part(ctx.m);
    Comodule nl = left_part(ctx.n);
    Cotensor chain = cotensor_chain({&mr, &a.carrier, &nl});
    Matrix rho_m = m.action_ambient();
    Matrix rho_n = nmod.action_ambient();
    Matrix diff = ctx.mn.retraction() * (kron(rho_m, id(n, f)) - kron(id(md, f), rho_n)) * chain.inclusion();
    Subspace relations = Subspace::span(diff);
    if (auto why = coideal_failure(*e, relations)) {
        r.add("Descent", Status::fail, {}, *why);
        throw DescentFailure("coequaliser relations are not a coideal: " + *why);
    }
    r.add("Descent", Status::pass);
    QuotientCoalgebra s = quotient_coalgebra(e, relations);
    MatrixRingContext sctx = context_over(ctx, s.projection);
    r.merge(check_coalgebra(*s.coalgebra), "S");
    r.merge(check_coalgebra_map(s.projection), "Projection");
    r.merge(verify_context(sctx), "Context");

    std::size_t sd = s.coalgebra->dim();
    const Matrix& lam = sctx.m.left->matrix;
    const Matrix& inc_ma = m.with_ring.inclusion();
    agree(r, lam * rho_m * inc_ma, kron(id(sd, f), rho_m) * kron(lam, id(k, f)) * inc_ma, "LeftCoactionLinear",
          m.with_ring.comodule.space);
    const Matrix& rn = sctx.n.right->matrix;
    const Matrix& inc_an = nmod.with_ring.inclusion();
    agree(r, rn * rho_n * inc_an, kron(rho_n, id(sd, f)) * kron(id(k, f), rn) * inc_an, "RightCoactionLinear",
          nmod.with_ring.comodule.space);
    r.note("dim S", std::to_string(sd));
    return Coendomorphism{std::move(e), std::move(nmod), std::move(relations), std::move(s), std::move(sctx)};
}

GaloisReport beta(const RightModule& m, const MatrixRingContext& ctx)
{
    GaloisReport g;
    g.coend = coend_coalgebra(m, ctx, &g.report);
    const CRing& a = *m.ring;
    const MatrixRingContext& sctx = g.coend.context;
    Field f = ctx.field();
    std::size_t n = ctx.n.dim();
    std::size_t k = a.dim();
    g.beta = kron(id(n, f), m.action_ambient()) * kron(ctx.sigma, id(k, f)) * a.carrier.left->matrix;
    std::size_t j = sctx.nm.subspace.first_outside(g.beta);
    g.image_in_cotensor = j == g.beta.cols();
    g.report.expect(g.image_in_cotensor, "ImageInCotensor", g.image_in_cotensor ? std::string() : a.carrier.space.labels[j]);
    agree(g.report, g.beta * a.unit, ctx.sigma, "UnitIsSigma", a.coalgebra->space);
    if (g.image_in_cotensor && verify_context(sctx).ok()) {
        MatrixCRing target = build_matrix_cring(sctx);
        g.report.merge(check_cring_morphism(a, *target.ring, sctx.nm.subspace.coords(g.beta)), "Morphism");
    }
    else {
        g.report.add("Morphism", Status::skipped, {}, "β does not land in N□_S M");
    }
    g.bijective = g.image_in_cotensor && k == sctx.nm.dim() && rank(g.beta) == k;
    g.retraction = injective_retraction(left_part(sctx.m));
    g.principal = g.bijective && g.retraction.feasible();
    g.report.note("dim N□_S M", std::to_string(sctx.nm.dim()));
    g.report.note("rank β", std::to_string(rank(g.beta)));
    g.report.note("galois", g.bijective ? "true" : "false");
    g.report.note("principal", g.principal ? "true" : "false");
    return g;
}

bool is_galois(const RightModule& m, const MatrixRingContext& ctx) { return beta(m, ctx).bijective; }

bool is_principal(const RightModule& m, const MatrixRingContext& ctx) { return beta(m, ctx).principal; }

AffineResult chi_solver(const RightModule& m, const GaloisReport& g, ChiCodomain where)
{
    const CRing& a = *m.ring;
    const MatrixRingContext& sctx = g.coend.context;
    Field f = a.field();
    std::size_t k = a.dim();
    std::size_t c = a.coalgebra->dim();
    std::size_t md = sctx.m.dim();
    const Matrix& lam_a = a.carrier.left->matrix;
    const Matrix& lam_n = sctx.n.left->matrix;
    Matrix mu = a.mult_ambient();
    Matrix act = kron(g.coend.n.action_ambient(), id(md, f));

    // χ = X∘emb on N⊗M, where X is the unknown and emb maps the codomain in.
    Matrix emb;
    Matrix domain;  // the codomain of β as a subspace of N⊗M (columns)
    Matrix j;       // A□_C(domain) inside A⊗N⊗M
    if (where == ChiCodomain::tensor) {
        std::size_t nm = sctx.n.dim() * md;
        emb = id(nm, f);
        domain = id(nm, f);
        Comodule t = make_comodule(tensor(sctx.n.space, sctx.m.space), Coaction{a.coalgebra, kron(lam_n, id(md, f))}, std::nullopt);
        j = cotensor(a.carrier, t).inclusion();
    }
    else {
        emb = sctx.nm.retraction();
        domain = sctx.nm.inclusion();
        j = kron(id(k, f), domain) * cotensor(a.carrier, left_part(sctx.nm.comodule)).inclusion();
    }
    std::size_t cols = emb.rows();
    Matrix lam_domain = kron(lam_n, id(md, f)) * domain;
    AffineConstraint retract = linearize("retraction of β", k, cols, f, [&](const Matrix& x) { return x * emb * g.beta - id(k, f); });
    AffineConstraint colinear = linearize("left C-colinear", k, cols, f, [&](const Matrix& x) {
        return lam_a * x - kron(id(c, f), x * emb) * lam_domain;
    });
    AffineConstraint linear = linearize("left A-linear", k, cols, f, [&](const Matrix& x) {
        Matrix chi = x * emb;
        return chi * act * j - mu * kron(id(k, f), chi) * j;
    });
    AffineResult res = solve_affine({retract, colinear, linear}, k * cols, f);
    if (res.solution) res.solution = Matrix::unflatten(*res.solution, k, cols);
    return res;
}

std::optional<std::string> character_failure(const CRing& a, const Matrix& kappa)
{
    if (kappa.rows() != 1 || kappa.cols() != a.dim()) return "κ should be 1 × " + std::to_string(a.dim());
    std::size_t j = (kappa * a.mult).first_difference(kron(kappa, kappa) * a.square.inclusion());
    if (j < a.square.dim()) return "not multiplicative at " + a.square.comodule.space.labels[j];
    require(a.coalgebra->counit.has_value(), "characters need a counital C");
    j = (kappa * a.unit).first_difference(*a.coalgebra->counit);
    if (j < a.coalgebra->dim()) return "κ∘η differs from ε at " + a.coalgebra->space.labels[j];
    return std::nullopt;
}

Character character_from_action(const RightModule& c)
{
    const CRing& a = *c.ring;
    require(c.comodule.dim() == a.coalgebra->dim(), "action must be on the regular comodule C");
    return Character{c.ring, *a.coalgebra->counit * c.action_ambient() * a.carrier.left->matrix};
}

RightModule action_from_character(const Character& k)
{
    const CRing& a = *k.ring;
    if (auto why = character_failure(a, k.kappa)) throw std::invalid_argument("not a character: " + *why);
    Field f = a.field();
    std::size_t c = a.coalgebra->dim();
    Matrix action = kron(*a.coalgebra->counit, kron(k.kappa, id(c, f)) * a.carrier.right->matrix);
    return make_right_module(k.ring, regular(a.coalgebra, false, true), action);
}

Coinvariants coinvariant_coalgebra(const Character& k)
{
    const CRing& a = *k.ring;
    Field f = a.field();
    std::size_t c = a.coalgebra->dim();
    Matrix vectors = kron(k.kappa, id(c, f)) * a.carrier.right->matrix - kron(id(c, f), k.kappa) * a.carrier.left->matrix;
    Subspace i = Subspace::span(vectors);
    return Coinvariants{Coideal{a.coalgebra, i}, quotient_coalgebra(a.coalgebra, i)};
}

GaloisCRing is_galois_cring(const Character& k)
{
    const CRing& a = *k.ring;
    GaloisCRing out{coinvariant_coalgebra(k), Matrix(), Report("Galois C-ring " + a.carrier.space.id)};
    Report& r = out.report;
    auto why = character_failure(a, k.kappa);
    r.expect(!why, "Character", {}, why.value_or(""));
    Field f = a.field();
    std::size_t c = a.coalgebra->dim();
    std::size_t n = a.dim();
    MatrixRingContext ctx = trivial_context_from_map(out.coinvariants.quotient.projection);
    out.beta = kron(id(c, f), kron(k.kappa, id(c, f)) * a.carrier.right->matrix) * a.carrier.left->matrix;
    std::size_t j = ctx.nm.subspace.first_outside(out.beta);
    bool inside = j == out.beta.cols();
    r.expect(inside, "ImageInCotensor", inside ? std::string() : a.carrier.space.labels[j]);
    if (inside) {
        MatrixCRing target = build_matrix_cring(ctx);
        r.merge(check_cring_morphism(a, *target.ring, ctx.nm.subspace.coords(out.beta)), "Morphism");
    }
    r.expect(n == ctx.nm.dim() && rank(out.beta) == n, "Bijective", {},
             "rank " + std::to_string(rank(out.beta)) + ", dim A " + std::to_string(n) + ", dim C□C " + std::to_string(ctx.nm.dim()));
    agree(r, kron(*a.coalgebra->counit, *a.coalgebra->counit) * out.beta, k.kappa, "KappaCompatible", a.carrier.space);
    r.note("dim I", std::to_string(out.coinvariants.ideal.subspace.dim()));
    r.note("dim B", std::to_string(out.coinvariants.quotient.coalgebra->dim()));
    return out;
}

GaloisBase make_galois_base(MatrixRingContext ctx, const CoalgebraMap& pi)
{
    require_verified(ctx);
    CoalgebraPtr e = coendomorphism_coalgebra(ctx);
    require(pi.map.cols() == e->dim(), "π must be defined on E");
    CoalgebraMap rebased{e, pi.target, pi.map};
    Report check = check_coalgebra_map(rebased);
    if (!check.ok()) throw std::invalid_argument("π is not a coalgebra map out of E:\n" + check.text());
    require(is_surjective(pi.map), "π must be surjective");
    MatrixRingContext over = context_over(ctx, rebased);
    MatrixCRing a = build_matrix_cring(over);
    Subspace ker = kernel(pi.map);
    return GaloisBase{std::move(ctx), std::move(e), std::move(rebased), std::move(over), std::move(a), std::move(ker)};
}

Intermediate a_of_x(const GaloisBase& base, const Subspace& x)
{
    require(base.ker_pi.contains(x), "X must lie in ker π");
    QuotientCoalgebra q = quotient_coalgebra(base.e, x);
    MatrixRingContext ctx = context_over(base.ctx, q.projection);
    MatrixCRing ring = build_matrix_cring(ctx);
    const Cotensor& whole = base.over_d.nm;
    require(whole.subspace.contains(ctx.nm.inclusion()), "A(X) is not contained in A");
    Subspace in_a = Subspace::span(whole.subspace.coords(ctx.nm.inclusion()));
    return Intermediate{std::move(ctx), std::move(ring), std::move(in_a)};
}

RightModule restrict_module(const GaloisBase& base, const CRingPtr& b_ring, const Subspace& b)
{
    Field f = base.ctx.field();
    Matrix action = base.a.m.action_ambient() * kron(id(base.ctx.m.dim(), f), b.basis());
    return make_right_module(b_ring, base.ctx.m, action);
}

Subspace x_of_b(const GaloisBase& base, const Subspace& b)
{
    CRingPtr ring = sub_cring(*base.a.ring, b);
    return coend_coalgebra(restrict_module(base, ring, b), base.ctx).relations;
}

std::optional<std::vector<Subspace>> enumerate_subspaces(const Matrix& basis, std::size_t cap)
{
    Field f = basis.field();
    require(f.is_prime(), "subspace enumeration needs a prime field");
    std::uint32_t p = f.characteristic();
    std::size_t k = basis.cols();
    std::vector<Matrix> vectors;
    std::vector<std::uint32_t> digits(k, 0);
    while (true) {
        std::size_t i = 0;
        while (i < k && ++digits[i] == p) digits[i++] = 0;
        if (i == k) break;
        Matrix coeff(k, 1, f);
        for (std::size_t t = 0; t < k; ++t) coeff.set(t, 0, Scalar::residue(digits[t], p));
        vectors.push_back(basis * coeff);
    }
    std::vector<Subspace> all{Subspace::zero(basis.rows(), f)};
    std::map<std::string, std::size_t> seen{{key(all.front()), 0}};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t s : frontier) {
            for (const Matrix& v : vectors) {
                if (all[s].contains(v)) continue;
                Subspace t = all[s].sum(Subspace::span(v));
                if (seen.emplace(key(t), all.size()).second) {
                    if (all.size() >= cap) return std::nullopt;
                    next.push_back(all.size());
                    all.push_back(std::move(t));
                }
            }
        }
        frontier = std::move(next);
    }
    return all;
}

Report connection_report(const GaloisBase& base, ConnectionLimits limits)
{
    Report r("Galois connection");
    const CRing& a = *base.a.ring;
    const std::vector<std::string>& elabels = base.e->space.labels;
    Subspace whole = Subspace::whole(a.dim(), a.field());

    Intermediate top = a_of_x(base, base.ker_pi);
    r.expect(top.in_a == whole, "AOfKernelIsA");
    Intermediate bottom = a_of_x(base, Subspace::zero(base.e->dim(), a.field()));
    r.note("dim A(0)", std::to_string(bottom.in_a.dim()));
    GaloisReport g = beta(base.a.m, base.ctx);
    r.expect(g.bijective, "MGaloisOverA");
    Subspace xa = g.coend.relations;
    r.expect(base.ker_pi.contains(xa), "XOfAInKernel", {}, describe_subspace(xa, elabels));
    r.expect(a_of_x(base, xa).in_a == whole, "AOfXOfA");

    bool small = a.field().is_prime() && base.ker_pi.dim() <= limits.max_kernel_dim;
    auto subs = small ? enumerate_subspaces(base.ker_pi.basis(), limits.max_subspaces) : std::nullopt;
    if (!subs) {
        r.add("Subcoideals", Status::skipped, {}, "enumeration needs GF(p) and dim ker π ≤ " + std::to_string(limits.max_kernel_dim));
    }
    else {
        struct Entry {
            Subspace x;
            Subspace b;
            bool closed;
        };
        std::vector<Entry> coideals;
        std::string lemma, unit, remark, galois_iff;
        for (const Subspace& x : *subs) {
            if (!is_coideal(*base.e, x)) continue;
            Intermediate ax = a_of_x(base, x);
            CRingPtr ring = sub_cring(a, ax.in_a);
            GaloisReport gx = beta(restrict_module(base, ring, ax.in_a), base.ctx);
            const Subspace& xx = gx.coend.relations;
            std::string name = describe_subspace(x, elabels);
            if (!x.contains(xx) && lemma.empty()) lemma = name;
            if (!gx.bijective && remark.empty()) remark = name;
            Subspace back = a_of_x(base, xx).in_a;
            if (!back.contains(ax.in_a) && unit.empty()) unit = name;
            if ((back == ax.in_a) != gx.bijective && galois_iff.empty()) galois_iff = name;
            coideals.push_back(Entry{x, ax.in_a, xx == x});
        }
        r.expect(lemma.empty(), "XOfAOfXInX", lemma);
        r.expect(remark.empty(), "MGaloisOverEveryAOfX", remark);
        r.expect(unit.empty(), "BInAOfXOfB", unit);
        r.expect(galois_iff.empty(), "EqualityIffGalois", galois_iff);
        std::string monotone, injective;
        std::size_t closed = 0;
        for (std::size_t i = 0; i < coideals.size(); ++i) {
            if (coideals[i].closed) ++closed;
            for (std::size_t j = 0; j < coideals.size(); ++j) {
                if (i == j) continue;
                const Entry& y = coideals[i];
                const Entry& x = coideals[j];
                if (x.x.contains(y.x) && !x.b.contains(y.b) && monotone.empty()) monotone = describe_subspace(y.x, elabels);
                if (y.closed && x.closed && y.b == x.b && injective.empty()) injective = describe_subspace(y.x, elabels);
            }
        }
        r.expect(monotone.empty(), "Monotone", monotone);
        r.expect(injective.empty(), "OneToOne", injective);
        r.note("subspaces of ker π", std::to_string(subs->size()));
        r.note("subcoideals", std::to_string(coideals.size()));
        r.note("closed subcoideals", std::to_string(closed));
    }

    auto rings = a.field().is_prime() && a.dim() <= limits.max_ring_dim
                     ? enumerate_subspaces(Matrix::identity(a.dim(), a.field()), limits.max_subspaces)
                     : std::nullopt;
    if (!rings) {
        r.add("SubRings", Status::skipped, {}, "enumeration needs GF(p) and dim A ≤ " + std::to_string(limits.max_ring_dim));
        return r;
    }
    std::string unit, galois_iff;
    std::size_t count = 0, galois = 0;
    for (const Subspace& b : *rings) {
        if (sub_cring_failure(a, b)) continue;
        ++count;
        CRingPtr ring = sub_cring(a, b);
        GaloisReport gb = beta(restrict_module(base, ring, b), base.ctx);
        Subspace back = a_of_x(base, gb.coend.relations).in_a;
        std::string name = describe_subspace(b, a.carrier.space.labels);
        if (!back.contains(b) && unit.empty()) unit = name;
        if ((back == b) != gb.bijective && galois_iff.empty()) galois_iff = name;
        if (gb.bijective) ++galois;
    }
    r.expect(unit.empty(), "SubRingInAOfX", unit);
    r.expect(galois_iff.empty(), "SubRingEqualityIffGalois", galois_iff);
    r.note("sub-C-rings", std::to_string(count));
    r.note("Galois sub-C-rings", std::to_string(galois));
    return r;
}

}  // namespace cringlab
