#include "cringlab/registry.hpp"

#include <functional>

#include "cringlab/fixtures.hpp"

namespace cringlab {

namespace {

// Maps coalgebra objects back to the names they were added under.
class Names {
public:
    void bind(const CoalgebraPtr& c, std::string name) { bound_.emplace_back(c, std::move(name)); }

    const std::string& of(const CoalgebraPtr& c) const
    {
        for (const auto& [p, n] : bound_)
            if (p == c) return n;
        for (const auto& [p, n] : bound_)
            if (same_coalgebra(*p, *c)) return n;
        throw UnknownReference("coalgebra " + c->space.id + " has not been added");
    }

private:
    std::vector<std::pair<CoalgebraPtr, std::string>> bound_;
};

struct Builder {
    Document doc;
    Names names;

    void coalgebra(const std::string& name, const CoalgebraPtr& c)
    {
        doc.add_coalgebra(name, c);
        names.bind(c, name);
    }

    std::optional<Document::Side> side(const std::optional<Coaction>& co) const
    {
        if (!co) return std::nullopt;
        return Document::Side{names.of(co->coalgebra), co->matrix};
    }

    void comodule(const std::string& name, const Comodule& m) { doc.add_comodule(name, m.space, side(m.left), side(m.right)); }

    void context(const std::string& name, const MatrixRingContext& ctx, const std::string& n, const std::string& m)
    {
        comodule(n, ctx.n);
        comodule(m, ctx.m);
        doc.add_context(name, names.of(ctx.c), names.of(ctx.d), n, m, ctx.sigma, ctx.tau);
    }

    void entwining(const std::string& name, const InvertibleWeakEntwining& s, const std::string& a, const std::string& c)
    {
        doc.add_algebra(a, s.right.a);
        coalgebra(c, s.right.c);
        doc.add_entwining(name, a, c, s.right.psi, s.left.psi);
    }

    void regular_module(const std::string& name, const std::string& entwining, const Matrix& action)
    {
        const EntwiningValue& s = doc.get<EntwiningValue>(entwining);
        doc.add_entwined_module(name, entwining, s.right.c->space, action, s.right.c->comult);
    }
};

CoalgebraMap identity_map(const CoalgebraPtr& c) { return CoalgebraMap{c, c, Matrix::identity(c->dim(), c->field())}; }

CoalgebraMap collapse(const CoalgebraPtr& c) { return CoalgebraMap{c, fixtures::grouplike(1, c->field()), *c->counit}; }

Document identity_context(const CoalgebraPtr& c, std::string description)
{
    Builder b{Document(c->field(), std::move(description)), {}};
    b.coalgebra("C", c);
    b.context("id", trivial_context_from_map(identity_map(c)), "N", "M");
    return std::move(b.doc);
}

Document grouplike2()
{
    return identity_context(fixtures::grouplike(2), "Two group-likes, N = M = C over D = C. C is Galois and principal.");
}

Document grouplike3_full()
{
    auto c = fixtures::grouplike(3);
    CoalgebraMap eps = collapse(c);
    Builder b{Document(c->field(), "Three group-likes over D = k: the full matrix C-ring C⊗C."), {}};
    b.coalgebra("C", c);
    b.coalgebra("k", eps.target);
    b.context("full", trivial_context_from_map(eps), "N", "M");
    return std::move(b.doc);
}

Document matrix_coalgebra2()
{
    auto mc = fixtures::matrix_coalgebra(2);
    Document doc = identity_context(mc, "The 2 × 2 matrix coalgebra with its identity context and the comodule k².");
    Builder b{std::move(doc), {}};
    b.names.bind(mc, "C");
    b.comodule("V", fixtures::matrix_comodule(mc, 2));
    return std::move(b.doc);
}

Document h4_dual_quotient()
{
    auto h = dual_coalgebra(*fixtures::h4_algebra());
    Subspace i = Subspace::span(hstack({Matrix::unit(4, 2), Matrix::unit(4, 3)}));
    QuotientCoalgebra q = quotient_coalgebra(h, i);
    Builder b{Document(Field::rationals(), "Dual of Sweedler's algebra over its quotient by span{x*, gx*}."), {}};
    b.coalgebra("Hdual", h);
    b.coalgebra("Q", q.coalgebra);
    b.context("restrict", trivial_context_from_map(q.projection), "N", "M");
    return std::move(b.doc);
}

Document triangular()
{
    auto c = fixtures::grouplike(2);
    MatrixRingContext ctx = trivial_context_from_map(identity_map(c));
    GaloisBase base = make_galois_base(ctx, collapse(coendomorphism_coalgebra(ctx)));
    Subspace sub = Subspace::span(hstack({Matrix::unit(4, 0), Matrix::unit(4, 1), Matrix::unit(4, 3)}));
    CRingPtr ring = sub_cring(*base.a.ring, sub);
    RightModule m = restrict_module(base, ring, sub);

    Builder b{Document(Field::rationals(), "Upper triangular sub-C-ring of C⊗C over two group-likes. M is not Galois over it."), {}};
    b.coalgebra("C", c);
    b.coalgebra("k", base.over_d.d);
    b.context("full", base.over_d, "N", "M");
    b.comodule("T", ring->carrier);
    b.doc.add_cring("triangular", "C", "T", ring->mult_ambient(), ring->unit);
    b.comodule("MT", m.comodule);
    b.doc.add_module("M_triangular", "triangular", "MT", m.action_ambient());
    return std::move(b.doc);
}

Document connection_gf2()
{
    auto c = fixtures::grouplike(4, Field::prime(2));
    Document doc = identity_context(c, "Four group-likes over GF(2) with π = ε_E: the Galois connection is enumerated.");
    Builder b{std::move(doc), {}};
    b.names.bind(c, "C");
    auto k = fixtures::grouplike(1, Field::prime(2));
    b.coalgebra("k", k);
    CoalgebraPtr e = coendomorphism_coalgebra(b.doc.get<MatrixRingContext>("id"));
    b.doc.add_galois_base("base", "id", "k", *e->counit);
    return std::move(b.doc);
}

Document sweedler(Field f)
{
    auto s = fixtures::h4_entwining(f);
    Builder b{Document(f, f.is_prime() ? "Sweedler's Hopf algebra over GF(2) entwined with its subalgebra k[g]."
                                       : "Sweedler's Hopf algebra entwined with its subalgebra k[g]; C = H is a Galois coextension."),
              {}};
    b.entwining("psi", s, "A", "H");
    b.regular_module("regular", "psi", fixtures::h4_action(f));
    return std::move(b.doc);
}

Document weak_gf3()
{
    auto s = fixtures::degenerate_unit_entwining();
    Builder b{Document(Field::prime(3), "A genuinely weak entwining over GF(3): ψ(g_i⊗1) = φ_i 1⊗g_i with φ = (1, 1, 0). C is not an entwined module for it."), {}};
    b.entwining("psi", s, "k", "C");
    b.regular_module("regular", "psi", Matrix::identity(3, Field::prime(3)));
    return std::move(b.doc);
}

Document flip_dual_numbers()
{
    auto s = fixtures::flip_entwining(fixtures::dual_numbers(), fixtures::grouplike(1));
    Builder b{Document(Field::rationals(), "Flip entwining of the dual numbers with k, acting through t ↦ 0. β is not injective."), {}};
    b.entwining("flip", s, "A", "C");
    b.regular_module("regular", "flip", Matrix::row({1, 0}));
    return std::move(b.doc);
}

Document trivial_k()
{
    auto s = fixtures::flip_entwining(fixtures::ground_algebra(), fixtures::grouplike(2));
    Builder b{Document(Field::rationals(), "The ground field entwined with two group-likes by the flip."), {}};
    b.entwining("flip", s, "k", "C");
    b.regular_module("regular", "flip", Matrix::identity(2));
    return std::move(b.doc);
}

struct Registered {
    FixtureInfo info;
    std::function<Document()> build;
};

const std::vector<Registered>& registered()
{
    static const std::vector<Registered> all = {
        {{"grouplike2", "identity context on two group-likes"}, grouplike2},
        {{"grouplike3-full", "full matrix C-ring over k on three group-likes"}, grouplike3_full},
        {{"matrix-coalgebra2", "identity context on the 2 × 2 matrix coalgebra"}, matrix_coalgebra2},
        {{"h4-dual-quotient", "dual of Sweedler's algebra over a 2-dimensional quotient"}, h4_dual_quotient},
        {{"triangular", "non-Galois upper triangular sub-C-ring"}, triangular},
        {{"connection-gf2", "Galois connection on four group-likes over GF(2)"}, connection_gf2},
        {{"h4", "Sweedler entwining over the rationals"}, [] { return sweedler(Field::rationals()); }},
        {{"h4-gf2", "Sweedler entwining over GF(2)"}, [] { return sweedler(Field::prime(2)); }},
        {{"weak-gf3", "genuinely weak entwining over GF(3)"}, weak_gf3},
        {{"flip-dual-numbers", "flip entwining with a non-injective β"}, flip_dual_numbers},
        {{"trivial-k", "ground field entwined with two group-likes"}, trivial_k},
    };
    return all;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list()
{
    static const std::vector<FixtureInfo> list = [] {
        std::vector<FixtureInfo> out;
        for (const auto& r : registered()) out.push_back(r.info);
        return out;
    }();
    return list;
}

Document build_fixture(const std::string& name)
{
    for (const auto& r : registered())
        if (r.info.name == name) return r.build();
    throw UnknownReference("no fixture named '" + name + "'");
}

}  // namespace cringlab
