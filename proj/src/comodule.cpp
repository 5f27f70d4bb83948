#include "cringlab/comodule.hpp"

namespace cringlab {

namespace {

Matrix id(std::size_t n, Field f) { return Matrix::identity(n, f); }

std::string label_at(const FinSpace& s, std::size_t j) { return j < s.dim() ? s.labels[j] : "#" + std::to_string(j); }

void agree_on_basis(Report& r, const Matrix& lhs, const Matrix& rhs, const std::string& name, const FinSpace& s)
{
    std::size_t j = lhs.first_difference(rhs);
    r.expect(j == lhs.cols(), name, j == lhs.cols() ? std::string() : label_at(s, j));
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw ShapeError(what);
}

}  // namespace

Field Comodule::field() const
{
    if (left) return left->matrix.field();
    if (right) return right->matrix.field();
    return Field::rationals();
}

const Coaction& Comodule::left_side() const
{
    if (!left) throw ShapeError("'" + space.id + "' has no left coaction");
    return *left;
}

const Coaction& Comodule::right_side() const
{
    if (!right) throw ShapeError("'" + space.id + "' has no right coaction");
    return *right;
}

Comodule make_comodule(FinSpace space, std::optional<Coaction> left, std::optional<Coaction> right)
{
    require_distinct_labels(space);
    std::size_t m = space.dim();
    for (const auto* side : {&left, &right}) {
        if (!*side) continue;
        const auto& a = **side;
        std::size_t c = a.coalgebra->dim();
        require(a.matrix.rows() == m * c && a.matrix.cols() == m,
                "coaction on '" + space.id + "' should be " + std::to_string(m * c) + "x" + std::to_string(m));
    }
    return Comodule{std::move(space), std::move(left), std::move(right)};
}

Comodule regular(const CoalgebraPtr& c, bool left, bool right)
{
    std::optional<Coaction> l;
    std::optional<Coaction> r;
    if (left) l = Coaction{c, c->comult};
    if (right) r = Coaction{c, c->comult};
    return make_comodule(c->space, std::move(l), std::move(r));
}

Comodule dual_comodule(const Comodule& m)
{
    require(!(m.left && m.right), "dual of a bicomodule is not supported");
    std::size_t n = m.dim();
    FinSpace space{m.space.id + "*", {}};
    for (const auto& l : m.space.labels) space.labels.push_back(l + "*");
    // ρ(v_j) = Σ v_i⊗c_k r[(i,k), j] gives ρ(v_i*) = Σ c_k⊗v_j* r[(i,k), j], and mirror.
    if (m.right) {
        std::size_t c = m.right->coalgebra->dim();
        Matrix out(c * n, n, m.field());
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [row, v] : m.right->matrix.col(j)) out.set((row % c) * n + j, row / c, v);
        return make_comodule(std::move(space), Coaction{m.right->coalgebra, out}, std::nullopt);
    }
    if (m.left) {
        std::size_t c = m.left->coalgebra->dim();
        Matrix out(n * c, n, m.field());
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [row, v] : m.left->matrix.col(j)) out.set(j * c + row / n, row % n, v);
        return make_comodule(std::move(space), std::nullopt, Coaction{m.left->coalgebra, out});
    }
    return make_comodule(std::move(space), std::nullopt, std::nullopt);
}

Comodule left_part(const Comodule& m) { return Comodule{m.space, m.left, std::nullopt}; }
Comodule right_part(const Comodule& m) { return Comodule{m.space, std::nullopt, m.right}; }

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b)
{
    if (&a == &b) return true;
    if (a.dim() != b.dim() || a.comult != b.comult || a.counit.has_value() != b.counit.has_value()) return false;
    return !a.counit || *a.counit == *b.counit;
}

Report check_comodule(const Comodule& m)
{
    Report r("comodule " + m.space.id);
    std::size_t n = m.dim();
    Field f = m.field();
    if (m.left) {
        const Coalgebra& c = *m.left->coalgebra;
        const Matrix& rho = m.left->matrix;
        agree_on_basis(r, kron(id(c.dim(), f), rho) * rho, kron(c.comult, id(n, f)) * rho, "LeftCoassociativity", m.space);
        if (c.counit)
            agree_on_basis(r, kron(*c.counit, id(n, f)) * rho, id(n, f), "LeftCounit", m.space);
        else
            r.add("LeftCounit", Status::skipped, {}, "non-counital coalgebra");
    }
    if (m.right) {
        const Coalgebra& c = *m.right->coalgebra;
        const Matrix& rho = m.right->matrix;
        agree_on_basis(r, kron(rho, id(c.dim(), f)) * rho, kron(id(n, f), c.comult) * rho, "RightCoassociativity", m.space);
        if (c.counit)
            agree_on_basis(r, kron(id(n, f), *c.counit) * rho, id(n, f), "RightCounit", m.space);
        else
            r.add("RightCounit", Status::skipped, {}, "non-counital coalgebra");
    }
    if (m.left && m.right) {
        std::size_t d = m.left->coalgebra->dim();
        std::size_t c = m.right->coalgebra->dim();
        agree_on_basis(r, kron(m.left->matrix, id(c, f)) * m.right->matrix,
                       kron(id(d, f), m.right->matrix) * m.left->matrix, "CoactionsCommute", m.space);
    }
    return r;
}

Report check_comodule_map(const Comodule& source, const Comodule& target, const Matrix& f)
{
    Report r("comodule map " + source.space.id + " → " + target.space.id);
    require(f.rows() == target.dim() && f.cols() == source.dim(), "comodule map has the wrong shape");
    Field k = f.field();
    if (source.left && target.left) {
        std::size_t d = source.left->coalgebra->dim();
        agree_on_basis(r, target.left->matrix * f, kron(id(d, k), f) * source.left->matrix, "LeftColinear", source.space);
    }
    if (source.right && target.right) {
        std::size_t c = source.right->coalgebra->dim();
        agree_on_basis(r, target.right->matrix * f, kron(f, id(c, k)) * source.right->matrix, "RightColinear",
                       source.space);
    }
    return r;
}

Comodule corestrict(const Comodule& m, const CoalgebraMap& f)
{
    std::optional<Coaction> l;
    std::optional<Coaction> r;
    Field k = m.field();
    if (m.left) {
        require(same_coalgebra(*m.left->coalgebra, *f.source), "corestrict: left coalgebra is not the map's source");
        l = Coaction{f.target, kron(f.map, id(m.dim(), k)) * m.left->matrix};
    }
    if (m.right) {
        require(same_coalgebra(*m.right->coalgebra, *f.source), "corestrict: right coalgebra is not the map's source");
        r = Coaction{f.target, kron(id(m.dim(), k), f.map) * m.right->matrix};
    }
    return make_comodule(m.space, std::move(l), std::move(r));
}

namespace {

std::size_t product(const std::vector<std::size_t>& dims, std::size_t from, std::size_t to)
{
    std::size_t out = 1;
    for (std::size_t i = from; i < to; ++i) out *= dims[i];
    return out;
}

}  // namespace

Cotensor cotensor(const Comodule& m, const Comodule& n) { return cotensor_chain({&m, &n}); }

Cotensor cotensor_chain(const std::vector<const Comodule*>& factors)
{
    require(!factors.empty(), "cotensor of no factors");
    Field f = factors[0]->field();
    for (const auto* x : factors) f = join(f, x->field());
    Cotensor out;
    out.ambient = factors[0]->space;
    out.factor_dims.push_back(factors[0]->dim());
    Matrix incl = id(factors[0]->dim(), f);
    std::size_t prefix = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const Comodule& prev = *factors[i - 1];
        const Comodule& next = *factors[i];
        require(prev.right.has_value(), "cotensor: '" + prev.space.id + "' has no right coaction");
        require(next.left.has_value(), "cotensor: '" + next.space.id + "' has no left coaction");
        require(same_coalgebra(*prev.right->coalgebra, *next.left->coalgebra),
                "cotensor: '" + prev.space.id + "' and '" + next.space.id + "' are comodules over different coalgebras");
        std::size_t amb = incl.rows();
        std::size_t x = next.dim();
        Matrix lifted = kron(incl, id(x, f));
        Matrix lhs = kron({id(prefix, f), prev.right->matrix, id(x, f)}) * lifted;
        Matrix rhs = kron(id(amb, f), next.left->matrix) * lifted;
        Subspace k = kernel(lhs - rhs);
        incl = lifted * k.basis();
        prefix *= prev.dim();
        out.ambient = tensor(out.ambient, next.space);
        out.factor_dims.push_back(x);
    }
    out.subspace = Subspace::span(incl);
    const Matrix& b = out.subspace.basis();
    Matrix ret = out.subspace.retraction();
    FinSpace space{"", {}};
    for (std::size_t i = 0; i < factors.size(); ++i) space.id += (i ? "□" : "") + factors[i]->space.id;
    for (std::size_t j = 0; j < b.cols(); ++j) space.labels.push_back(describe(b.column(j), out.ambient.labels));
    std::optional<Coaction> left;
    std::optional<Coaction> right;
    const Comodule& first = *factors.front();
    const Comodule& last = *factors.back();
    if (first.left) {
        std::size_t d = first.left->coalgebra->dim();
        Matrix m = kron(id(d, f), ret) * kron(first.left->matrix, id(product(out.factor_dims, 1, out.factor_dims.size()), f)) * b;
        left = Coaction{first.left->coalgebra, m};
    }
    if (last.right) {
        std::size_t e = last.right->coalgebra->dim();
        Matrix m = kron(ret, id(e, f)) * kron(id(product(out.factor_dims, 0, out.factor_dims.size() - 1), f), last.right->matrix) * b;
        right = Coaction{last.right->coalgebra, m};
    }
    out.comodule = make_comodule(std::move(space), std::move(left), std::move(right));
    return out;
}

Report check_cotensor(const Cotensor& t, const std::vector<const Comodule*>& factors)
{
    Report r("cotensor " + t.comodule.space.id);
    const Matrix& b = t.inclusion();
    Field f = b.field();
    const Comodule& first = *factors.front();
    const Comodule& last = *factors.back();
    if (first.left) {
        std::size_t d = first.left->coalgebra->dim();
        Matrix direct = kron(first.left->matrix, id(product(t.factor_dims, 1, t.factor_dims.size()), f)) * b;
        agree_on_basis(r, kron(id(d, f), b) * t.comodule.left->matrix, direct, "LeftCoactionCorestricts", t.comodule.space);
    }
    if (last.right) {
        std::size_t e = last.right->coalgebra->dim();
        Matrix direct = kron(id(product(t.factor_dims, 0, t.factor_dims.size() - 1), f), last.right->matrix) * b;
        agree_on_basis(r, kron(b, id(e, f)) * t.comodule.right->matrix, direct, "RightCoactionCorestricts",
                       t.comodule.space);
    }
    r.merge(check_comodule(t.comodule));
    return r;
}

Matrix right_unitor(const Cotensor& m_c, const Coalgebra& c)
{
    require(c.counit.has_value(), "right unitor needs a counit");
    std::size_t m = m_c.inclusion().rows() / c.dim();
    return kron(id(m, c.field()), *c.counit) * m_c.inclusion();
}

Matrix left_unitor(const Cotensor& c_n, const Coalgebra& c)
{
    require(c.counit.has_value(), "left unitor needs a counit");
    std::size_t n = c_n.inclusion().rows() / c.dim();
    return kron(*c.counit, id(n, c.field())) * c_n.inclusion();
}

AffineResult injective_retraction(const Comodule& m)
{
    const Coaction& side = m.left_side();
    const Coalgebra& d = *side.coalgebra;
    Field f = m.field();
    std::size_t n = m.dim();
    std::size_t k = d.dim();
    Matrix free_coaction = kron(d.comult, id(n, f));
    Matrix idk = id(k, f);
    AffineConstraint colinear = linearize("left colinear", n, k * n, f, [&](const Matrix& delta) {
        return side.matrix * delta - kron(idk, delta) * free_coaction;
    });
    AffineConstraint splits =
        linearize("splits the coaction", n, k * n, f, [&](const Matrix& delta) { return delta * side.matrix - id(n, f); });
    return solve_affine({colinear, splits}, n * k * n, f);
}

AffineResult right_injective_retraction(const Comodule& m)
{
    const Coaction& side = m.right_side();
    const Coalgebra& d = *side.coalgebra;
    Field f = m.field();
    std::size_t n = m.dim();
    std::size_t k = d.dim();
    Matrix free_coaction = kron(id(n, f), d.comult);
    Matrix idk = id(k, f);
    AffineConstraint colinear = linearize("right colinear", n, n * k, f, [&](const Matrix& delta) {
        return side.matrix * delta - kron(delta, idk) * free_coaction;
    });
    AffineConstraint splits =
        linearize("splits the coaction", n, n * k, f, [&](const Matrix& delta) { return delta * side.matrix - id(n, f); });
    return solve_affine({colinear, splits}, n * n * k, f);
}

}  // namespace cringlab
