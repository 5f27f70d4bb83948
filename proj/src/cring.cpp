#include "cringlab/cring.hpp"

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

CRingPtr make_cring(CoalgebraPtr c, Comodule carrier, const Matrix& mult, Matrix unit)
{
    require(carrier.left && carrier.right, "C-ring carrier must be a bicomodule");
    require(same_coalgebra(*carrier.left->coalgebra, *c) && same_coalgebra(*carrier.right->coalgebra, *c),
            "C-ring carrier is not a C-bicomodule");
    std::size_t a = carrier.dim();
    require(mult.rows() == a && mult.cols() == a * a, "C-ring product should be " + std::to_string(a) + "x" + std::to_string(a * a));
    require(unit.rows() == a && unit.cols() == c->dim(), "C-ring unit has the wrong shape");
    Cotensor sq = cotensor(carrier, carrier);
    Matrix coords = mult * sq.inclusion();
    return std::make_shared<const CRing>(CRing{std::move(c), std::move(carrier), std::move(sq), std::move(coords), std::move(unit)});
}

Report check_cring(const CRing& a)
{
    Report r("C-ring " + a.carrier.space.id);
    Field f = a.field();
    std::size_t n = a.dim();
    Comodule c = regular(a.coalgebra);
    r.merge(check_comodule(a.carrier));
    r.merge(check_comodule_map(a.square.comodule, a.carrier, a.mult), "Product");
    r.merge(check_comodule_map(c, a.carrier, a.unit), "Unit");
    Matrix mu = a.mult_ambient();
    Cotensor cube = cotensor_chain({&a.carrier, &a.carrier, &a.carrier});
    agree(r, mu * kron(mu, id(n, f)) * cube.inclusion(), mu * kron(id(n, f), mu) * cube.inclusion(), "Associativity",
          cube.comodule.space);
    agree(r, mu * kron(id(n, f), a.unit) * a.carrier.right->matrix, id(n, f), "RightUnit", a.carrier.space);
    agree(r, mu * kron(a.unit, id(n, f)) * a.carrier.left->matrix, id(n, f), "LeftUnit", a.carrier.space);
    return r;
}

RightModule make_right_module(CRingPtr a, Comodule m, const Matrix& action)
{
    require(m.right.has_value(), "right module needs a right coaction");
    require(action.rows() == m.dim() && action.cols() == m.dim() * a->dim(), "right action has the wrong shape");
    Comodule mr = right_part(m);
    Cotensor t = cotensor(mr, a->carrier);
    Matrix coords = action * t.inclusion();
    return RightModule{std::move(a), std::move(m), std::move(t), std::move(coords)};
}

LeftModule make_left_module(CRingPtr a, Comodule n, const Matrix& action)
{
    require(n.left.has_value(), "left module needs a left coaction");
    require(action.rows() == n.dim() && action.cols() == n.dim() * a->dim(), "left action has the wrong shape");
    Comodule nl = left_part(n);
    Cotensor t = cotensor(a->carrier, nl);
    Matrix coords = action * t.inclusion();
    return LeftModule{std::move(a), std::move(n), std::move(t), std::move(coords)};
}

Report check_right_module(const RightModule& m)
{
    Report r("right module " + m.comodule.space.id);
    const CRing& a = *m.ring;
    Field f = a.field();
    std::size_t n = m.dim();
    std::size_t k = a.dim();
    Comodule mr = right_part(m.comodule);
    r.merge(check_comodule(mr));
    r.merge(check_comodule_map(right_part(m.with_ring.comodule), mr, m.action), "Action");
    Matrix rho = m.action_ambient();
    Cotensor t = cotensor_chain({&mr, &a.carrier, &a.carrier});
    agree(r, rho * kron(rho, id(k, f)) * t.inclusion(), rho * kron(id(n, f), a.mult_ambient()) * t.inclusion(),
          "Associativity", t.comodule.space);
    agree(r, rho * kron(id(n, f), a.unit) * mr.right->matrix, id(n, f), "Unital", mr.space);
    return r;
}

Report check_left_module(const LeftModule& nm)
{
    Report r("left module " + nm.comodule.space.id);
    const CRing& a = *nm.ring;
    Field f = a.field();
    std::size_t n = nm.dim();
    std::size_t k = a.dim();
    Comodule nl = left_part(nm.comodule);
    r.merge(check_comodule(nl));
    r.merge(check_comodule_map(left_part(nm.with_ring.comodule), nl, nm.action), "Action");
    Matrix rho = nm.action_ambient();
    Cotensor t = cotensor_chain({&a.carrier, &a.carrier, &nl});
    agree(r, rho * kron(id(k, f), rho) * t.inclusion(), rho * kron(a.mult_ambient(), id(n, f)) * t.inclusion(),
          "Associativity", t.comodule.space);
    agree(r, rho * kron(a.unit, id(n, f)) * nl.left->matrix, id(n, f), "Unital", nl.space);
    return r;
}

Report check_cring_morphism(const CRing& a, const CRing& b, const Matrix& f)
{
    Report r("C-ring map " + a.carrier.space.id + " → " + b.carrier.space.id);
    require(f.rows() == b.dim() && f.cols() == a.dim(), "C-ring map has the wrong shape");
    r.merge(check_comodule_map(a.carrier, b.carrier, f));
    agree(r, f * a.unit, b.unit, "Unital", a.coalgebra->space);
    agree(r, f * a.mult, b.mult_ambient() * kron(f, f) * a.square.inclusion(), "Multiplicative", a.square.comodule.space);
    return r;
}

std::optional<std::string> sub_cring_failure(const CRing& a, const Subspace& b)
{
    Field f = a.field();
    std::size_t c = a.coalgebra->dim();
    const Matrix& basis = b.basis();
    if (!Subspace::span(kron(id(c, f), basis)).contains(a.carrier.left->matrix * basis)) return "not a left subcomodule";
    if (!Subspace::span(kron(basis, id(c, f))).contains(a.carrier.right->matrix * basis)) return "not a right subcomodule";
    if (!b.contains(a.unit)) return "does not contain the unit";
    Matrix ret = b.retraction();
    Comodule sub = make_comodule(FinSpace::numbered("B", b.dim(), "b"),
                                 Coaction{a.coalgebra, kron(id(c, f), ret) * a.carrier.left->matrix * basis},
                                 Coaction{a.coalgebra, kron(ret, id(c, f)) * a.carrier.right->matrix * basis});
    Cotensor sq = cotensor(sub, sub);
    if (!b.contains(a.mult_ambient() * kron(basis, basis) * sq.inclusion())) return "not closed under the product";
    return std::nullopt;
}

CRingPtr sub_cring(const CRing& a, const Subspace& b)
{
    if (auto why = sub_cring_failure(a, b)) throw ShapeError("not a sub-C-ring: " + *why);
    Field f = a.field();
    std::size_t c = a.coalgebra->dim();
    const Matrix& basis = b.basis();
    Matrix ret = b.retraction();
    FinSpace space{a.carrier.space.id + "'", {}};
    for (std::size_t j = 0; j < basis.cols(); ++j) space.labels.push_back(describe(basis.column(j), a.carrier.space.labels));
    Comodule sub = make_comodule(std::move(space), Coaction{a.coalgebra, kron(id(c, f), ret) * a.carrier.left->matrix * basis},
                                 Coaction{a.coalgebra, kron(ret, id(c, f)) * a.carrier.right->matrix * basis});
    return make_cring(a.coalgebra, std::move(sub), ret * a.mult_ambient() * kron(basis, basis), ret * a.unit);
}

}  // namespace cringlab
