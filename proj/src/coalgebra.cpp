#include "cringlab/coalgebra.hpp"

#include <random>

#include "cringlab/polynomial.hpp"

namespace cringlab {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what)
{
    if (m.rows() != rows || m.cols() != cols)
        throw ShapeError(what + " should be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

std::string toggle_star(const std::string& s)
{
    if (s.size() > 1 && s.back() == '*') return s.substr(0, s.size() - 1);
    return s + "*";
}

FinSpace dual_space(const FinSpace& s)
{
    FinSpace d{toggle_star(s.id), {}};
    for (const auto& l : s.labels) d.labels.push_back(toggle_star(l));
    return d;
}

std::string label_at(const std::vector<std::string>& labels, std::size_t j)
{
    return j < labels.size() ? labels[j] : "#" + std::to_string(j);
}

/// Compares two maps on a basis and reports the first basis vector where they differ.
bool same_on_basis(Report& r, const Matrix& lhs, const Matrix& rhs, const std::string& name,
                   const std::vector<std::string>& labels)
{
    std::size_t j = lhs.first_difference(rhs);
    return r.expect(j == lhs.cols(), name, j == lhs.cols() ? std::string() : label_at(labels, j));
}

}  // namespace

Matrix Algebra::left_mult(const Matrix& a) const { return mult * kron(a, Matrix::identity(dim(), field())); }
Matrix Algebra::right_mult(const Matrix& a) const { return mult * kron(Matrix::identity(dim(), field()), a); }

CoalgebraPtr make_coalgebra(FinSpace space, Matrix comult, std::optional<Matrix> counit)
{
    require_distinct_labels(space);
    std::size_t n = space.dim();
    require_shape(comult, n * n, n, "comultiplication of " + space.id);
    if (counit) require_shape(*counit, 1, n, "counit of " + space.id);
    return std::make_shared<const Coalgebra>(Coalgebra{std::move(space), std::move(comult), std::move(counit)});
}

AlgebraPtr make_algebra(FinSpace space, Matrix mult, Matrix unit)
{
    require_distinct_labels(space);
    std::size_t n = space.dim();
    require_shape(mult, n, n * n, "multiplication of " + space.id);
    require_shape(unit, n, 1, "unit of " + space.id);
    return std::make_shared<const Algebra>(Algebra{std::move(space), std::move(mult), std::move(unit)});
}

std::string describe(const SparseVec& v, const std::vector<std::string>& labels)
{
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        std::string s = c.str();
        bool neg = !s.empty() && s[0] == '-';
        if (neg) s = s.substr(1);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (s != "1") out += s + " ";
        out += label_at(labels, i);
    }
    return out;
}

std::string describe(const Matrix& column, const std::vector<std::string>& labels)
{
    return describe(column.col(0), labels);
}

Report check_coalgebra(const Coalgebra& c)
{
    Report r("coalgebra " + c.space.id);
    std::size_t n = c.dim();
    Matrix id = Matrix::identity(n, c.field());
    same_on_basis(r, kron(c.comult, id) * c.comult, kron(id, c.comult) * c.comult, "Coassociativity", c.space.labels);
    if (!c.counit) {
        r.add("CounitLaw", Status::skipped, {}, "no counit");
        return r;
    }
    Matrix left = kron(*c.counit, id) * c.comult;
    Matrix right = kron(id, *c.counit) * c.comult;
    std::size_t j = std::min(left.first_difference(id), right.first_difference(id));
    r.expect(j == n, "CounitLaw", j == n ? std::string() : label_at(c.space.labels, j));
    return r;
}

Report check_algebra(const Algebra& a)
{
    Report r("algebra " + a.space.id);
    std::size_t n = a.dim();
    Matrix id = Matrix::identity(n, a.field());
    same_on_basis(r, a.mult * kron(a.mult, id), a.mult * kron(id, a.mult), "Associativity",
                  tensor({a.space, a.space, a.space}).labels);
    Matrix left = a.mult * kron(a.unit, id);
    Matrix right = a.mult * kron(id, a.unit);
    std::size_t j = std::min(left.first_difference(id), right.first_difference(id));
    r.expect(j == n, "UnitLaw", j == n ? std::string() : label_at(a.space.labels, j));
    return r;
}

Report check_coalgebra_map(const CoalgebraMap& f)
{
    Report r("coalgebra map " + f.source->space.id + " → " + f.target->space.id);
    require_shape(f.map, f.target->dim(), f.source->dim(), "coalgebra map");
    same_on_basis(r, kron(f.map, f.map) * f.source->comult, f.target->comult * f.map, "Comultiplicative",
                  f.source->space.labels);
    if (f.source->counit && f.target->counit)
        same_on_basis(r, *f.target->counit * f.map, *f.source->counit, "Counital", f.source->space.labels);
    else
        r.add("Counital", Status::skipped, {}, "non-counital coalgebra");
    return r;
}

CoalgebraPtr dual_coalgebra(const Algebra& a)
{
    return make_coalgebra(dual_space(a.space), a.mult.transpose(), a.unit.transpose());
}

AlgebraPtr dual_algebra(const Coalgebra& c)
{
    if (!c.counit) throw ShapeError("dual algebra of a non-counital coalgebra has no unit");
    return make_algebra(dual_space(c.space), c.comult.transpose(), c.counit->transpose());
}

std::optional<std::string> coideal_failure(const Coalgebra& c, const Subspace& i)
{
    if (i.ambient_dim() != c.dim()) throw ShapeError("coideal of the wrong ambient dimension");
    const Matrix& b = i.basis();
    if (c.counit) {
        Matrix e = *c.counit * b;
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (!e.at(0, j).is_zero()) return "counit does not vanish on " + describe(b.column(j), c.space.labels);
    }
    Matrix id = Matrix::identity(c.dim(), c.field());
    Subspace allowed = Subspace::span(hstack({kron(b, id), kron(id, b)}));
    Matrix images = c.comult * b;
    std::size_t j = allowed.first_outside(images);
    if (j < images.cols())
        return "comultiplication leaves I⊗C + C⊗I on " + describe(b.column(j), c.space.labels);
    return std::nullopt;
}

bool is_coideal(const Coalgebra& c, const Subspace& i) { return !coideal_failure(c, i); }

QuotientCoalgebra quotient_coalgebra(const CoalgebraPtr& c, const Subspace& i)
{
    if (auto why = coideal_failure(*c, i)) throw NotACoideal("not a coideal: " + *why, *why);
    QuotientData q = quotient(c->dim(), i);
    FinSpace space{c->space.id + "/I", {}};
    for (auto j : q.complement) space.labels.push_back("[" + c->space.labels[j] + "]");
    Matrix comult = kron(q.projection, q.projection) * c->comult * q.section;
    std::optional<Matrix> counit;
    if (c->counit) counit = *c->counit * q.section;
    auto quot = make_coalgebra(std::move(space), std::move(comult), std::move(counit));
    return QuotientCoalgebra{quot, CoalgebraMap{c, quot, q.projection}, std::move(q)};
}

FirmResult is_firm(const Coalgebra& d)
{
    FirmResult out;
    std::size_t n = d.dim();
    Matrix id = Matrix::identity(n, d.field());
    out.square = kernel(kron(d.comult, id) - kron(id, d.comult));
    if (!out.square.contains(d.comult)) return out;
    Matrix coords = out.square.coords(d.comult);
    if (!is_bijective(coords)) return out;
    out.firm = true;
    out.nabla = inverse(coords);
    return out;
}

std::optional<Matrix> separability_element(const Algebra& a)
{
    std::size_t n = a.dim();
    Field f = a.field();
    Matrix id = Matrix::identity(n, f);
    std::vector<AffineConstraint> cs;
    cs.push_back({"multiplies to 1", a.mult, a.unit});
    for (std::size_t j = 0; j < n; ++j) {
        Matrix basis = Matrix::unit(n, j, f);
        cs.push_back({"central at " + a.space.labels[j], kron(a.left_mult(basis), id) - kron(id, a.right_mult(basis)),
                      Matrix(n * n, 1, f)});
    }
    return solve_affine(cs, n * n, f).solution;
}

bool is_separability_element(const Algebra& a, const Matrix& e)
{
    std::size_t n = a.dim();
    if (e.rows() != n * n || e.cols() != 1) return false;
    if (a.mult * e != a.unit) return false;
    Matrix id = Matrix::identity(n, a.field());
    for (std::size_t j = 0; j < n; ++j) {
        Matrix basis = Matrix::unit(n, j, a.field());
        if (kron(a.left_mult(basis), id) * e != kron(id, a.right_mult(basis)) * e) return false;
    }
    return true;
}

Matrix gram_matrix(const Algebra& a, const Matrix& lambda)
{
    return Matrix::unflatten((lambda * a.mult).transpose(), a.dim(), a.dim());
}

bool is_frobenius_form(const Algebra& a, const Matrix& lambda) { return !determinant(gram_matrix(a, lambda)).is_zero(); }

namespace {

constexpr std::size_t symbolic_cap = 10;

std::optional<Matrix> sample_forms(const Algebra& a, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-7, 7);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(Scalar(dist(rng)).in(a.field()));
        Matrix lambda = Matrix::row(v, a.field());
        if (is_frobenius_form(a, lambda)) return lambda;
    }
    return std::nullopt;
}

}  // namespace

FrobeniusResult frobenius_form(const Algebra& a, std::optional<std::uint64_t> seed)
{
    FrobeniusResult out;
    std::size_t n = a.dim();
    Field f = a.field();
    for (std::size_t i = 0; i < n; ++i) {
        Matrix lambda = Matrix::unit(n, i, f).transpose();
        if (is_frobenius_form(a, lambda)) {
            out.form = lambda;
            out.path = "dual-basis";
            return out;
        }
    }
    if (seed) {
        if (auto lambda = sample_forms(a, *seed)) {
            out.form = lambda;
            out.path = "sampled";
            return out;
        }
    }
    if (n > symbolic_cap) {
        out.decided = false;
        out.path = "undecided: dimension " + std::to_string(n) + " exceeds the symbolic cap " + std::to_string(symbolic_cap);
        return out;
    }
    std::vector<std::vector<Polynomial>> g(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (std::size_t j = 0; j < n * n; ++j)
        for (const auto& [k, c] : a.mult.col(j)) {
            Polynomial::Monomial m(n, 0);
            m[k] = 1;
            g[j / n][j % n].add_term(m, c);
        }
    Polynomial det = determinant(std::move(g));
    out.path = "symbolic";
    PointSearch found = nonvanishing_point(det, f);
    if (!found.decided) {
        out.decided = false;
        out.path = "undecided: determinant nonzero but no nonvanishing point within the search cap";
        return out;
    }
    if (found.point) {
        out.form = Matrix::row(*found.point, f);
        if (!is_frobenius_form(a, *out.form)) throw std::logic_error("symbolic Frobenius point is degenerate");
    }
    return out;
}

}  // namespace cringlab
