#include "cringlab/linear.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cringlab {

FinSpace FinSpace::numbered(std::string id, std::size_t dim, const std::string& prefix)
{
    FinSpace s{std::move(id), {}};
    for (std::size_t i = 0; i < dim; ++i) s.labels.push_back(prefix + std::to_string(i + 1));
    return s;
}

FinSpace tensor(const FinSpace& x, const FinSpace& y)
{
    FinSpace s{x.id + "⊗" + y.id, {}};
    s.labels.reserve(x.dim() * y.dim());
    for (const auto& a : x.labels)
        for (const auto& b : y.labels) s.labels.push_back(a + "⊗" + b);
    return s;
}

FinSpace tensor(std::initializer_list<FinSpace> factors)
{
    auto it = factors.begin();
    if (it == factors.end()) return FinSpace{"k", {"1"}};
    FinSpace out = *it++;
    for (; it != factors.end(); ++it) out = tensor(out, *it);
    return out;
}

void require_distinct_labels(const FinSpace& s)
{
    std::set<std::string> seen;
    for (const auto& l : s.labels)
        if (!seen.insert(l).second) throw ShapeError("space '" + s.id + "' repeats basis label '" + l + "'");
}

LinMap::LinMap(FinSpace dom, FinSpace cod, Matrix m) : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m))
{
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
        throw ShapeError("map " + domain.id + " → " + codomain.id + " has a " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()) + " matrix");
}

LinMap compose(const LinMap& g, const LinMap& f)
{
    if (g.domain.dim() != f.codomain.dim()) throw ShapeError("compose: " + f.codomain.id + " vs " + g.domain.id);
    return LinMap(f.domain, g.codomain, g.matrix * f.matrix);
}

LinMap tensor(const LinMap& f, const LinMap& g)
{
    return LinMap(tensor(f.domain, g.domain), tensor(f.codomain, g.codomain), kron(f.matrix, g.matrix));
}

RowReducer::RowReducer(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

SparseVec RowReducer::reduce(const SparseVec& v) const
{
    bool any = false;
    for (const auto& e : v)
        if (pivot_row_[e.first] >= 0) {
            any = true;
            break;
        }
    if (!any) return v;
    SparseVec out = v;
    for (const auto& [j, val] : v) {
        auto r = pivot_row_[j];
        if (r >= 0) axpy(out, -val, rows_[static_cast<std::size_t>(r)]);
    }
    return out;
}

bool RowReducer::add(SparseVec row)
{
    SparseVec r = reduce(row);
    if (r.empty()) return false;
    Scalar inv = r.front().second.inverse();
    for (auto& e : r) e.second *= inv;
    std::uint32_t p = r.front().first;
    for (auto& other : rows_) {
        Scalar c = lookup(other, p);
        if (!c.is_zero()) axpy(other, -c, r);
    }
    pivot_row_[p] = static_cast<std::int64_t>(rows_.size());
    pivot_col_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::size_t> RowReducer::pivots() const
{
    std::vector<std::size_t> out(pivot_col_.begin(), pivot_col_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SparseVec> RowReducer::rows_by_pivot() const
{
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (auto p : pivots()) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[p])]);
    return out;
}

std::optional<std::size_t> RowReducer::row_for_pivot(std::size_t col) const
{
    if (pivot_row_[col] < 0) return std::nullopt;
    return static_cast<std::size_t>(pivot_row_[col]);
}

Subspace Subspace::span(const Matrix& columns)
{
    RowReducer rr(columns.rows());
    for (std::size_t j = 0; j < columns.cols(); ++j) rr.add(columns.col(j));
    Subspace s;
    s.ambient_ = columns.rows();
    s.pivots_ = rr.pivots();
    s.basis_ = Matrix::from_columns(columns.rows(), rr.rows_by_pivot(), columns.field());
    return s;
}

Subspace Subspace::whole(std::size_t n, Field f) { return span(Matrix::identity(n, f)); }

Subspace Subspace::zero(std::size_t n, Field f) { return span(Matrix(n, 0, f)); }

Matrix Subspace::retraction() const
{
    std::vector<SparseVec> cols(ambient_);
    Scalar one = Scalar(1).in(field());
    for (std::size_t t = 0; t < pivots_.size(); ++t) cols[pivots_[t]].emplace_back(static_cast<std::uint32_t>(t), one);
    return Matrix::from_columns(dim(), std::move(cols), field());
}

std::size_t Subspace::first_outside(const Matrix& x) const
{
    if (x.rows() != ambient_) throw ShapeError("subspace membership: vector length mismatch");
    Matrix back = basis_ * coords(x);
    return back.first_difference(x);
}

bool Subspace::contains(const Matrix& x) const { return first_outside(x) == x.cols(); }

bool Subspace::contains(const Subspace& other) const { return contains(other.basis_); }

Subspace Subspace::sum(const Subspace& other) const { return span(hstack({basis_, other.basis_})); }

Subspace Subspace::intersect(const Subspace& other) const
{
    Matrix joint = hstack({basis_, Scalar(-1) * other.basis_});
    Subspace k = kernel(joint);
    std::vector<std::size_t> top(dim());
    std::iota(top.begin(), top.end(), 0);
    return span(basis_ * k.basis().select_rows(top));
}

std::size_t rank(const Matrix& m)
{
    RowReducer rr(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) rr.add(m.col(j));
    return rr.rank();
}

Subspace kernel(const Matrix& m)
{
    Matrix t = m.transpose();
    RowReducer rr(m.cols());
    for (std::size_t i = 0; i < t.cols(); ++i)
        if (!t.col(i).empty()) rr.add(t.col(i));
    std::vector<SparseVec> vecs;
    Scalar one = Scalar(1).in(m.field());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (rr.row_for_pivot(f)) continue;
        SparseVec v;
        v.emplace_back(static_cast<std::uint32_t>(f), one);
        for (std::size_t r = 0; r < rr.rank(); ++r) {
            const auto& row = rr.row(r);
            Scalar c = lookup(row, static_cast<std::uint32_t>(f));
            if (!c.is_zero()) v.emplace_back(row.front().first, -c);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_columns(m.cols(), std::move(vecs), m.field()));
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }
bool is_bijective(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.cols(); }

QuotientData quotient(std::size_t n, const Subspace& sub)
{
    if (sub.ambient_dim() != n) throw ShapeError("quotient: subspace of the wrong ambient space");
    QuotientData q;
    q.kernel = sub;
    std::vector<std::int64_t> pos(n, -1);
    std::vector<char> is_pivot(n, 0);
    for (auto p : sub.pivots()) is_pivot[p] = 1;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) {
            pos[j] = static_cast<std::int64_t>(q.complement.size());
            q.complement.push_back(j);
        }
    Field f = sub.field();
    Scalar one = Scalar(1).in(f);
    std::vector<SparseVec> proj(n);
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) proj[j].emplace_back(static_cast<std::uint32_t>(pos[j]), one);
    for (std::size_t i = 0; i < sub.dim(); ++i)
        for (const auto& [r, v] : sub.basis().col(i))
            if (pos[r] >= 0) proj[sub.pivots()[i]].emplace_back(static_cast<std::uint32_t>(pos[r]), -v);
    q.projection = Matrix::from_columns(q.complement.size(), std::move(proj), f);
    std::vector<SparseVec> sec(q.complement.size());
    for (std::size_t t = 0; t < q.complement.size(); ++t) sec[t].emplace_back(static_cast<std::uint32_t>(q.complement[t]), one);
    q.section = Matrix::from_columns(n, std::move(sec), f);
    return q;
}

Matrix inverse(const Matrix& m)
{
    std::size_t n = m.rows();
    if (m.cols() != n) throw ShapeError("inverse of a non-square matrix");
    Matrix t = m.transpose();
    RowReducer rr(2 * n);
    Scalar one = Scalar(1).in(m.field());
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec row = t.col(i);
        row.emplace_back(static_cast<std::uint32_t>(n + i), one);
        rr.add(std::move(row));
    }
    std::vector<SparseVec> inv_rows;
    for (std::size_t j = 0; j < n; ++j) {
        auto r = rr.row_for_pivot(j);
        if (!r) throw ShapeError("matrix is singular");
        SparseVec tail;
        for (const auto& [c, v] : rr.row(*r))
            if (c >= n) tail.emplace_back(static_cast<std::uint32_t>(c - n), v);
        inv_rows.push_back(std::move(tail));
    }
    return Matrix::from_columns(n, std::move(inv_rows), m.field()).transpose();
}

Scalar determinant(const Matrix& m)
{
    std::size_t n = m.rows();
    if (m.cols() != n) throw ShapeError("determinant of a non-square matrix");
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [i, v] : m.col(j)) a[i][j] = v;
    Scalar det = Scalar(1).in(m.field());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Scalar(0).in(m.field());
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        Scalar inv = a[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Scalar c = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= c * a[k][j];
        }
    }
    return det;
}

namespace {

std::optional<Matrix> solve_core(const std::vector<SparseVec>& rows, std::size_t unknowns, Field f)
{
    RowReducer rr(unknowns + 1);
    for (const auto& r : rows) {
        if (r.empty()) continue;
        rr.add(r);
        if (rr.row_for_pivot(unknowns)) return std::nullopt;
    }
    std::vector<Scalar> x(unknowns);
    for (std::size_t r = 0; r < rr.rank(); ++r) {
        const auto& row = rr.row(r);
        x[row.front().first] = lookup(row, static_cast<std::uint32_t>(unknowns));
    }
    return Matrix::vector(x, f);
}

}  // namespace

AffineResult solve_affine(const std::vector<AffineConstraint>& constraints, std::size_t unknowns, Field f)
{
    std::vector<SparseVec> rows;
    for (const auto& c : constraints) {
        if (c.coefficients.cols() != unknowns || c.target.cols() != 1 || c.target.rows() != c.coefficients.rows())
            throw ShapeError("constraint '" + c.name + "' does not match " + std::to_string(unknowns) + " unknowns");
        Matrix t = c.coefficients.transpose();
        for (std::size_t i = 0; i < t.cols(); ++i) {
            SparseVec row = t.col(i);
            Scalar b = c.target.at(i, 0);
            if (!b.is_zero()) row.emplace_back(static_cast<std::uint32_t>(unknowns), b.in(f));
            rows.push_back(std::move(row));
        }
    }
    AffineResult result;
    result.solution = solve_core(rows, unknowns, f);
    if (result.solution) return result;
    // Farkas-style witness: y with yᵀA = 0 and yᵀb = 1.
    std::size_t m = rows.size();
    std::vector<SparseVec> dual(unknowns + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [j, v] : rows[i]) dual[j].emplace_back(static_cast<std::uint32_t>(i), v);
    dual[unknowns].emplace_back(static_cast<std::uint32_t>(m), Scalar(1).in(f));
    result.certificate = solve_core(dual, m, f);
    return result;
}

AffineConstraint linearize(std::string name, std::size_t rows, std::size_t cols, Field f,
                           const std::function<Matrix(const Matrix&)>& residual)
{
    Matrix zero(rows, cols, f);
    Matrix base = residual(zero).flatten();
    std::vector<SparseVec> columns(rows * cols);
    Scalar one = Scalar(1).in(f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix probe(rows, cols, f);
            probe.set(i, j, one);
            Matrix r = residual(probe).flatten() - base;
            columns[i * cols + j] = r.col(0);
        }
    AffineConstraint c;
    c.name = std::move(name);
    c.coefficients = Matrix::from_columns(base.rows(), std::move(columns), f);
    c.target = Scalar(-1) * base;
    return c;
}

}  // namespace cringlab
