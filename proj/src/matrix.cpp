#include "cringlab/matrix.hpp"

#include <algorithm>
#include <string>

namespace cringlab {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require(bool ok, const std::string& what)
{
    if (!ok) throw ShapeError(what);
}

}  // namespace

void axpy(SparseVec& dst, const Scalar& c, const SparseVec& src)
{
    if (c.is_zero() || src.empty()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
        if (b == src.end() || (a != dst.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == dst.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar v = std::move(a->second);
            v += c * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst = std::move(out);
}

Scalar lookup(const SparseVec& v, std::uint32_t index)
{
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, std::uint32_t i) { return e.first < i; });
    if (it != v.end() && it->first == index) return it->second;
    return Scalar();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field) : rows_(rows), cols_(cols), field_(field), data_(cols)
{
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix m(n, n, field);
    Scalar one = Scalar(1).in(field);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), one);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field field)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        require(rows[i].size() == c, "ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j) {
            Scalar v = rows[i][j].in(field);
            if (!v.is_zero()) m.data_[j].emplace_back(static_cast<std::uint32_t>(i), std::move(v));
        }
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVec> columns, Field field)
{
    Matrix m(rows, columns.size(), field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec clean;
        clean.reserve(col.size());
        for (auto& [i, v] : col) {
            require(i < rows, "column entry out of range");
            Scalar x = v.in(field);
            if (!clean.empty() && clean.back().first == i) {
                clean.back().second += x;
                if (clean.back().second.is_zero()) clean.pop_back();
            } else if (!x.is_zero()) {
                clean.emplace_back(i, std::move(x));
            }
        }
        m.data_[j] = std::move(clean);
    }
    return m;
}

Matrix Matrix::vector(const std::vector<Scalar>& entries, Field field)
{
    Matrix m(entries.size(), 1, field);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Scalar v = entries[i].in(field);
        if (!v.is_zero()) m.data_[0].emplace_back(static_cast<std::uint32_t>(i), std::move(v));
    }
    return m;
}

Matrix Matrix::row(const std::vector<Scalar>& entries, Field field)
{
    Matrix m(1, entries.size(), field);
    for (std::size_t j = 0; j < entries.size(); ++j) {
        Scalar v = entries[j].in(field);
        if (!v.is_zero()) m.data_[j].emplace_back(0U, std::move(v));
    }
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, Field field)
{
    Matrix m(n, 1, field);
    m.data_[0].emplace_back(static_cast<std::uint32_t>(i), Scalar(1).in(field));
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const
{
    require(i < rows_ && j < cols_, "index out of range");
    return lookup(data_[j], static_cast<std::uint32_t>(i));
}

std::size_t Matrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const SparseVec& c) { return c.empty(); });
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value)
{
    require(i < rows_ && j < cols_, "index out of range");
    auto& col = data_[j];
    auto idx = static_cast<std::uint32_t>(i);
    auto it = std::lower_bound(col.begin(), col.end(), idx, [](const auto& e, std::uint32_t k) { return e.first < k; });
    Scalar v = value.in(field_);
    if (it != col.end() && it->first == idx) {
        if (v.is_zero())
            col.erase(it);
        else
            it->second = std::move(v);
    } else if (!v.is_zero()) {
        col.insert(it, {idx, std::move(v)});
    }
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_, field_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : data_[j]) t.data_[i].emplace_back(static_cast<std::uint32_t>(j), v);
    return t;
}

Matrix Matrix::column(std::size_t j) const { return columns(j, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const
{
    require(first + count <= cols_, "column range out of bounds");
    Matrix m(rows_, count, field_);
    for (std::size_t j = 0; j < count; ++j) m.data_[j] = data_[first + j];
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const
{
    std::vector<std::int64_t> pos(rows_, -1);
    for (std::size_t t = 0; t < indices.size(); ++t) {
        require(indices[t] < rows_, "row selection out of range");
        pos[indices[t]] = static_cast<std::int64_t>(t);
    }
    Matrix m(indices.size(), cols_, field_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (const auto& [i, v] : data_[j])
            if (pos[i] >= 0) m.data_[j].emplace_back(static_cast<std::uint32_t>(pos[i]), v);
        std::sort(m.data_[j].begin(), m.data_[j].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> indices) const
{
    Matrix m(rows_, indices.size(), field_);
    for (std::size_t t = 0; t < indices.size(); ++t) {
        require(indices[t] < cols_, "column selection out of range");
        m.data_[t] = data_[indices[t]];
    }
    return m;
}

Matrix Matrix::in(Field f) const
{
    Matrix m(rows_, cols_, f);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : data_[j]) {
            Scalar x = v.in(f);
            if (!x.is_zero()) m.data_[j].emplace_back(i, std::move(x));
        }
    return m;
}

Matrix Matrix::flatten() const
{
    std::vector<std::pair<std::uint32_t, Scalar>> entries;
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : data_[j]) entries.emplace_back(static_cast<std::uint32_t>(i * cols_ + j), v);
    std::vector<SparseVec> c(1, std::move(entries));
    return from_columns(rows_ * cols_, std::move(c), field_);
}

Matrix Matrix::unflatten(const Matrix& v, std::size_t rows, std::size_t cols)
{
    require(v.cols() == 1 && v.rows() == rows * cols, "unflatten: expected a vector of length " + std::to_string(rows * cols));
    Matrix m(rows, cols, v.field());
    for (const auto& [t, x] : v.col(0)) m.data_[t % cols].emplace_back(static_cast<std::uint32_t>(t / cols), x);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "add: " + shape(rows_, cols_) + " vs " + shape(o.rows_, o.cols_));
    field_ = join(field_, o.field_);
    for (std::size_t j = 0; j < cols_; ++j) axpy(data_[j], Scalar(1), o.data_[j]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "sub: " + shape(rows_, cols_) + " vs " + shape(o.rows_, o.cols_));
    field_ = join(field_, o.field_);
    for (std::size_t j = 0; j < cols_; ++j) axpy(data_[j], Scalar(-1), o.data_[j]);
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require(a.cols_ == b.rows_, "mul: " + shape(a.rows_, a.cols_) + " * " + shape(b.rows_, b.cols_));
    Matrix out(a.rows_, b.cols_, join(a.field_, b.field_));
    std::vector<Scalar> acc(a.rows_);
    std::vector<char> used(a.rows_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < b.cols_; ++j) {
        touched.clear();
        for (const auto& [k, bv] : b.data_[j]) {
            for (const auto& [i, av] : a.data_[k]) {
                if (!used[i]) {
                    used[i] = 1;
                    touched.push_back(i);
                    acc[i] = av * bv;
                } else {
                    acc[i] += av * bv;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& col = out.data_[j];
        for (auto i : touched) {
            used[i] = 0;
            if (!acc[i].is_zero()) col.emplace_back(i, std::move(acc[i]));
            acc[i] = Scalar();
        }
    }
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& m)
{
    Matrix out(m.rows_, m.cols_, join(m.field_, s.field()));
    if (s.is_zero()) return out;
    for (std::size_t j = 0; j < m.cols_; ++j)
        for (const auto& [i, v] : m.data_[j]) {
            Scalar x = s * v;
            if (!x.is_zero()) out.data_[j].emplace_back(i, std::move(x));
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.first_difference(b) == a.cols_;
}

std::size_t Matrix::first_difference(const Matrix& o) const
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "compare: " + shape(rows_, cols_) + " vs " + shape(o.rows_, o.cols_));
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& x = data_[j];
        const auto& y = o.data_[j];
        if (x.size() != y.size()) return j;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].first != y[t].first || x[t].second != y[t].second) return j;
    }
    return cols_;
}

Matrix hstack(std::span<const Matrix> blocks)
{
    if (blocks.empty()) return Matrix();
    std::size_t r = blocks[0].rows();
    Field f = blocks[0].field();
    std::vector<SparseVec> cols;
    for (const auto& b : blocks) {
        require(b.rows() == r, "hstack: row count mismatch");
        f = join(f, b.field());
        for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.col(j));
    }
    return Matrix::from_columns(r, std::move(cols), f);
}

Matrix vstack(std::span<const Matrix> blocks)
{
    if (blocks.empty()) return Matrix();
    std::size_t c = blocks[0].cols();
    Field f = blocks[0].field();
    std::size_t total = 0;
    for (const auto& b : blocks) {
        require(b.cols() == c, "vstack: column count mismatch");
        f = join(f, b.field());
        total += b.rows();
    }
    std::vector<SparseVec> cols(c);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t j = 0; j < c; ++j)
            for (const auto& [i, v] : b.col(j)) cols[j].emplace_back(static_cast<std::uint32_t>(i + offset), v);
        offset += b.rows();
    }
    return Matrix::from_columns(total, std::move(cols), f);
}

Matrix hstack(std::initializer_list<Matrix> blocks) { return hstack(std::span<const Matrix>(blocks.begin(), blocks.size())); }
Matrix vstack(std::initializer_list<Matrix> blocks) { return vstack(std::span<const Matrix>(blocks.begin(), blocks.size())); }

Matrix kron(const Matrix& a, const Matrix& b)
{
    std::size_t rb = b.rows();
    std::size_t cb = b.cols();
    std::vector<SparseVec> cols(a.cols() * cb);
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
        for (std::size_t j2 = 0; j2 < cb; ++j2) {
            auto& col = cols[j1 * cb + j2];
            col.reserve(a.col(j1).size() * b.col(j2).size());
            for (const auto& [i1, v1] : a.col(j1))
                for (const auto& [i2, v2] : b.col(j2))
                    col.emplace_back(static_cast<std::uint32_t>(i1 * rb + i2), v1 * v2);
        }
    return Matrix::from_columns(a.rows() * rb, std::move(cols), join(a.field(), b.field()));
}

Matrix kron(std::initializer_list<Matrix> factors)
{
    Matrix out = Matrix::identity(1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

Matrix embed(std::size_t left, const Matrix& f, std::size_t right)
{
    Field k = f.field();
    return kron(kron(Matrix::identity(left, k), f), Matrix::identity(right, k));
}

Matrix twist(std::size_t x, std::size_t y, Field field)
{
    std::size_t dims[] = {x, y};
    std::size_t perm[] = {1, 0};
    return permute_factors(dims, perm, field);
}

Matrix permute_factors(std::span<const std::size_t> dims, std::span<const std::size_t> perm, Field field)
{
    std::size_t k = dims.size();
    require(perm.size() == k, "permute_factors: permutation length mismatch");
    std::vector<std::size_t> out_dims(k);
    for (std::size_t t = 0; t < k; ++t) out_dims[perm[t]] = dims[t];
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    std::vector<std::size_t> out_stride(k, 1);
    for (std::size_t t = k; t-- > 1;) out_stride[t - 1] = out_stride[t] * out_dims[t];
    std::vector<SparseVec> cols(total);
    std::vector<std::size_t> idx(k, 0);
    Scalar one = Scalar(1).in(field);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t target = 0;
        for (std::size_t t = 0; t < k; ++t) target += idx[t] * out_stride[perm[t]];
        cols[flat].emplace_back(static_cast<std::uint32_t>(target), one);
        for (std::size_t t = k; t-- > 0;) {
            if (++idx[t] < dims[t]) break;
            idx[t] = 0;
        }
    }
    return Matrix::from_columns(total, std::move(cols), field);
}

}  // namespace cringlab
