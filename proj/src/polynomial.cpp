#include "cringlab/polynomial.hpp"

#include <stdexcept>

namespace cringlab {

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c)
{
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, Field f)
{
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, Scalar(1).in(f));
    return p;
}

std::size_t Polynomial::total_degree() const
{
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) {
        std::size_t s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial r(std::max(nvars_, o.nvars_));
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(m1.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m1[i] + m2[i]);
            r.add_term(m, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::exact_divide(const Polynomial& q) const
{
    if (q.is_zero()) throw std::logic_error("polynomial division by zero");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const auto& [lm, lc] = *q.terms_.rbegin();
    Scalar inv = lc.inverse();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        Monomial t(rm.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (rm[i] < lm[i]) throw std::logic_error("inexact polynomial division");
            t[i] = static_cast<std::uint16_t>(rm[i] - lm[i]);
        }
        Polynomial term(nvars_);
        term.add_term(t, rc * inv);
        quot.add_term(t, rc * inv);
        rem = rem - term * q;
    }
    return quot;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const
{
    Scalar total;
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint16_t e = 0; e < m[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m)
{
    std::size_t n = m.size();
    std::size_t nvars = n == 0 ? 0 : m[0][0].nvars();
    Polynomial prev = Polynomial::constant(nvars, Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return Polynomial(nvars);
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
        prev = m[k][k];
    }
    if (n == 0) return Polynomial::constant(0, Scalar(1));
    Polynomial det = m[n - 1][n - 1];
    return negate ? Polynomial(nvars) - det : det;
}

namespace {

/// Restricts p to the first `used` variables by treating the last one as the
/// main variable; returns coefficient polynomials by degree.
std::map<std::uint16_t, Polynomial> split_last(const Polynomial& p, std::size_t var)
{
    std::map<std::uint16_t, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial::Monomial rest = m;
        std::uint16_t d = rest[var];
        rest[var] = 0;
        auto it = out.try_emplace(d, Polynomial(p.nvars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

std::optional<std::vector<Scalar>> recursive_point(const Polynomial& p, std::size_t used, Field f)
{
    if (used == 0) return std::vector<Scalar>(p.nvars());
    std::size_t var = used - 1;
    auto parts = split_last(p, var);
    auto top = parts.rbegin();
    auto pt = recursive_point(top->second, var, f);
    if (!pt) return std::nullopt;
    std::uint64_t limit = top->first + 1;
    if (f.is_prime()) limit = std::min<std::uint64_t>(limit, f.characteristic());
    for (std::uint64_t x = 0; x < limit; ++x) {
        (*pt)[var] = Scalar(static_cast<long long>(x)).in(f);
        if (!p.evaluate(*pt).is_zero()) return pt;
    }
    return std::nullopt;
}

}  // namespace

PointSearch nonvanishing_point(const Polynomial& p, Field f, std::uint64_t max_points)
{
    PointSearch out;
    if (p.is_zero()) return out;
    out.point = recursive_point(p, p.nvars(), f);
    if (out.point || !f.is_prime()) return out;
    std::uint64_t q = f.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        if (total > max_points / q) {
            out.decided = false;
            return out;
        }
        total *= q;
    }
    std::vector<Scalar> pt(p.nvars());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < pt.size(); ++i) {
            pt[i] = Scalar(static_cast<long long>(c % q)).in(f);
            c /= q;
        }
        if (!p.evaluate(pt).is_zero()) {
            out.point = pt;
            return out;
        }
    }
    return out;
}

}  // namespace cringlab
