#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cringlab/scalar.hpp"

namespace cringlab {

/// Sparse multivariate polynomial in a fixed number of variables, terms kept
/// in lexicographic exponent order.
class Polynomial {
public:
    using Monomial = std::vector<std::uint16_t>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial variable(std::size_t nvars, std::size_t index, Field f);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t total_degree() const;
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Scalar& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    /// Quotient of an exact division; throws std::logic_error if inexact.
    Polynomial exact_divide(const Polynomial& q) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_ = 0;
    std::map<Monomial, Scalar> terms_;
};

/// Fraction-free (Bareiss) determinant.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

struct PointSearch {
    std::optional<std::vector<Scalar>> point;
    bool decided = true;
};
/// A point of f^n where p does not vanish. Over small prime fields a nonzero
/// polynomial may vanish everywhere; the search is exhaustive up to
/// `max_points` points and reports undecided beyond that.
PointSearch nonvanishing_point(const Polynomial& p, Field f, std::uint64_t max_points = 1U << 20);

}  // namespace cringlab
