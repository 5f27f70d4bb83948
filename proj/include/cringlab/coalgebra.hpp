#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cringlab/linear.hpp"
#include "cringlab/report.hpp"

namespace cringlab {

/// Finite-dimensional coalgebra by structure constants. The counit is absent
/// for non-counital (e.g. firm) coalgebras.
struct Coalgebra {
    FinSpace space;
    Matrix comult;                 // n² × n
    std::optional<Matrix> counit;  // 1 × n

    std::size_t dim() const { return space.dim(); }
    Field field() const { return comult.field(); }
    bool counital() const { return counit.has_value(); }
};
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

struct Algebra {
    FinSpace space;
    Matrix mult;  // n × n²
    Matrix unit;  // n × 1

    std::size_t dim() const { return space.dim(); }
    Field field() const { return mult.field(); }
    /// x ↦ a·x and x ↦ x·a as n × n matrices.
    Matrix left_mult(const Matrix& a) const;
    Matrix right_mult(const Matrix& a) const;
};
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct CoalgebraMap {
    CoalgebraPtr source;
    CoalgebraPtr target;
    Matrix map;  // dim target × dim source
};

struct Coideal {
    CoalgebraPtr coalgebra;
    Subspace subspace;
};

class NotACoideal : public std::runtime_error {
public:
    NotACoideal(const std::string& what, std::string witness) : std::runtime_error(what), witness(std::move(witness)) {}
    std::string witness;
};

/// Validates shapes (throws ShapeError).
CoalgebraPtr make_coalgebra(FinSpace space, Matrix comult, std::optional<Matrix> counit);
AlgebraPtr make_algebra(FinSpace space, Matrix mult, Matrix unit);

/// Human-readable vector in basis-label notation, e.g. "e11 - e22".
std::string describe(const Matrix& column, const std::vector<std::string>& labels);
std::string describe(const SparseVec& v, const std::vector<std::string>& labels);

Report check_coalgebra(const Coalgebra& c);
Report check_algebra(const Algebra& a);
Report check_coalgebra_map(const CoalgebraMap& f);

CoalgebraPtr dual_coalgebra(const Algebra& a);
AlgebraPtr dual_algebra(const Coalgebra& c);

/// Empty when I is a coideal, otherwise a description of the failure.
std::optional<std::string> coideal_failure(const Coalgebra& c, const Subspace& i);
bool is_coideal(const Coalgebra& c, const Subspace& i);

struct QuotientCoalgebra {
    CoalgebraPtr coalgebra;
    CoalgebraMap projection;
    QuotientData data;
};
/// Throws NotACoideal.
QuotientCoalgebra quotient_coalgebra(const CoalgebraPtr& c, const Subspace& i);

struct FirmResult {
    bool firm = false;
    Subspace square;  // D□_D D inside D⊗D
    Matrix nabla;     // inverse of Δ: D□_D D (coordinates) → D, when firm
};
FirmResult is_firm(const Coalgebra& d);

/// Element e of A⊗A (n² × 1) with μ(e) = 1 and (a⊗1)e = e(1⊗a).
std::optional<Matrix> separability_element(const Algebra& a);
bool is_separability_element(const Algebra& a, const Matrix& e);

/// Gram matrix (λ(e_i e_j)) of a functional λ (1 × n).
Matrix gram_matrix(const Algebra& a, const Matrix& lambda);
bool is_frobenius_form(const Algebra& a, const Matrix& lambda);

struct FrobeniusResult {
    std::optional<Matrix> form;  // 1 × n
    bool decided = true;
    std::string path;            // "dual-basis", "sampled", "symbolic", or reason when undecided
};
/// Dual-basis functionals are tried first, then (with a seed) random samples,
/// then the exact determinant of the generic Gram matrix.
FrobeniusResult frobenius_form(const Algebra& a, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace cringlab
