#pragma once

#include "cringlab/context.hpp"

namespace cringlab {

class DescentFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// E = M□_C N with Δ_E = (M□σ□N)∘(ρ^M□N) and ε_E = τ̂. Only σ and τ̂ of the
/// context are used, so any verified context yields the same E.
CoalgebraPtr coendomorphism_coalgebra(const MatrixRingContext& ctx);

/// (C, D', N, M, σ, π∘τ_E) for a coalgebra map π: E → D' out of
/// coendomorphism_coalgebra(ctx). M and N get their D'-coactions through π.
MatrixRingContext context_over(const MatrixRingContext& ctx, const CoalgebraMap& pi);

/// ρ̄_N = (N⊗τ̂)∘(N□ρ̄_M□N)∘(σ□A□N)∘(^Aρ□N). The report carries the module
/// axioms and the balance τ̂(m◁a⊗n) = τ̂(m⊗a▷n) on M□A□N.
/// Throws ContextNotVerified, or ShapeError when `m` is not the M of the context.
LeftModule induced_left_action(const MatrixRingContext& ctx, const RightModule& m, Report* report = nullptr);

struct Coendomorphism {
    CoalgebraPtr e;             // M□_C N
    LeftModule n;               // induced A-action on N
    Subspace relations;         // ker π_A, in E coordinates
    QuotientCoalgebra s;        // S = E_A(M), projection π_A
    MatrixRingContext context;  // (C, S, N, M, σ, π_A∘τ_E)
};
/// Throws ContextNotVerified, or DescentFailure if the relations are not a coideal.
Coendomorphism coend_coalgebra(const RightModule& m, const MatrixRingContext& ctx, Report* report = nullptr);

struct GaloisReport {
    Coendomorphism coend;
    Matrix beta;                 // A → N⊗M
    bool image_in_cotensor = false;
    bool bijective = false;      // onto N□_S M
    bool principal = false;
    AffineResult retraction;     // δ: S⊗M → M
    Report report{"Galois module"};
};
GaloisReport beta(const RightModule& m, const MatrixRingContext& ctx);
bool is_galois(const RightModule& m, const MatrixRingContext& ctx);
bool is_principal(const RightModule& m, const MatrixRingContext& ctx);

enum class ChiCodomain { tensor, cotensor };
/// Left A-linear χ with χ∘β = id_A, on N⊗M (a × n·m) or on N□_S M
/// (a × dim, in cotensor coordinates).
AffineResult chi_solver(const RightModule& m, const GaloisReport& g, ChiCodomain where);

struct Character {
    CRingPtr ring;
    Matrix kappa;  // 1 × a
};
/// Empty for a multiplicative κ with κ∘η = ε.
std::optional<std::string> character_failure(const CRing& a, const Matrix& kappa);
/// κ = ε_C∘ρ̄_C∘^Aρ for a right A-action on the regular comodule C.
Character character_from_action(const RightModule& c);
/// ρ̄_C(c⊗a) = ε(c)κ(a₀)a₁. Throws std::invalid_argument for a non-character.
RightModule action_from_character(const Character& k);

struct Coinvariants {
    Coideal ideal;               // I_κ
    QuotientCoalgebra quotient;  // B_κ = C/I_κ
};
Coinvariants coinvariant_coalgebra(const Character& k);

struct GaloisCRing {
    Coinvariants coinvariants;
    Matrix beta;  // A → C⊗C, a ↦ a₋₁⊗κ(a₀)a₁
    Report report{"Galois C-ring"};
};
/// Compares A with C□_{B_κ}C; the report is ok iff A is a Galois C-ring for κ.
GaloisCRing is_galois_cring(const Character& k);

/// Matrix C-ring A = N□_D M of a coalgebra epimorphism π: E → D with E the
/// coendomorphism coalgebra of the context.
struct GaloisBase {
    MatrixRingContext ctx;
    CoalgebraPtr e;
    CoalgebraMap pi;
    MatrixRingContext over_d;
    MatrixCRing a;
    Subspace ker_pi;  // in E coordinates
};
/// `pi` may have any domain of the right dimension; it is re-based onto E.
GaloisBase make_galois_base(MatrixRingContext ctx, const CoalgebraMap& pi);

struct Intermediate {
    MatrixRingContext ctx;  // over E/X
    MatrixCRing ring;
    Subspace in_a;          // the carrier inside A (coordinates)
};
/// A(X) = N□_{E/X} M. Throws NotACoideal, or ShapeError when X ⊄ ker π.
Intermediate a_of_x(const GaloisBase& base, const Subspace& x);
/// X(B) = ker π_B for a sub-C-ring B of A (coordinates). Throws ShapeError.
Subspace x_of_b(const GaloisBase& base, const Subspace& b);
/// M as a right module over the sub-C-ring B.
RightModule restrict_module(const GaloisBase& base, const CRingPtr& b_ring, const Subspace& b);

struct ConnectionLimits {
    std::size_t max_kernel_dim = 4;
    std::size_t max_subspaces = 4096;
    std::size_t max_ring_dim = 4;  // sub-C-rings of A are enumerated up to this dimension
};
/// Checks both Galois-connection inclusions at the extremes and, over GF(p)
/// within the limits, for every subcoideal of ker π.
Report connection_report(const GaloisBase& base, ConnectionLimits limits = {});

/// All subspaces of the span of `basis` (columns). Empty optional past the cap.
std::optional<std::vector<Subspace>> enumerate_subspaces(const Matrix& basis, std::size_t cap);

}  // namespace cringlab
