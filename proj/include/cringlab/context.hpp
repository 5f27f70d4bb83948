#pragma once

#include "cringlab/cring.hpp"

namespace cringlab {

class ContextNotVerified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (C, D, N, M, σ, τ) with N a (C,D)-bicomodule and M a (D,C)-bicomodule.
/// σ is stored on the ambient N⊗M, τ on the ambient M⊗N.
struct MatrixRingContext {
    CoalgebraPtr c;
    CoalgebraPtr d;
    Comodule n;
    Comodule m;
    Cotensor nm;  // N□_D M, a C-bicomodule
    Cotensor mn;  // M□_C N, a D-bicomodule
    Matrix sigma; // (n·m) × c
    Matrix tau;   // d × (m·n)

    Field field() const { return c->field(); }
    /// ε_D∘τ on M⊗N; throws for a non-counital D.
    Matrix tau_hat() const;
    Matrix sigma_coords() const { return nm.retraction() * sigma; }
    Matrix tau_coords() const { return tau * mn.inclusion(); }
};

MatrixRingContext make_context(CoalgebraPtr c, CoalgebraPtr d, Comodule n, Comodule m, Matrix sigma, Matrix tau);
Report verify_context(const MatrixRingContext& ctx);

/// M = N = C through f, σ = Δ_C, τ = f∘(ε_C⊗C). Throws if f is not a coalgebra map.
MatrixRingContext trivial_context_from_map(const CoalgebraMap& f);

struct MatrixCRing {
    CRingPtr ring;      // N□_D M
    RightModule m;      // action τ̂□M
    LeftModule n;       // action N□τ̂
};
/// Throws ContextNotVerified.
MatrixCRing build_matrix_cring(const MatrixRingContext& ctx);

struct Completion {
    std::optional<MatrixRingContext> context;
    AffineResult solve;
    /// τ: M□_C N → D bijective (for τ completions) or σ: C → N□_D M bijective.
    bool bijective = false;
};
/// Solves for the missing map; the given one is taken from `ctx`.
Completion complete_tau_given_sigma(const MatrixRingContext& ctx);
Completion complete_sigma_given_tau(const MatrixRingContext& ctx);

/// Unit/counit triangles of the adjunction -□_C N ⊣ -⊗M at the right C-comodule x and at k.
Report adjunction_triangles(const MatrixRingContext& ctx, const Comodule& x);

/// Context with firm D; N and M firm as D-comodules.
struct FirmContext {
    MatrixRingContext base;
    Cotensor n_d;        // N□_D D
    Cotensor d_m;        // D□_D M
    Matrix nabla_n;      // N□_D D → N (coordinates)
    Matrix nabla_m;      // D□_D M → M (coordinates)
};
/// Throws ShapeError when D, N or M is not firm.
FirmContext make_firm_context(MatrixRingContext base);
Report verify_firm_context(const FirmContext& ctx);
/// μ_A = (∇_N□M)∘(N□τ□M); both stated forms are compared in the report.
CRingPtr build_firm_cring(const FirmContext& ctx, Report* report = nullptr);
/// E = M□_C N with Δ_E = (M□σ□N)∘(ρ^M□N), checked firm with ∇_E = (_M∇□N)∘(τ□M□N).
CoalgebraPtr build_firm_e(const FirmContext& ctx, Report* report = nullptr);

}  // namespace cringlab
