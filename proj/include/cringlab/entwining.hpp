#pragma once

#include "cringlab/galois.hpp"

namespace cringlab {

/// ψ_R: C⊗A → A⊗C, written c⊗a ↦ a_α⊗c^α.
struct RightWeakEntwining {
    AlgebraPtr a;
    CoalgebraPtr c;
    Matrix psi;  // (a·c) × (c·a)
};

/// ψ_L: A⊗C → C⊗A, written a⊗c ↦ c_E⊗a^E.
struct LeftWeakEntwining {
    AlgebraPtr a;
    CoalgebraPtr c;
    Matrix psi;  // (c·a) × (a·c)
};

struct InvertibleWeakEntwining {
    RightWeakEntwining right;
    LeftWeakEntwining left;
};

/// Validates shapes (throws ShapeError); C must be counital.
RightWeakEntwining make_right_we(AlgebraPtr a, CoalgebraPtr c, Matrix psi);
LeftWeakEntwining make_left_we(AlgebraPtr a, CoalgebraPtr c, Matrix psi);
InvertibleWeakEntwining make_invertible_we(RightWeakEntwining right, Matrix psi_left);

/// WE1–WE4, each an exact identity; witnesses name a basis tensor.
Report check_right_we(const RightWeakEntwining& s);
/// LE1–LE4.
Report check_left_we(const LeftWeakEntwining& s);

struct Projections {
    Matrix p;      // p_R on A⊗C, or p_L on C⊗A
    Matrix p_bar;  // p̄_R on C⊗A, or p̄_L on A⊗C
};
Projections projections(const RightWeakEntwining& s);
Projections projections(const LeftWeakEntwining& s);
/// Idempotence of both projections and ψ∘p̄ = p∘ψ = ψ.
Report check_projections(const RightWeakEntwining& s);
Report check_projections(const LeftWeakEntwining& s);

/// Both halves, (b), (b*), the counit-of-unit condition and p̄_R = p_L, p̄_L = p_R.
Report check_invertible(const InvertibleWeakEntwining& s);

struct EntwiningCRing {
    CRingPtr ring;
    Subspace carrier;  // Im p̄_R ⊆ C⊗A, or Im p̄_L ⊆ A⊗C
};
/// A = Im p̄_R with ^Aρ = Δ⊗A, ρ^A = (C⊗ψ_R)∘(Δ⊗A), μ(c⊗a⊗c'⊗a') = c⊗ε(c')aa', η(c) = p̄_R(c⊗1).
/// Throws std::invalid_argument when the axioms fail.
EntwiningCRing cring_from_we(const RightWeakEntwining& s, Report* report = nullptr);
/// B = Im p̄_L with ^Bρ = (ψ_L⊗C)∘(A⊗Δ), ρ^B = A⊗Δ, μ(a⊗c⊗a'⊗c') = aa'⊗ε(c)c', η(c) = p̄_L(1⊗c).
EntwiningCRing cring_from_left_we(const LeftWeakEntwining& s, Report* report = nullptr);

/// A right A-module with a right C-coaction.
struct WeakEntwinedModule {
    FinSpace space;
    Matrix action;    // m × (m·a)
    Matrix coaction;  // (m·c) × m
};
Report check_entwined_module(const RightWeakEntwining& s, const WeakEntwinedModule& m);
/// C with the regular coaction and the given right A-action.
WeakEntwinedModule regular_entwined(const RightWeakEntwining& s, const Matrix& action);

/// Θ: the C-ring action ρ_M∘(M⊗ε⊗A) restricted to M□_C A.
RightModule to_cring_module(const EntwiningCRing& a, const RightWeakEntwining& s, const WeakEntwinedModule& m);
/// Ψ: the A-action ρ̄_M∘(M□p̄_R)∘(ρ^M⊗A).
WeakEntwinedModule from_cring_module(const EntwiningCRing& a, const RightWeakEntwining& s, const RightModule& m);

/// ψ_R|A and ψ_L|B are inverse C-ring isomorphisms.
Report iso_psi_restrictions(const InvertibleWeakEntwining& s);

/// a·c = c_E(1) ε(c_E(2) a^E) for C entwined through `action`; c × (a·c).
/// The report carries the module axioms, the left entwining condition and
/// agreement with the composite through the C-ring of the right structure.
Matrix induced_left_action_on_c(const InvertibleWeakEntwining& s, const Matrix& action, Report* report = nullptr);

struct CoextensionData {
    AlgebraPtr a;
    CoalgebraPtr c;
    Matrix action;                 // c × (c·a)
    Coideal ideal;                 // I
    QuotientCoalgebra b;           // B = C/I
    MatrixRingContext over_b;      // C□_B C as N□_B M
    Matrix beta_bar;               // C⊗A → C⊗C
    AffineResult chi_solve;
    std::optional<Matrix> chi_bar; // (c·a) × dim(C□_B C), cotensor coordinates
    std::optional<Matrix> omega;   // a × dim(C□_B C)
};
/// Builds I, B and β̄ and searches for χ̄. Throws std::invalid_argument when
/// the action is not a unital associative right action.
CoextensionData coextension(AlgebraPtr a, CoalgebraPtr c, Matrix action);
/// ψ_R = (ω⊗C)∘(C⊗Δ)∘β̄. Throws std::runtime_error when χ̄ was not found.
RightWeakEntwining psi_from_coextension(const CoextensionData& data);
/// Coideal, β̄ and χ̄ checks; when χ̄ exists also the induced ψ_R, the
/// entwined structure on C, uniqueness of ψ_R, I = I_κ and the Galois property.
Report galois_coextension_check(const CoextensionData& data);

/// ĝ: C⊗C → A (a × c²) subject to the two linear conditions on ĝ.
AffineResult ghat_solver(const InvertibleWeakEntwining& s, const Matrix& action);
/// g = p̄_R∘(C⊗ĝ)∘(Δ⊗C) and back, ĝ = (ε⊗A)∘g.
Matrix g_of_ghat(const RightWeakEntwining& s, const Matrix& ghat);
Matrix ghat_of_g(const RightWeakEntwining& s, const Matrix& g);
/// The two defining conditions, the round trip and g∘β = id on the C-ring.
Report check_ghat(const InvertibleWeakEntwining& s, const Matrix& action, const Matrix& ghat);

struct KtsResult {
    Report report{"self-injective coextension"};
    std::optional<Matrix> ghat;
    std::optional<Matrix> lambda;  // B⊗C → C
    std::string certificate;       // "separable", "frobenius:<path>" or empty
    std::size_t dim_b = 0;
};
KtsResult kts_pipeline(const InvertibleWeakEntwining& s, const Matrix& action,
                       std::optional<std::uint64_t> seed = std::nullopt);

namespace fixtures {

/// A = span{1, g} inside Sweedler's H₄, C = H₄, ψ_R(h⊗a) = a₁⊗ha₂ and
/// ψ_L(a⊗h) = hS⁻¹(a₂)⊗a₁.
InvertibleWeakEntwining h4_entwining(Field f = Field::rationals());
/// Right multiplication of H₄ by A.
Matrix h4_action(Field f = Field::rationals());
/// The left A-linear projection H₄ → A onto span{1, g}.
Matrix h4_projection(Field f = Field::rationals());
/// ψ = flip for any A and C.
InvertibleWeakEntwining flip_entwining(AlgebraPtr a, CoalgebraPtr c);
/// A = k, C grouplike over GF(3) with ψ(g_i⊗1) = φ_i 1⊗g_i and φ = (1, 1, 0).
InvertibleWeakEntwining degenerate_unit_entwining();
/// The one-dimensional algebra k.
AlgebraPtr ground_algebra(Field f = Field::rationals());

}  // namespace fixtures

}  // namespace cringlab
