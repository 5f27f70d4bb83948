#pragma once

#include "cringlab/comodule.hpp"

namespace cringlab::fixtures {

/// n group-like elements g1..gn.
CoalgebraPtr grouplike(std::size_t n, Field f = Field::rationals());
/// Matrix coalgebra Mᶜ(n): Δe_ij = Σ_k e_ik⊗e_kj, εe_ij = δ_ij.
CoalgebraPtr matrix_coalgebra(std::size_t n, Field f = Field::rationals());
AlgebraPtr matrix_algebra(std::size_t n, Field f = Field::rationals());
/// kℤ₂ with basis 1, g.
AlgebraPtr group_algebra_z2(Field f = Field::rationals());
/// k[t]/(t²) with basis 1, t.
AlgebraPtr dual_numbers(Field f = Field::rationals());
/// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.
AlgebraPtr h4_algebra(Field f = Field::rationals());
CoalgebraPtr h4_coalgebra(Field f = Field::rationals());
/// Antipode and its inverse as 4 × 4 matrices.
Matrix h4_antipode(Field f = Field::rationals());
Matrix h4_antipode_inverse(Field f = Field::rationals());

/// kⁿ as a right Mᶜ(n)-comodule: ρ(v_i) = Σ_j v_j⊗e_ji.
Comodule matrix_comodule(const CoalgebraPtr& mc, std::size_t n);

}  // namespace cringlab::fixtures
