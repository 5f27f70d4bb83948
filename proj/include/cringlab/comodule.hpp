#pragma once

#include <optional>
#include <vector>

#include "cringlab/coalgebra.hpp"

namespace cringlab {

/// One side of a comodule structure: a coalgebra and its coaction.
/// Left coactions are (c·m) × m matrices (M → C⊗M), right ones (m·c) × m (M → M⊗C).
struct Coaction {
    CoalgebraPtr coalgebra;
    Matrix matrix;
};

/// A space with an optional left and an optional right coaction. A left
/// comodule has only `left`, a right comodule only `right`, and a (D,C)-bicomodule
/// has a left D-coaction and a right C-coaction.
struct Comodule {
    FinSpace space;
    std::optional<Coaction> left;
    std::optional<Coaction> right;

    std::size_t dim() const { return space.dim(); }
    Field field() const;
    const Coaction& left_side() const;
    const Coaction& right_side() const;
};

/// Validates shapes (throws ShapeError).
Comodule make_comodule(FinSpace space, std::optional<Coaction> left, std::optional<Coaction> right);
/// C over itself via Δ on the requested sides.
Comodule regular(const CoalgebraPtr& c, bool left = true, bool right = true);
/// M* of a right comodule M, as a left comodule (and vice versa).
Comodule dual_comodule(const Comodule& m);
/// Forgets one side.
Comodule left_part(const Comodule& m);
Comodule right_part(const Comodule& m);

/// True if the coalgebras agree (same object or identical structure constants).
bool same_coalgebra(const Coalgebra& a, const Coalgebra& b);

Report check_comodule(const Comodule& m);
/// Checks f: source → target intertwines every side present on both.
Report check_comodule_map(const Comodule& source, const Comodule& target, const Matrix& f);

/// (I⊗f)∘ρ and (f⊗I)∘^ρ along a coalgebra map C → D.
Comodule corestrict(const Comodule& m, const CoalgebraMap& f);

/// X₁□X₂□…□Xₙ inside X₁⊗…⊗Xₙ. The basis is the canonical basis of the
/// subspace; outer coactions (left of X₁, right of Xₙ) are induced when present.
struct Cotensor {
    FinSpace ambient;
    std::vector<std::size_t> factor_dims;
    Subspace subspace;
    Comodule comodule;

    std::size_t dim() const { return subspace.dim(); }
    const Matrix& inclusion() const { return subspace.basis(); }
    Matrix retraction() const { return subspace.retraction(); }
};

/// Throws ShapeError on missing sides or mismatched coalgebras.
Cotensor cotensor(const Comodule& m, const Comodule& n);
Cotensor cotensor_chain(const std::vector<const Comodule*>& factors);
/// Checks that the induced outer coactions corestrict to the cotensor and commute.
Report check_cotensor(const Cotensor& t, const std::vector<const Comodule*>& factors);

/// M□_C C → M and C□_C N → N induced by the counit.
Matrix right_unitor(const Cotensor& m_c, const Coalgebra& c);
Matrix left_unitor(const Cotensor& c_n, const Coalgebra& c);

/// δ: D⊗M → M, left D-colinear with δ∘^Mρ = id, for the left coaction of m.
AffineResult injective_retraction(const Comodule& m);
/// The right-handed mirror: δ: M⊗D → M.
AffineResult right_injective_retraction(const Comodule& m);

}  // namespace cringlab
