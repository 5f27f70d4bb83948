#pragma once

#include <memory>

#include "cringlab/comodule.hpp"

namespace cringlab {

/// A monoid in C-bicomodules. Maps out of cotensor products are stored in
/// cotensor coordinates; `*_ambient()` extends them to the full tensor product
/// through the pivot retraction, which agrees with them on the cotensor.
struct CRing {
    CoalgebraPtr coalgebra;
    Comodule carrier;  // (C,C)-bicomodule A
    Cotensor square;   // A□_C A
    Matrix mult;       // a × dim(A□A)
    Matrix unit;       // a × c

    std::size_t dim() const { return carrier.dim(); }
    Field field() const { return carrier.field(); }
    Matrix mult_ambient() const { return mult * square.retraction(); }
};
using CRingPtr = std::shared_ptr<const CRing>;

/// `mult` is given on A⊗A (a × a²); only its restriction to A□_C A is kept.
CRingPtr make_cring(CoalgebraPtr c, Comodule carrier, const Matrix& mult, Matrix unit);
Report check_cring(const CRing& a);

struct RightModule {
    CRingPtr ring;
    Comodule comodule;    // right C-comodule M
    Cotensor with_ring;   // M□_C A
    Matrix action;        // m × dim(M□A)

    std::size_t dim() const { return comodule.dim(); }
    Matrix action_ambient() const { return action * with_ring.retraction(); }
};

struct LeftModule {
    CRingPtr ring;
    Comodule comodule;   // left C-comodule N
    Cotensor with_ring;  // A□_C N
    Matrix action;       // n × dim(A□N)

    std::size_t dim() const { return comodule.dim(); }
    Matrix action_ambient() const { return action * with_ring.retraction(); }
};

/// Actions are given on M⊗A (resp. A⊗N).
RightModule make_right_module(CRingPtr a, Comodule m, const Matrix& action);
LeftModule make_left_module(CRingPtr a, Comodule n, const Matrix& action);
Report check_right_module(const RightModule& m);
Report check_left_module(const LeftModule& n);

/// f: A → B bicolinear, unital and multiplicative.
Report check_cring_morphism(const CRing& a, const CRing& b, const Matrix& f);

/// A sub-bicomodule closed under the product and containing the unit, as a C-ring.
/// Throws ShapeError if the subspace is not closed.
CRingPtr sub_cring(const CRing& a, const Subspace& b);
/// Empty when the subspace is a sub-C-ring, otherwise the first failing condition.
std::optional<std::string> sub_cring_failure(const CRing& a, const Subspace& b);

}  // namespace cringlab
