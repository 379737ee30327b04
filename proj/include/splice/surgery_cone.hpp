#ifndef SPLICE_SURGERY_CONE_HPP
#define SPLICE_SURGERY_CONE_HPP

#include "splice/iota_complex.hpp"

namespace splice {

// Mapping cone of v on two copies of A, glued to B, with the involution
// swapping the copies. Generator order is A_l, A_r, B with ids "l:<id>",
// "r:<id>", "b:<id>". A generators keep their grading, B generators sit at
// gr_B - deg(v) - 1, and everything is shifted by `shift`.
struct SurgeryCone {
    IotaComplex iota;
    GradedComplex a;
    GradedComplex b;
    UMap v;
    Rational shift;
};

// Throws InvalidCone if v is not a homogeneous chain map of even degree or B
// is not homotopy equivalent to a single tower.
SurgeryCone surgery_cone(const GradedComplex& a, const GradedComplex& b, const UMap& v, const Rational& shift);

struct CorollaryResult {
    IotaComplex model;  // (F[U]_d, id)
    Rational d;
    UMap to_model;      // cone -> model
    UMap from_model;    // model -> cone
};

// Explicit local equivalence between a cone with d(A) = 0 and the rank one
// model: reduce A and B, transfer v, then clear v on the step generators by
// adding multiples of the tower generator on both copies. Throws
// HypothesisFailed if d(A) != 0 or the transferred v is not a unit on the
// towers.
CorollaryResult corollary_reduce(const SurgeryCone& cone);

}  // namespace splice

#endif
