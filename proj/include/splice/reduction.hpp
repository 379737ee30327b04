#ifndef SPLICE_REDUCTION_HPP
#define SPLICE_REDUCTION_HPP

#include <compare>
#include <utility>
#include <vector>

#include "splice/graded_complex.hpp"
#include "splice/umap.hpp"

namespace splice {

// Two-step summand F[U]a -> F[U]b with ∂a = U^length b. `top` is gr(b), the
// top of the torsion it contributes to homology; gr(a) = top + 1 - 2*length.
struct Step {
    Rational top;
    int length = 0;
    friend bool operator==(const Step&, const Step&) = default;
};
bool operator<(const Step& a, const Step& b);

struct NormalForm {
    Rational tower_grading;
    std::vector<Step> steps;  // sorted
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// The complex with one tower at tower_grading plus the listed two-step pieces.
GradedComplex from_normal_form(const NormalForm& nf, std::string name = "");

// One elementary move of the reduction together with its homotopy
// equivalence data: f: before -> after, g: after -> before, h: before -> before
// (degree +1) with f g = id and g f = id + ∂h + h∂.
struct ReductionStep {
    std::string description;
    GradedComplex before;
    GradedComplex after;
    UMap f, g, h;
};

// Splitting of a complex into towers (generators with zero differential in
// and out) and two-step pairs, with the homotopy equivalence to the input.
struct Decomposition {
    GradedComplex reduced;                               // towers first, then (a, b) pairs
    std::vector<std::size_t> towers;                     // indices into `reduced`
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (a, b) with ∂a = U^k b
    UMap to_reduced;    // C -> reduced
    UMap from_reduced;  // reduced -> C
    UMap homotopy;      // C -> C, degree +1

    std::vector<Step> steps() const;
};

// Unit cancellation (lexicographically smallest (row, col) unit entry first)
// followed by homogeneous change of basis. Throws InvalidInput on an invalid
// complex. When `trace` is given, every elementary move is appended to it.
Decomposition decompose(const GradedComplex& c, std::vector<ReductionStep>* trace = nullptr);

struct Reduction {
    NormalForm normal_form;
    Decomposition decomposition;
    std::size_t tower = 0;  // index of the tower generator in decomposition.reduced
};

// Throws NotRankOne unless exactly one tower survives.
Reduction reduce(const GradedComplex& c);

Rational d_invariant(const GradedComplex& c);

}  // namespace splice

#endif
