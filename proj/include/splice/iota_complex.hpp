#ifndef SPLICE_IOTA_COMPLEX_HPP
#define SPLICE_IOTA_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splice/graded_complex.hpp"
#include "splice/umap.hpp"

namespace splice {

struct IotaComplex {
    GradedComplex complex;
    UMap iota;  // degree 0
    friend bool operator==(const IotaComplex&, const IotaComplex&) = default;
};

// (F[U]_d, id)
IotaComplex trivial_iota(const Rational& d = Rational(0), std::string name = "");

// H of degree f.degree + 1 with ∂H + H∂ = f + g, or nullopt. Every unknown
// entry of H is a single bit because homogeneity fixes its exponent.
// Throws DegreeMismatch when f and g differ in degree or shape.
std::optional<UMap> homotopy_solve(const GradedComplex& source, const GradedComplex& target, const UMap& f,
                                   const UMap& g);

struct IotaCheck {
    std::vector<Violation> violations;
    std::optional<UMap> homotopy;  // witness for ι² ≃ id when found
    bool ok() const { return violations.empty(); }
};

IotaCheck verify_iota(const IotaComplex& x);

// Upper bound on the number of F2 unknowns a local-map search may create.
// The default is 4096 and can be overridden with SPLICE_FLOER_BUDGET.
struct SearchBudget {
    std::size_t max_unknowns = 4096;
    static SearchBudget from_environment();
};

bool is_local_map(const UMap& f, const IotaComplex& x1, const IotaComplex& x2);

// Decides whether a local map x1 -> x2 exists and returns one. The search is
// a single F2 linear system: chain-map equations, the ι-homomorphism equations
// with the homotopy entries as extra unknowns, and the condition that the map
// is nonzero on the towers (a linear functional once both sides are reduced).
// The witness is the solution with all free unknowns zero.
std::optional<UMap> find_local_map(const IotaComplex& x1, const IotaComplex& x2,
                                   const SearchBudget& budget = SearchBudget::from_environment());

bool is_locally_trivial(const IotaComplex& x, const SearchBudget& budget = SearchBudget::from_environment());

IotaComplex tensor_iota(const IotaComplex& a, const IotaComplex& b);
IotaComplex dual_iota(const IotaComplex& x);

}  // namespace splice

#endif
