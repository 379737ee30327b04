#ifndef SPLICE_UMAP_HPP
#define SPLICE_UMAP_HPP

#include <vector>

#include "splice/graded_complex.hpp"

namespace splice {

// F2[U]-linear map between two graded complexes. The complexes themselves are
// passed alongside; a UMap only records the matrix (rows = target generators,
// columns = source generators) and its grading shift. Homogeneity means a
// nonzero entry (i, j) equal to U^k satisfies gr_target(i) - 2k = gr_source(j) + degree.
struct UMap {
    UMatrix matrix;
    int degree = 0;

    std::size_t rows() const { return matrix.rows(); }
    std::size_t cols() const { return matrix.cols(); }
    friend bool operator==(const UMap&, const UMap&) = default;
};

UMap identity_map(const GradedComplex& c);
UMap zero_map(const GradedComplex& source, const GradedComplex& target, int degree);

// g ∘ f
UMap compose(const UMap& g, const UMap& f);
// Degrees must agree.
UMap operator+(const UMap& f, const UMap& g);

std::vector<Violation> map_violations(const GradedComplex& source, const GradedComplex& target, const UMap& f);
bool is_chain_map(const GradedComplex& source, const GradedComplex& target, const UMap& f);
// ∂h + h∂ == f + g
bool is_homotopy(const GradedComplex& source, const GradedComplex& target, const UMap& h, const UMap& f,
                 const UMap& g);

// f: C1 -> C2 gives f*: C2* -> C1* (transpose, same degree).
UMap dual_map(const UMap& f);
UMap tensor_map(const UMap& f, const UMap& g);

}  // namespace splice

#endif
