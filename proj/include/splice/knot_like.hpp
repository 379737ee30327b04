#ifndef SPLICE_KNOT_LIKE_HPP
#define SPLICE_KNOT_LIKE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splice/graded_complex.hpp"
#include "splice/matrix.hpp"
#include "splice/umap.hpp"

namespace splice {

// Polynomial in U, V over F2: a sorted set of (U exponent, V exponent).
class UVPoly {
public:
    using Monomial = std::pair<int, int>;

    UVPoly() = default;
    static UVPoly one() { return monomial(0, 0); }
    static UVPoly monomial(int a, int b);

    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const { return terms_.size() == 1 && terms_[0] == Monomial{0, 0}; }
    bool has_term(Monomial m) const;
    const std::vector<Monomial>& terms() const { return terms_; }
    std::optional<Monomial> single_term() const;

    UVPoly& operator+=(const UVPoly& other);
    friend UVPoly operator+(UVPoly a, const UVPoly& b) { return a += b; }
    friend UVPoly operator*(const UVPoly& a, const UVPoly& b);
    friend bool operator==(const UVPoly&, const UVPoly&) = default;

private:
    std::vector<Monomial> terms_;
};

// "0", "1", "U", "UV", "U^2V^3 + V".
std::string to_string(const UVPoly& p);

using UVMatrix = Matrix<UVPoly>;

struct KnotGenerator {
    std::string id;
    Rational gr_w;
    Rational gr_z;
    friend bool operator==(const KnotGenerator&, const KnotGenerator&) = default;
};

// Free bigraded complex over F2[U, V]; U has bidegree (-2, 0), V has (0, -2)
// and ∂ has (-1, -1). Entry (i, j) is the coefficient of generator i in ∂
// of generator j.
struct KnotLikeComplex {
    std::string name;
    std::vector<KnotGenerator> generators;
    UVMatrix differential;

    std::size_t size() const { return generators.size(); }
    // (gr_w - gr_z) / 2
    Rational alexander(std::size_t i) const;
    friend bool operator==(const KnotLikeComplex&, const KnotLikeComplex&) = default;
};

std::vector<Violation> validate_knotlike(const KnotLikeComplex& c);

// Dimension of the homology after setting U = V = 1.
std::size_t localization_rank(const KnotLikeComplex& c);

// Cancels every differential entry equal to 1, smallest (row, col) first.
KnotLikeComplex unit_cancel(const KnotLikeComplex& c);

// Whether the complex is locally equivalent to F[U, V] at bigrading (0, 0).
// Tries the splitting criterion first (after unit cancellation, an isolated
// generator at (0, 0) whose complement is acyclic once U and V are
// inverted) and otherwise decides existence of local maps both ways exactly.
bool is_locally_trivial_knotlike(const KnotLikeComplex& c);

// Exact decision via the two F2 linear systems for local maps to and from
// F[U, V]; does not use the splitting shortcut.
bool has_local_maps_to_and_from_unknot(const KnotLikeComplex& c);

// One-variable complexes for surgery. A_n is spanned over F[U] (U acting as
// UV) by the translates U^a V^b x at Alexander level n with a, b >= 0 minimal,
// graded by gr_w. B is the complex with V = 1, graded by gr_w. v sends U^a V^b x
// to U^a x. Throws InvalidInput if n <= 0 or the complex is invalid.
GradedComplex build_An(const KnotLikeComplex& c, int n);
GradedComplex build_B(const KnotLikeComplex& c);
UMap v_map(const KnotLikeComplex& c, int n);

KnotLikeComplex tensor(const KnotLikeComplex& a, const KnotLikeComplex& b);
// Dual complex: negated bigradings, transposed differential.
KnotLikeComplex mirror(const KnotLikeComplex& c);
// Swaps the roles of the two basepoints: gr_w <-> gr_z and U <-> V.
KnotLikeComplex reverse_orientation(const KnotLikeComplex& c);

}  // namespace splice

#endif
