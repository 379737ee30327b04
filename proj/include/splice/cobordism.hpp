#ifndef SPLICE_COBORDISM_HPP
#define SPLICE_COBORDISM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splice/kirby.hpp"
#include "splice/rational.hpp"

namespace splice {

// Numerical shadow of a 2-handle cobordism W.
struct CobordismData {
    int chi = 0;
    int sigma = 0;
    int b1 = 0;
    int b2_plus = 0;
    int b2_minus = 0;
    bool even_form = false;
    Rational grading_shift;  // (-2 chi - 3 sigma) / 4
    IntMatrix form;          // intersection form on the 2-handles, when known
    std::string source;
    std::string target;
    std::vector<std::string> notes;

    bool negative_definite() const { return b2_plus == 0 && b2_minus == chi; }
};

// Signature counts of a symmetric integer matrix: {positive, negative, zero}.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia inertia(const IntMatrix& q);

// Cobordism built from 2-handles only, with intersection form q.
CobordismData from_intersection_form(const IntMatrix& q, std::string source, std::string target);

// Glues two cobordisms end to end. chi, sigma and b2 add. When both outer
// ends are integer homology spheres the form is unimodular, so it can only
// be even if sigma is divisible by 8.
CobordismData compose(const CobordismData& first, const CobordismData& second, bool outer_ends_are_homology_spheres);

// Framing, relative to the Seifert framing in the surgered manifold, of a
// meridian of component j drawn with blackboard framing `framing`.
// Needs |det L| = 1.
std::int64_t meridian_seifert_framing(const SurgeryPresentation& p, std::size_t j, std::int64_t framing);

// Single 2-handle from the phi_n^+ splice (normalized to n = 0), attached
// along a -1 framed meridian of the unknot obtained by blowing up the K-mK
// clasp. Form [-2]: chi 1, sigma -1, shift 1/4.
CobordismData type1_cobordism(std::int64_t n);
// type1_cobordism followed by the Euler number -2 disk bundle.
CobordismData type1_filling();
// Same construction on Sp_{phi_0^+}(K0, K1).
CobordismData type2_cobordism();

// d(L(p,1), i) = ((2i - p)^2 - p) / (4p). Throws OutOfRange unless 0 <= i < p.
Rational lens_d(std::int64_t p, std::int64_t i);
// d(L(p,q), i) from the reciprocity recursion. Throws OutOfRange on bad input.
Rational lens_d_recursive(std::int64_t p, std::int64_t q, std::int64_t i);

}  // namespace splice

#endif
