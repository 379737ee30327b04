#ifndef SPLICE_KIRBY_HPP
#define SPLICE_KIRBY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splice/matrix.hpp"
#include "splice/splice_classifier.hpp"

namespace splice {

using IntMatrix = Matrix<std::int64_t>;

struct Component {
    std::string label;
    bool companion = false;  // knot in a homology sphere, drawn as a box
    friend bool operator==(const Component&, const Component&) = default;
};

// Framed link in a connected sum of homology spheres. Companion components
// are treated as homologically trivial knots, so the linking matrix carries
// all first-homology information. The diagonal holds the framings.
struct SurgeryPresentation {
    std::vector<Component> components;
    IntMatrix linking;
    // Changes of ambient manifold made along the way, e.g. "Y' = Y_{+1}(K)".
    std::vector<std::string> notes;

    std::size_t size() const { return components.size(); }
    std::int64_t framing(std::size_t i) const { return linking(i, i); }
    std::size_t index_of(const std::string& label) const;  // throws InvalidInput
    friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

// Sign of the clasp between consecutive components (0 when unlinked).
std::vector<int> clasp_signs(const SurgeryPresentation& p);

// Reads the word right to left: start with k0 (framing 0), each H adds a
// 0-framed unknot clasped to the most recent component, each T(k) adds k to
// the framing of the most recent component, and the last component is then
// summed with the k1 companion. Throws InadmissibleWord if the word does not
// evaluate to a homology-sphere gluing.
SurgeryPresentation presentation_from_word(const GeneratorWord& w, const std::string& k0 = "K",
                                           const std::string& k1 = "mK");

// The presentation of the phi_n^+ splice: word H T(-n) H T(n) H.
SurgeryPresentation splice_chain(std::int64_t n, const std::string& k0 = "K", const std::string& k1 = "mK");

std::int64_t determinant(const IntMatrix& m);
// |det| of the linking matrix; 0 means b1 > 0.
std::int64_t h1_order(const SurgeryPresentation& p);

// Removes a +-1 framed unknot j: L'(i,k) = L(i,k) - e L(i,j) L(k,j), e = framing(j).
// Throws NotBlowdownable if j is a companion or its framing is not +-1.
SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t j);

// Replaces the clasp between i and k by an unknot E of framing e = -sign
// linking i once and k with -e lk(i,k); i and k each gain e in framing. E is
// inserted right after min(i, k). Throws NoClasp unless |lk(i,k)| = 1.
SurgeryPresentation blow_up_clasp(const SurgeryPresentation& p, std::size_t i, std::size_t k, int sign,
                                  const std::string& label = "E");

// Does surgery on the +-1 framed companion j inside its ambient homology
// sphere: same linking update as blow_down, with the new ambient manifold
// recorded in the notes.
SurgeryPresentation absorb_companion(const SurgeryPresentation& p, std::size_t j);

// Cancels components i, j whose 2x2 linking block is unimodular, replacing
// the rest by its Schur complement. Throws InvalidInput otherwise.
SurgeryPresentation cancel_pair(const SurgeryPresentation& p, std::size_t i, std::size_t j);

// Equal labels, companion flags and framings, and off-diagonal linking equal
// up to reorienting components (L_p(i,k) = s_i s_k L_q(i,k)).
bool equivalent_up_to_orientation(const SurgeryPresentation& p, const SurgeryPresentation& q);

struct NormalizationStep {
    std::int64_t from_n;
    std::int64_t to_n;
    SurgeryPresentation blown_up;   // both companion clasps blown up
    SurgeryPresentation result;     // companions absorbed, new unknots relabeled
    bool matches_chain = false;   // result ~ splice_chain(to_n, k0', k1')
};

// Moves the splice_chain(n) presentation with companions k0, k1 to parameter
// n + dir (dir = +-1) by blowing up the two companion clasps.
NormalizationStep normalization_step(std::int64_t n, int dir, const std::string& k0 = "K",
                                     const std::string& k1 = "mK");

// The |n| steps taking splice_chain(n) to splice_chain(0); companions gain a prime
// at every step.
std::vector<NormalizationStep> normalize_to_zero(std::int64_t n);

}  // namespace splice

#endif
