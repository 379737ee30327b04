#ifndef SPLICE_GRADED_COMPLEX_HPP
#define SPLICE_GRADED_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splice/rational.hpp"
#include "splice/upoly.hpp"

namespace splice {

struct Generator {
    std::string id;
    Rational grading;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Finitely generated free chain complex over F2[U]. U has degree -2 and the
// differential has degree -1. Entry (i, j) of the differential is the
// coefficient of generator i in the differential of generator j.
//
// Construction only checks shapes; `validate` reports everything else.
class GradedComplex {
public:
    GradedComplex() = default;
    GradedComplex(std::string name, std::vector<Generator> generators, UMatrix differential);

    // F[U]_d: one generator in grading d with zero differential.
    static GradedComplex tower(const Rational& grading, std::string id = "x", std::string name = "");

    const std::string& name() const { return name_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_[i]; }
    const Rational& grading(std::size_t i) const { return gens_[i].grading; }
    const UMatrix& differential() const { return d_; }
    std::optional<std::size_t> index_of(const std::string& id) const;

    GradedComplex renamed(std::string name) const;
    // Adds `shift` to every grading.
    GradedComplex shifted(const Rational& shift) const;

    friend bool operator==(const GradedComplex&, const GradedComplex&) = default;

private:
    std::string name_;
    std::vector<Generator> gens_;
    UMatrix d_;
};

struct Violation {
    std::string kind;    // e.g. "d^2", "homogeneity", "coset", "localization"
    std::string detail;
    friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const GradedComplex& c);

// Exponent k a homogeneous entry (target, source) must carry for a map of
// the given degree: gr(target) - 2k = gr(source) + degree. nullopt when no
// nonzero homogeneous entry is possible.
std::optional<int> forced_exponent(const Rational& target_grading, const Rational& source_grading,
                                   const Rational& degree);

// Generators "a⊗b" with added gradings, Leibniz differential (no signs).
GradedComplex tensor(const GradedComplex& a, const GradedComplex& b);

// Generators "a*" with negated gradings, transposed differential.
GradedComplex dual(const GradedComplex& c);

}  // namespace splice

#endif
