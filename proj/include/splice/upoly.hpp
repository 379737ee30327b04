#ifndef SPLICE_UPOLY_HPP
#define SPLICE_UPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "splice/matrix.hpp"

namespace splice {

// Polynomial in U over F2, stored as its strictly increasing exponent list.
class UPoly {
public:
    UPoly() = default;

    static UPoly one() { return monomial(0); }
    static UPoly monomial(int exponent);
    // Sums the given exponents over F2 (pairs cancel).
    static UPoly from_exponents(std::vector<int> exponents);

    bool is_zero() const { return exps_.empty(); }
    bool is_unit() const { return exps_.size() == 1 && exps_[0] == 0; }
    const std::vector<int>& exponents() const { return exps_; }
    // The exponent when this is a single monomial.
    std::optional<int> single_exponent() const;
    bool has_term(int exponent) const;

    UPoly& operator+=(const UPoly& other);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    std::vector<int> exps_;
};

// "0", "1", "U", "U^3 + U^5".
std::string to_string(const UPoly& p);

using UMatrix = Matrix<UPoly>;

UMatrix multiply(const UMatrix& a, const UMatrix& b);
UMatrix add(const UMatrix& a, const UMatrix& b);
UMatrix identity_umatrix(std::size_t n);
bool is_zero(const UMatrix& m);

}  // namespace splice

#endif
