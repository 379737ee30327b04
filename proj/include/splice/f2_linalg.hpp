#ifndef SPLICE_F2_LINALG_HPP
#define SPLICE_F2_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace splice::f2 {

using BitVector = boost::dynamic_bitset<>;

// Linear system over the two-element field. Equations are given as lists of
// unknown indices whose sum must equal the right-hand side; repeated indices
// cancel in pairs.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    std::size_t unknowns() const { return unknowns_; }
    std::size_t equations() const { return rows_.size(); }

    void add_equation(const std::vector<std::size_t>& vars, bool rhs);

    // Reduced row echelon form, pivots chosen by increasing column. The
    // particular solution sets every free unknown to zero, so the result is
    // a deterministic function of the equations.
    std::optional<BitVector> solve() const;

    // Basis of the homogeneous solution space, one vector per free unknown in
    // increasing order.
    std::vector<BitVector> kernel_basis() const;

private:
    struct Echelon {
        std::vector<BitVector> rows;        // bit `unknowns_` holds the rhs
        std::vector<std::size_t> pivots;    // pivot column of each row
        bool consistent = true;
    };
    Echelon eliminate() const;

    std::size_t unknowns_;
    std::vector<BitVector> rows_;
};

// Rank of a set of row vectors of equal length.
std::size_t rank(std::vector<BitVector> rows);

// Dense 0/1 matrix helpers used for homology computations.
using BitMatrix = std::vector<BitVector>;  // rows

BitMatrix transpose(const BitMatrix& m, std::size_t cols);

// Whether `v` lies in the column span of `m` (m has `cols` columns).
bool in_column_span(const BitMatrix& m, std::size_t cols, const BitVector& v);

// Basis of {x : m x = 0}.
std::vector<BitVector> null_space(const BitMatrix& m, std::size_t cols);

}  // namespace splice::f2

#endif
