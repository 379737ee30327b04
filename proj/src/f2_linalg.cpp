#include "splice/f2_linalg.hpp"

#include <utility>

namespace splice::f2 {

void LinearSystem::add_equation(const std::vector<std::size_t>& vars, bool rhs)
{
    BitVector row(unknowns_ + 1);
    for (auto v : vars) row.flip(v);
    row[unknowns_] = rhs;
    if (row.none()) return;
    rows_.push_back(std::move(row));
}

LinearSystem::Echelon LinearSystem::eliminate() const
{
    Echelon e;
    e.rows = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns_ && rank < e.rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < e.rows.size() && !e.rows[pivot][col]) ++pivot;
        if (pivot == e.rows.size()) continue;
        std::swap(e.rows[rank], e.rows[pivot]);
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            if (r != rank && e.rows[r][col]) e.rows[r] ^= e.rows[rank];
        e.pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < e.rows.size(); ++r)
        if (e.rows[r][unknowns_]) e.consistent = false;
    e.rows.resize(rank);
    return e;
}

std::optional<BitVector> LinearSystem::solve() const
{
    auto e = eliminate();
    if (!e.consistent) return std::nullopt;
    BitVector x(unknowns_);
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = e.rows[r][unknowns_];
    return x;
}

std::vector<BitVector> LinearSystem::kernel_basis() const
{
    auto e = eliminate();
    std::vector<bool> is_pivot(unknowns_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < unknowns_; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(unknowns_);
        v[free] = true;
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            if (e.rows[r][free]) v[e.pivots[r]] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(std::vector<BitVector> rows)
{
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t k = r + 1; k < rows.size(); ++k)
            if (rows[k][col]) rows[k] ^= rows[r];
        ++r;
    }
    return r;
}

BitMatrix transpose(const BitMatrix& m, std::size_t cols)
{
    BitMatrix t(cols, BitVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i][j]) t[j][i] = true;
    return t;
}

bool in_column_span(const BitMatrix& m, std::size_t cols, const BitVector& v)
{
    LinearSystem sys(cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::size_t> vars;
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i][j]) vars.push_back(j);
        if (vars.empty() && v[i]) return false;
        sys.add_equation(vars, v[i]);
    }
    return sys.solve().has_value();
}

std::vector<BitVector> null_space(const BitMatrix& m, std::size_t cols)
{
    LinearSystem sys(cols);
    for (const auto& row : m) {
        std::vector<std::size_t> vars;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j]) vars.push_back(j);
        sys.add_equation(vars, false);
    }
    return sys.kernel_basis();
}

}  // namespace splice::f2
