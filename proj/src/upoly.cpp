#include "splice/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace splice {

UPoly UPoly::monomial(int exponent)
{
    if (exponent < 0) throw std::invalid_argument("negative U exponent");
    UPoly p;
    p.exps_.push_back(exponent);
    return p;
}

UPoly UPoly::from_exponents(std::vector<int> exponents)
{
    std::sort(exponents.begin(), exponents.end());
    UPoly p;
    for (std::size_t i = 0; i < exponents.size();) {
        std::size_t j = i;
        while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
        if (exponents[i] < 0) throw std::invalid_argument("negative U exponent");
        if ((j - i) % 2 == 1) p.exps_.push_back(exponents[i]);
        i = j;
    }
    return p;
}

std::optional<int> UPoly::single_exponent() const
{
    if (exps_.size() != 1) return std::nullopt;
    return exps_[0];
}

bool UPoly::has_term(int exponent) const
{
    return std::binary_search(exps_.begin(), exps_.end(), exponent);
}

UPoly& UPoly::operator+=(const UPoly& other)
{
    if (other.exps_.empty()) return *this;
    std::vector<int> out;
    out.reserve(exps_.size() + other.exps_.size());
    std::set_symmetric_difference(exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end(),
                                  std::back_inserter(out));
    exps_ = std::move(out);
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.exps_.size() == 1 && b.exps_.size() == 1) return UPoly::monomial(a.exps_[0] + b.exps_[0]);
    std::vector<int> terms;
    terms.reserve(a.exps_.size() * b.exps_.size());
    for (int x : a.exps_)
        for (int y : b.exps_) terms.push_back(x + y);
    return UPoly::from_exponents(std::move(terms));
}

std::string to_string(const UPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int e : p.exponents()) {
        if (!out.empty()) out += " + ";
        if (e == 0)
            out += "1";
        else if (e == 1)
            out += "U";
        else
            out += "U^" + std::to_string(e);
    }
    return out;
}

UMatrix multiply(const UMatrix& a, const UMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    UMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

UMatrix add(const UMatrix& a, const UMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    UMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

UMatrix identity_umatrix(std::size_t n)
{
    UMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = UPoly::one();
    return m;
}

bool is_zero(const UMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

}  // namespace splice
