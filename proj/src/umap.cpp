#include "splice/umap.hpp"

#include "splice/error.hpp"

namespace splice {

UMap identity_map(const GradedComplex& c) { return {identity_umatrix(c.size()), 0}; }

UMap zero_map(const GradedComplex& source, const GradedComplex& target, int degree)
{
    return {UMatrix(target.size(), source.size()), degree};
}

UMap compose(const UMap& g, const UMap& f) { return {multiply(g.matrix, f.matrix), g.degree + f.degree}; }

UMap operator+(const UMap& f, const UMap& g)
{
    if (f.degree != g.degree) throw DegreeMismatch("cannot add maps of degree " + std::to_string(f.degree) +
                                                   " and " + std::to_string(g.degree));
    return {add(f.matrix, g.matrix), f.degree};
}

std::vector<Violation> map_violations(const GradedComplex& source, const GradedComplex& target, const UMap& f)
{
    std::vector<Violation> out;
    if (f.rows() != target.size() || f.cols() != source.size()) {
        out.push_back({"shape", "map is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                    ", expected " + std::to_string(target.size()) + "x" +
                                    std::to_string(source.size())});
        return out;
    }
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const auto& e = f.matrix(i, j);
            if (e.is_zero()) continue;
            auto want = forced_exponent(target.grading(i), source.grading(j), Rational(f.degree));
            auto have = e.single_exponent();
            if (!want || !have || *want != *have)
                out.push_back({"homogeneity", source.generator(j).id + " -> " + target.generator(i).id + " : " +
                                                  to_string(e) + " is not homogeneous of degree " +
                                                  std::to_string(f.degree)});
        }
    return out;
}

bool is_chain_map(const GradedComplex& source, const GradedComplex& target, const UMap& f)
{
    return multiply(target.differential(), f.matrix) == multiply(f.matrix, source.differential());
}

bool is_homotopy(const GradedComplex& source, const GradedComplex& target, const UMap& h, const UMap& f,
                 const UMap& g)
{
    auto lhs = add(multiply(target.differential(), h.matrix), multiply(h.matrix, source.differential()));
    return lhs == add(f.matrix, g.matrix);
}

UMap dual_map(const UMap& f) { return {f.matrix.transposed(), f.degree}; }

UMap tensor_map(const UMap& f, const UMap& g)
{
    const std::size_t fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
    UMatrix m(fr * gr, fc * gc);
    for (std::size_t i = 0; i < fr; ++i)
        for (std::size_t j = 0; j < fc; ++j) {
            if (f.matrix(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < gr; ++k)
                for (std::size_t l = 0; l < gc; ++l)
                    if (!g.matrix(k, l).is_zero()) m(i * gr + k, j * gc + l) = f.matrix(i, j) * g.matrix(k, l);
        }
    return {std::move(m), f.degree + g.degree};
}

}  // namespace splice
