#include "splice/graded_complex.hpp"

#include <stdexcept>

namespace splice {

GradedComplex::GradedComplex(std::string name, std::vector<Generator> generators, UMatrix differential)
    : name_(std::move(name)), gens_(std::move(generators)), d_(std::move(differential))
{
    if (d_.rows() != gens_.size() || d_.cols() != gens_.size())
        throw std::invalid_argument("differential must be square with one row per generator");
}

GradedComplex GradedComplex::tower(const Rational& grading, std::string id, std::string name)
{
    return GradedComplex(std::move(name), {{std::move(id), grading}}, UMatrix(1, 1));
}

std::optional<std::size_t> GradedComplex::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].id == id) return i;
    return std::nullopt;
}

GradedComplex GradedComplex::renamed(std::string name) const
{
    GradedComplex c = *this;
    c.name_ = std::move(name);
    return c;
}

GradedComplex GradedComplex::shifted(const Rational& shift) const
{
    GradedComplex c = *this;
    for (auto& g : c.gens_) g.grading += shift;
    return c;
}

std::optional<int> forced_exponent(const Rational& target_grading, const Rational& source_grading,
                                   const Rational& degree)
{
    auto k = half_if_nonneg_even(target_grading - source_grading - degree);
    if (!k) return std::nullopt;
    return static_cast<int>(*k);
}

std::vector<Violation> validate(const GradedComplex& c)
{
    std::vector<Violation> out;
    const auto& d = c.differential();
    const auto& gens = c.generators();
    for (std::size_t i = 1; i < gens.size(); ++i)
        if (!is_integer(gens[i].grading - gens[0].grading))
            out.push_back({"coset", "gr(" + gens[i].id + ") - gr(" + gens[0].id + ") = " +
                                        to_string(gens[i].grading - gens[0].grading) + " is not an integer"});

    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
            const auto& e = d(i, j);
            if (e.is_zero()) continue;
            auto want = forced_exponent(gens[i].grading, gens[j].grading, Rational(-1));
            auto have = e.single_exponent();
            if (!want || !have || *want != *have)
                out.push_back({"homogeneity", "d(" + gens[j].id + ") -> " + gens[i].id + " : " + to_string(e) +
                                                  " (gr " + to_string(gens[j].grading) + " -> " +
                                                  to_string(gens[i].grading) + ")"});
        }

    auto d2 = multiply(d, d);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!d2(i, j).is_zero())
                out.push_back({"d^2", "d(d(" + gens[j].id + ")) has coefficient " + to_string(d2(i, j)) + " on " +
                                          gens[i].id});
    return out;
}

GradedComplex tensor(const GradedComplex& a, const GradedComplex& b)
{
    const std::size_t na = a.size(), nb = b.size();
    std::vector<Generator> gens;
    gens.reserve(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            gens.push_back({a.generator(i).id + "⊗" + b.generator(j).id, a.grading(i) + b.grading(j)});

    UMatrix d(na * nb, na * nb);
    const auto& da = a.differential();
    const auto& db = b.differential();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const std::size_t src = i * nb + j;
            for (std::size_t k = 0; k < na; ++k)
                if (!da(k, i).is_zero()) d(k * nb + j, src) += da(k, i);
            for (std::size_t k = 0; k < nb; ++k)
                if (!db(k, j).is_zero()) d(i * nb + k, src) += db(k, j);
        }
    std::string name = a.name().empty() && b.name().empty() ? "" : a.name() + "⊗" + b.name();
    return GradedComplex(std::move(name), std::move(gens), std::move(d));
}

GradedComplex dual(const GradedComplex& c)
{
    std::vector<Generator> gens;
    gens.reserve(c.size());
    for (const auto& g : c.generators()) gens.push_back({g.id + "*", -g.grading});
    std::string name = c.name().empty() ? "" : c.name() + "*";
    return GradedComplex(std::move(name), std::move(gens), c.differential().transposed());
}

}  // namespace splice
