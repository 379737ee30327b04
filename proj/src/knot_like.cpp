#include "splice/knot_like.hpp"

#include <algorithm>
#include <map>

#include "splice/error.hpp"
#include "splice/f2_linalg.hpp"

namespace splice {

UVPoly UVPoly::monomial(int a, int b)
{
    UVPoly p;
    p.terms_.push_back({a, b});
    return p;
}

bool UVPoly::has_term(Monomial m) const { return std::binary_search(terms_.begin(), terms_.end(), m); }

std::optional<UVPoly::Monomial> UVPoly::single_term() const
{
    if (terms_.size() != 1) return std::nullopt;
    return terms_[0];
}

UVPoly& UVPoly::operator+=(const UVPoly& other)
{
    std::vector<Monomial> out;
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

UVPoly operator*(const UVPoly& a, const UVPoly& b)
{
    std::map<UVPoly::Monomial, bool> acc;
    for (auto [p, q] : a.terms_)
        for (auto [r, s] : b.terms_) acc[{p + r, q + s}] ^= true;
    UVPoly out;
    for (const auto& [m, on] : acc)
        if (on) out.terms_.push_back(m);
    return out;
}

std::string to_string(const UVPoly& p)
{
    if (p.is_zero()) return "0";
    std::string s;
    for (auto [a, b] : p.terms()) {
        if (!s.empty()) s += " + ";
        if (a == 0 && b == 0) {
            s += "1";
            continue;
        }
        if (a > 0) s += a == 1 ? "U" : "U^" + std::to_string(a);
        if (b > 0) s += b == 1 ? "V" : "V^" + std::to_string(b);
    }
    return s;
}

Rational KnotLikeComplex::alexander(std::size_t i) const
{
    return (generators[i].gr_w - generators[i].gr_z) / 2;
}

namespace {

std::optional<UVPoly::Monomial> forced_monomial(const KnotGenerator& tgt, const KnotGenerator& src)
{
    auto a = half_if_nonneg_even(tgt.gr_w - src.gr_w + 1);
    auto b = half_if_nonneg_even(tgt.gr_z - src.gr_z + 1);
    if (!a || !b) return std::nullopt;
    return UVPoly::Monomial{static_cast<int>(*a), static_cast<int>(*b)};
}

UVMatrix multiply(const UVMatrix& x, const UVMatrix& y)
{
    UVMatrix m(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                if (!y(k, j).is_zero()) m(i, j) += x(i, k) * y(k, j);
        }
    return m;
}

// Differential with U = V = 1, as rows.
f2::BitMatrix specialize(const KnotLikeComplex& c)
{
    const std::size_t n = c.size();
    f2::BitMatrix rows(n, f2::BitVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = c.differential(i, j).terms().size() % 2 == 1;
    return rows;
}

// A vector of the kernel of `m` outside the column span of `m`.
std::optional<f2::BitVector> nontrivial_cycle(const f2::BitMatrix& m, std::size_t n)
{
    for (const auto& z : f2::null_space(m, n))
        if (!f2::in_column_span(m, n, z)) return z;
    return std::nullopt;
}

void require_valid(const KnotLikeComplex& c)
{
    auto bad = validate_knotlike(c);
    if (!bad.empty()) throw InvalidInput("invalid knot-like complex: " + bad.front().kind + ": " + bad.front().detail);
}

std::int64_t alexander_int(const KnotLikeComplex& c, std::size_t i)
{
    return boost::rational_cast<std::int64_t>(c.alexander(i));
}

// Minimal translate U^a V^b x at Alexander level n.
std::pair<int, int> level_shift(const KnotLikeComplex& c, std::size_t i, int n)
{
    auto a = alexander_int(c, i);
    return {static_cast<int>(std::max<std::int64_t>(0, a - n)), static_cast<int>(std::max<std::int64_t>(0, n - a))};
}

}  // namespace

std::vector<Violation> validate_knotlike(const KnotLikeComplex& c)
{
    std::vector<Violation> out;
    const std::size_t n = c.size();
    if (c.differential.rows() != n || c.differential.cols() != n) {
        out.push_back({"shape", "differential is not square with one row per generator"});
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!is_integer(c.alexander(i)))
            out.push_back({"alexander", "(gr_w - gr_z)/2 of " + c.generators[i].id + " is " +
                                            to_string(c.alexander(i))});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = c.differential(i, j);
            if (e.is_zero()) continue;
            auto want = forced_monomial(c.generators[i], c.generators[j]);
            if (!want || e.single_term() != want)
                out.push_back({"bidegree", "d(" + c.generators[j].id + ") -> " + c.generators[i].id + " : " +
                                               to_string(e)});
        }
    auto d2 = multiply(c.differential, c.differential);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!d2(i, j).is_zero())
                out.push_back({"d^2", "d(d(" + c.generators[j].id + ")) has coefficient " + to_string(d2(i, j)) +
                                          " on " + c.generators[i].id});
    if (out.empty()) {
        auto r = localization_rank(c);
        if (r != 1)
            out.push_back({"localization", "homology with U = V = 1 has rank " + std::to_string(r) + ", expected 1"});
    }
    return out;
}

std::size_t localization_rank(const KnotLikeComplex& c)
{
    return c.size() - 2 * f2::rank(specialize(c));
}

KnotLikeComplex unit_cancel(const KnotLikeComplex& c)
{
    KnotLikeComplex cur = c;
    for (;;) {
        const std::size_t n = cur.size();
        std::optional<std::pair<std::size_t, std::size_t>> hit;
        for (std::size_t y = 0; y < n && !hit; ++y)
            for (std::size_t x = 0; x < n && !hit; ++x)
                if (cur.differential(y, x).is_unit()) hit = {{x, y}};
        if (!hit) return cur;
        auto [x, y] = *hit;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (i != x && i != y) keep.push_back(i);
        KnotLikeComplex next{cur.name, {}, UVMatrix(keep.size(), keep.size())};
        for (std::size_t r = 0; r < keep.size(); ++r) {
            next.generators.push_back(cur.generators[keep[r]]);
            for (std::size_t s = 0; s < keep.size(); ++s) {
                const std::size_t a = keep[r], b = keep[s];
                next.differential(r, s) = cur.differential(a, b) + cur.differential(a, x) * cur.differential(y, b);
            }
        }
        cur = std::move(next);
    }
}

bool has_local_maps_to_and_from_unknot(const KnotLikeComplex& c)
{
    const std::size_t n = c.size();
    if (localization_rank(c) != 1) return false;
    const auto d1 = specialize(c);
    const auto z = nontrivial_cycle(d1, n);
    const auto phi = nontrivial_cycle(f2::transpose(d1, n), n);
    if (!z || !phi) return false;
    const auto& d = c.differential;

    // C -> F[U, V]: x maps to bit_x U^a V^b when gr(x) = (-2a, -2b).
    {
        std::vector<std::optional<UVPoly::Monomial>> slot(n);
        for (std::size_t x = 0; x < n; ++x) {
            auto a = half_if_nonneg_even(-c.generators[x].gr_w);
            auto b = half_if_nonneg_even(-c.generators[x].gr_z);
            if (a && b) slot[x] = UVPoly::Monomial{static_cast<int>(*a), static_cast<int>(*b)};
        }
        f2::LinearSystem sys(n);
        for (std::size_t x = 0; x < n; ++x) {
            std::map<UVPoly::Monomial, std::vector<std::size_t>> eq;
            for (std::size_t y = 0; y < n; ++y) {
                if (!slot[y]) continue;
                for (auto [p, q] : d(y, x).terms()) eq[{p + slot[y]->first, q + slot[y]->second}].push_back(y);
            }
            for (const auto& [m, vars] : eq) sys.add_equation(vars, false);
        }
        std::vector<std::size_t> loc;
        for (std::size_t x = 0; x < n; ++x)
            if (slot[x] && (*z)[x]) loc.push_back(x);
        sys.add_equation(loc, true);
        for (std::size_t x = 0; x < n; ++x)
            if (!slot[x]) sys.add_equation({x}, false);
        if (!sys.solve()) return false;
    }

    // F[U, V] -> C: 1 maps to sum of bit_x U^a V^b x with gr(x) = (2a, 2b).
    {
        std::vector<std::optional<UVPoly::Monomial>> slot(n);
        for (std::size_t x = 0; x < n; ++x) {
            auto a = half_if_nonneg_even(c.generators[x].gr_w);
            auto b = half_if_nonneg_even(c.generators[x].gr_z);
            if (a && b) slot[x] = UVPoly::Monomial{static_cast<int>(*a), static_cast<int>(*b)};
        }
        f2::LinearSystem sys(n);
        for (std::size_t y = 0; y < n; ++y) {
            std::map<UVPoly::Monomial, std::vector<std::size_t>> eq;
            for (std::size_t x = 0; x < n; ++x) {
                if (!slot[x]) continue;
                for (auto [p, q] : d(y, x).terms()) eq[{p + slot[x]->first, q + slot[x]->second}].push_back(x);
            }
            for (const auto& [m, vars] : eq) sys.add_equation(vars, false);
        }
        std::vector<std::size_t> loc;
        for (std::size_t x = 0; x < n; ++x)
            if (slot[x] && (*phi)[x]) loc.push_back(x);
        sys.add_equation(loc, true);
        for (std::size_t x = 0; x < n; ++x)
            if (!slot[x]) sys.add_equation({x}, false);
        if (!sys.solve()) return false;
    }
    return true;
}

bool is_locally_trivial_knotlike(const KnotLikeComplex& c)
{
    require_valid(c);
    auto r = unit_cancel(c);
    const std::size_t n = r.size();
    for (std::size_t g = 0; g < n; ++g) {
        if (r.generators[g].gr_w != 0 || r.generators[g].gr_z != 0) continue;
        bool isolated = true;
        for (std::size_t k = 0; k < n && isolated; ++k)
            isolated = r.differential(g, k).is_zero() && r.differential(k, g).is_zero();
        if (!isolated) continue;
        KnotLikeComplex rest{r.name, {}, UVMatrix(n - 1, n - 1)};
        for (std::size_t i = 0, ri = 0; i < n; ++i) {
            if (i == g) continue;
            rest.generators.push_back(r.generators[i]);
            for (std::size_t j = 0, rj = 0; j < n; ++j) {
                if (j == g) continue;
                rest.differential(ri, rj++) = r.differential(i, j);
            }
            ++ri;
        }
        if (localization_rank(rest) == 0) return true;
    }
    return has_local_maps_to_and_from_unknot(c);
}

GradedComplex build_An(const KnotLikeComplex& c, int n)
{
    if (n <= 0) throw InvalidInput("n must be positive, got " + std::to_string(n));
    require_valid(c);
    const std::size_t m = c.size();
    std::vector<std::pair<int, int>> shift(m);
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < m; ++i) {
        shift[i] = level_shift(c, i, n);
        gens.push_back({c.generators[i].id, c.generators[i].gr_w - 2 * shift[i].first});
    }
    UMatrix d(m, m);
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t x = 0; x < m; ++x)
            for (auto [p, q] : c.differential(y, x).terms()) {
                (void)q;
                d(y, x) += UPoly::monomial(shift[x].first + p - shift[y].first);
            }
    return GradedComplex("A" + std::to_string(n) + "(" + c.name + ")", std::move(gens), std::move(d));
}

GradedComplex build_B(const KnotLikeComplex& c)
{
    require_valid(c);
    const std::size_t m = c.size();
    std::vector<Generator> gens;
    for (const auto& g : c.generators) gens.push_back({g.id, g.gr_w});
    UMatrix d(m, m);
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t x = 0; x < m; ++x)
            for (auto [p, q] : c.differential(y, x).terms()) {
                (void)q;
                d(y, x) += UPoly::monomial(p);
            }
    return GradedComplex("B(" + c.name + ")", std::move(gens), std::move(d));
}

UMap v_map(const KnotLikeComplex& c, int n)
{
    if (n <= 0) throw InvalidInput("n must be positive, got " + std::to_string(n));
    require_valid(c);
    const std::size_t m = c.size();
    UMatrix v(m, m);
    for (std::size_t i = 0; i < m; ++i) v(i, i) = UPoly::monomial(level_shift(c, i, n).first);
    return {std::move(v), 0};
}

KnotLikeComplex tensor(const KnotLikeComplex& a, const KnotLikeComplex& b)
{
    const std::size_t na = a.size(), nb = b.size();
    KnotLikeComplex out{a.name + "#" + b.name, {}, UVMatrix(na * nb, na * nb)};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const auto& ga = a.generators[i];
            const auto& gb = b.generators[j];
            out.generators.push_back({ga.id + "⊗" + gb.id, ga.gr_w + gb.gr_w, ga.gr_z + gb.gr_z});
        }
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const std::size_t src = i * nb + j;
            for (std::size_t k = 0; k < na; ++k)
                if (!a.differential(k, i).is_zero()) out.differential(k * nb + j, src) += a.differential(k, i);
            for (std::size_t k = 0; k < nb; ++k)
                if (!b.differential(k, j).is_zero()) out.differential(i * nb + k, src) += b.differential(k, j);
        }
    return out;
}

KnotLikeComplex mirror(const KnotLikeComplex& c)
{
    KnotLikeComplex out{"m" + c.name, {}, c.differential.transposed()};
    for (const auto& g : c.generators) out.generators.push_back({g.id + "*", -g.gr_w, -g.gr_z});
    return out;
}

KnotLikeComplex reverse_orientation(const KnotLikeComplex& c)
{
    KnotLikeComplex out{c.name + "r", {}, UVMatrix(c.size(), c.size())};
    for (const auto& g : c.generators) out.generators.push_back({g.id, g.gr_z, g.gr_w});
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            for (auto [p, q] : c.differential(i, j).terms()) out.differential(i, j) += UVPoly::monomial(q, p);
    return out;
}

}  // namespace splice
