#ifndef SPLICE_TESTS_ORACLES_HPP
#define SPLICE_TESTS_ORACLES_HPP

// Reference computations used by the tests. Nothing here calls the library's
// reduction, linear algebra or search code: polynomials are bit masks, linear
// algebra is plain Gaussian elimination on byte vectors, and homology is
// computed on finite F2 truncations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "splice/graded_complex.hpp"
#include "splice/iota_complex.hpp"
#include "splice/knot_like.hpp"
#include "splice/upoly.hpp"

namespace oracle {

using splice::Rational;
using Row = std::vector<std::uint8_t>;
using Mat = std::vector<Row>;  // list of rows

inline std::size_t rank_of(Mat m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
        ++r;
    }
    return r;
}

// Basis of {x : m x = 0}; m has `cols` columns.
inline std::vector<Row> kernel(Mat m, std::size_t cols)
{
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<Row> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
        Row v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (m[i][f]) v[pivot_col[i]] = 1;
        out.push_back(v);
    }
    return out;
}

// Solvability of A x = b, A given by rows.
inline bool solvable(Mat a, const Row& b)
{
    const std::size_t before = rank_of(a);
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    return rank_of(a) == before;
}

// Whether v lies in the span of the columns `cols_of` (each a vector).
inline bool in_span(const std::vector<Row>& columns, const Row& v)
{
    Mat rows;  // columns as rows
    for (const auto& c : columns) rows.push_back(c);
    const std::size_t before = rank_of(rows);
    rows.push_back(v);
    return rank_of(rows) == before;
}

// ---------------------------------------------------------------------------
// Finite F2 complexes with a U action

struct VComplex {
    std::vector<Rational> gr;
    std::vector<std::vector<std::size_t>> d;  // d[j] = targets of ∂ e_j (no repeats)
    std::vector<long> u;                      // index of U e_j, or -1
    std::size_t size() const { return gr.size(); }
};

inline void add_target(std::vector<std::size_t>& col, std::size_t t)
{
    auto it = std::find(col.begin(), col.end(), t);
    if (it == col.end())
        col.push_back(t);
    else
        col.erase(it);
}

// C / U^n C as an F2 complex with basis U^p x_j, p < n.
inline VComplex truncate(const splice::GradedComplex& c, int n)
{
    VComplex v;
    auto idx = [&](std::size_t j, int p) { return j * n + p; };
    v.gr.resize(c.size() * n);
    v.d.resize(c.size() * n);
    v.u.assign(c.size() * n, -1);
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int p = 0; p < n; ++p) {
            v.gr[idx(j, p)] = c.grading(j) - 2 * p;
            if (p + 1 < n) v.u[idx(j, p)] = static_cast<long>(idx(j, p + 1));
            for (std::size_t i = 0; i < c.size(); ++i)
                for (int k : c.differential()(i, j).exponents())
                    if (p + k < n) add_target(v.d[idx(j, p)], idx(i, p + k));
        }
    return v;
}

// A_s of a knot-like complex as the subcomplex {i <= 0, j <= s} of the
// doubly filtered complex, cut off at i >= -depth. Generator [x, i] sits at
// filtration (i, i + A(x)) and Maslov grading gr_w(x) + 2i.
inline VComplex cfk_A(const splice::KnotLikeComplex& k, int s, int depth)
{
    VComplex v;
    std::map<std::pair<std::size_t, int>, std::size_t> index;
    std::vector<int> alex;
    for (std::size_t x = 0; x < k.size(); ++x) {
        auto a = k.alexander(x);
        if (a.denominator() != 1) throw std::invalid_argument("non-integral Alexander grading");
        alex.push_back(static_cast<int>(a.numerator()));
    }
    auto inside = [&](std::size_t x, int i) { return i <= 0 && i + alex[x] <= s && i >= -depth; };
    for (std::size_t x = 0; x < k.size(); ++x)
        for (int i = 0; i >= -depth; --i)
            if (inside(x, i)) {
                index[{x, i}] = v.gr.size();
                v.gr.push_back(k.generators[x].gr_w + 2 * i);
            }
    v.d.resize(v.gr.size());
    v.u.assign(v.gr.size(), -1);
    for (auto [key, col] : index) {
        auto [x, i] = key;
        auto it = index.find({x, i - 1});
        if (it != index.end()) v.u[col] = static_cast<long>(it->second);
        for (std::size_t y = 0; y < k.size(); ++y)
            for (auto [p, q] : k.differential(y, x).terms()) {
                (void)q;
                auto t = index.find({y, i - p});
                if (t != index.end()) add_target(v.d[col], t->second);
            }
    }
    return v;
}

inline std::map<Rational, std::vector<std::size_t>> by_grading(const VComplex& v)
{
    std::map<Rational, std::vector<std::size_t>> g;
    for (std::size_t j = 0; j < v.size(); ++j) g[v.gr[j]].push_back(j);
    return g;
}

// Matrix of ∂ from grading g to g - 1 (rows indexed by `to`, columns by `from`).
inline Mat boundary_block(const VComplex& v, const std::vector<std::size_t>& from, const std::vector<std::size_t>& to)
{
    Mat m(to.size(), Row(from.size(), 0));
    for (std::size_t c = 0; c < from.size(); ++c)
        for (auto t : v.d[from[c]]) {
            auto it = std::find(to.begin(), to.end(), t);
            if (it != to.end()) m[it - to.begin()][c] ^= 1;
        }
    return m;
}

inline std::map<Rational, int> homology_ranks(const VComplex& v)
{
    auto g = by_grading(v);
    std::map<Rational, int> out;
    auto get = [&](const Rational& r) {
        auto it = g.find(r);
        return it == g.end() ? std::vector<std::size_t>{} : it->second;
    };
    for (const auto& [gr, gens] : g) {
        const auto below = get(gr - 1);
        const auto above = get(gr + 1);
        const std::size_t rk_out = below.empty() ? 0 : rank_of(boundary_block(v, gens, below));
        const std::size_t rk_in = above.empty() ? 0 : rank_of(boundary_block(v, above, gens));
        const int h = static_cast<int>(gens.size() - rk_out - rk_in);
        if (h) out[gr] = h;
    }
    return out;
}

// Largest grading carrying a cycle z with U^l z not a boundary.
inline std::optional<Rational> tower_top(const VComplex& v, int l)
{
    auto g = by_grading(v);
    auto get = [&](const Rational& r) {
        auto it = g.find(r);
        return it == g.end() ? std::vector<std::size_t>{} : it->second;
    };
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
        const auto& gens = it->second;
        const auto below = get(it->first - 1);
        std::vector<Row> cycles;
        if (below.empty()) {
            for (std::size_t c = 0; c < gens.size(); ++c) {
                Row e(gens.size(), 0);
                e[c] = 1;
                cycles.push_back(e);
            }
        } else {
            cycles = kernel(boundary_block(v, gens, below), gens.size());
        }
        const Rational low = it->first - 2 * l;
        const auto target = get(low);
        if (target.empty()) continue;
        const auto above = get(low + 1);
        std::vector<Row> bcols;
        if (!above.empty()) {
            auto b = boundary_block(v, above, target);
            for (std::size_t c = 0; c < above.size(); ++c) {
                Row col(target.size());
                for (std::size_t r = 0; r < target.size(); ++r) col[r] = b[r][c];
                bcols.push_back(col);
            }
        }
        for (const auto& z : cycles) {
            Row image(target.size(), 0);
            bool lost = false;
            for (std::size_t c = 0; c < gens.size() && !lost; ++c) {
                if (!z[c]) continue;
                long e = static_cast<long>(gens[c]);
                for (int s = 0; s < l && e >= 0; ++s) e = v.u[e];
                if (e < 0) continue;
                auto pos = std::find(target.begin(), target.end(), static_cast<std::size_t>(e));
                image[pos - target.begin()] ^= 1;
            }
            if (std::any_of(image.begin(), image.end(), [](auto b) { return b; }) && !in_span(bcols, image))
                return it->first;
        }
    }
    return std::nullopt;
}

inline int exponent_sum(const splice::GradedComplex& c)
{
    int s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            for (int k : c.differential()(i, j).exponents()) s += k;
    return s;
}

// d-invariant of an F[U] complex. Torsion orders are bounded by the total
// exponent weight, so l = that + 1 kills all torsion while the truncation
// depth keeps the tower visible.
inline std::optional<Rational> d_invariant(const splice::GradedComplex& c)
{
    const int l = exponent_sum(c) + 1;
    return tower_top(truncate(c, 3 * l + 4), l);
}

inline std::optional<Rational> d_of_A(const splice::KnotLikeComplex& k, int s)
{
    int weight = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j)
            for (auto [p, q] : k.differential(i, j).terms()) weight += p + q;
    const int l = weight + 2;
    return tower_top(cfk_A(k, s, 4 * l + 8), l);
}

// ---------------------------------------------------------------------------
// Lens spaces: L(p,1) bounds the disk bundle with Euler number p. Through the
// -p bundle on the reversed orientation, d(L(p,1), i) is the minimum of
// (k^2 - p) / 4p over characteristic k = 2i - p mod 2p.

inline Rational lens_d_lattice(std::int64_t p, std::int64_t i)
{
    std::optional<Rational> best;
    for (std::int64_t k = -3 * p; k <= 3 * p; ++k) {
        if (((k - (2 * i - p)) % (2 * p) + 2 * p) % (2 * p) != 0) continue;
        Rational v(k * k - p, 4 * p);
        if (!best || v < *best) best = v;
    }
    return *best;
}

// ---------------------------------------------------------------------------
// Gluing matrices, straight from the definitions.

struct M2 {
    std::int64_t a, b, c, d;
    bool operator==(const M2&) const = default;
};

inline M2 mul(M2 x, M2 y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// phi-mode matrix passes: det -1, psi = e phi squares to -id, psi(lambda) has
// mu-coefficient +-1.
inline bool type1_by_definition(M2 m)
{
    if (m.a * m.d - m.b * m.c != -1) return false;
    M2 psi{m.a, m.b, -m.c, -m.d};
    M2 sq = mul(psi, psi);
    if (!(sq == M2{-1, 0, 0, -1})) return false;
    return psi.b == 1 || psi.b == -1;
}

inline M2 phi_template(std::int64_t n, int sign)
{
    return sign > 0 ? M2{n, 1, 1 + n * n, n} : M2{n, -1, -(1 + n * n), n};
}

// ---------------------------------------------------------------------------
// Brute-force local maps over bit-mask polynomials.

using Poly = std::uint64_t;  // bit k = coefficient of U^k

inline Poly pmul(Poly a, Poly b)
{
    Poly r = 0;
    for (int k = 0; k < 64; ++k)
        if (a >> k & 1) r ^= b << k;
    return r;
}

struct PComplex {
    std::vector<Rational> gr;
    std::vector<std::vector<Poly>> d;     // d[i][j]
    std::vector<std::vector<Poly>> iota;  // iota[i][j]
    std::size_t size() const { return gr.size(); }
};

inline Poly to_poly(const splice::UPoly& p)
{
    Poly r = 0;
    for (int k : p.exponents()) r ^= Poly(1) << k;
    return r;
}

inline PComplex from_iota(const splice::IotaComplex& x)
{
    PComplex p;
    const auto n = x.complex.size();
    p.d.assign(n, std::vector<Poly>(n));
    p.iota.assign(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        p.gr.push_back(x.complex.grading(i));
        for (std::size_t j = 0; j < n; ++j) {
            p.d[i][j] = to_poly(x.complex.differential()(i, j));
            p.iota[i][j] = to_poly(x.iota.matrix(i, j));
        }
    }
    return p;
}

using PMat = std::vector<std::vector<Poly>>;

inline PMat pm(const PMat& a, const PMat& b)
{
    const std::size_t r = a.size(), m = b.size(), c = b.empty() ? 0 : b[0].size();
    PMat out(r, std::vector<Poly>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < c; ++j) out[i][j] ^= pmul(a[i][k], b[k][j]);
    return out;
}

inline PMat padd(PMat a, const PMat& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] ^= b[i][j];
    return a;
}

// Exponent a homogeneous entry target <- source of the given degree needs.
inline std::optional<int> slot(const Rational& tgt, const Rational& src, int degree)
{
    Rational k = (tgt - src - degree) / 2;
    if (k.denominator() != 1 || k.numerator() < 0) return std::nullopt;
    return static_cast<int>(k.numerator());
}

// Whether g (target x source, degree `degree`) equals ∂t H + H ∂s for some
// homogeneous H of degree degree + 1.
inline bool null_homotopic(const PComplex& s, const PComplex& t, const PMat& g, int degree)
{
    struct Unknown {
        std::size_t i, j;
        int k;
    };
    std::vector<Unknown> unk;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (auto k = slot(t.gr[i], s.gr[j], degree + 1)) unk.push_back({i, j, *k});
    // One equation per (i, j, exponent).
    std::map<std::tuple<std::size_t, std::size_t, int>, Row> eqs;
    std::map<std::tuple<std::size_t, std::size_t, int>, std::uint8_t> rhs;
    auto touch = [&](std::size_t i, std::size_t j, int e) -> Row& {
        auto& r = eqs[{i, j, e}];
        if (r.empty()) r.assign(unk.size(), 0);
        return r;
    };
    for (std::size_t u = 0; u < unk.size(); ++u) {
        const auto [hi, hj, hk] = unk[u];
        // (∂t H)(i, hj) gets d_t(i, hi) U^hk
        for (std::size_t i = 0; i < t.size(); ++i)
            for (int e = 0; e < 64; ++e)
                if (t.d[i][hi] >> e & 1) touch(i, hj, e + hk)[u] ^= 1;
        // (H ∂s)(hi, j) gets U^hk d_s(hj, j)
        for (std::size_t j = 0; j < s.size(); ++j)
            for (int e = 0; e < 64; ++e)
                if (s.d[hj][j] >> e & 1) touch(hi, j, e + hk)[u] ^= 1;
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            for (int e = 0; e < 64; ++e)
                if (g[i][j] >> e & 1) {
                    touch(i, j, e);
                    rhs[{i, j, e}] = 1;
                }
    Mat a;
    Row b;
    for (auto& [key, row] : eqs) {
        a.push_back(row);
        b.push_back(rhs.count(key) ? 1 : 0);
    }
    if (unk.empty()) return std::all_of(b.begin(), b.end(), [](auto v) { return !v; });
    return solvable(a, b);
}

// ∂ with U = 1, as rows.
inline Mat at_one(const PMat& m)
{
    Mat out(m.size(), Row(m.empty() ? 0 : m[0].size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = std::popcount(m[i][j]) & 1;
    return out;
}

inline Row apply_mat(const Mat& m, const Row& v)
{
    Row out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] ^= m[i][j] & v[j];
    return out;
}

inline std::vector<Row> columns(const Mat& m)
{
    std::vector<Row> cols;
    const std::size_t c = m.empty() ? 0 : m[0].size();
    for (std::size_t j = 0; j < c; ++j) {
        Row col(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
        cols.push_back(col);
    }
    return cols;
}

// A cycle of C|_{U=1} that is not a boundary (the localized homology is rank one).
inline Row localized_generator(const PComplex& c)
{
    auto d1 = at_one(c.d);
    auto bcols = columns(d1);
    for (const auto& z : kernel(d1, c.size()))
        if (!in_span(bcols, z)) return z;
    throw std::logic_error("localization vanishes");
}

// Exhaustive search over every homogeneous degree 0 map x1 -> x2: chain map,
// ι-homomorphism up to homotopy, iso after inverting U. `max_bits` guards the
// enumeration.
inline std::optional<bool> brute_force_local_map(const splice::IotaComplex& x1, const splice::IotaComplex& x2,
                                                 int max_bits = 20)
{
    const auto s = from_iota(x1), t = from_iota(x2);
    struct Slot {
        std::size_t i, j;
        int k;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (auto k = slot(t.gr[i], s.gr[j], 0)) slots.push_back({i, j, *k});
    if (static_cast<int>(slots.size()) > max_bits) return std::nullopt;
    const Row z = localized_generator(s);
    const auto tb = columns(at_one(t.d));
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
        PMat f(t.size(), std::vector<Poly>(s.size(), 0));
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1) f[slots[b].i][slots[b].j] = Poly(1) << slots[b].k;
        if (pm(t.d, f) != pm(f, s.d)) continue;
        const Row fz = apply_mat(at_one(f), z);
        if (std::none_of(fz.begin(), fz.end(), [](auto v) { return v; }) || in_span(tb, fz)) continue;
        if (!null_homotopic(s, t, padd(pm(t.iota, f), pm(f, s.iota)), 0)) continue;
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Random complexes with a known normal form, scrambled by homogeneous changes
// of basis and a permutation.

struct Planted {
    splice::GradedComplex complex;
    Rational d;
    std::vector<std::pair<Rational, int>> steps;  // (top, length)
};

inline Planted random_complex(std::mt19937_64& rng, Rational offset = Rational(0))
{
    std::uniform_int_distribution<int> small(-3, 3), count(0, 3), len(1, 3), coin(0, 1), units(0, 2);
    std::vector<splice::Generator> gens;
    Planted out;
    out.d = Rational(2 * small(rng)) + offset;
    gens.push_back({"x", out.d});
    std::vector<std::tuple<std::size_t, std::size_t, int>> entries;  // (target, source, exponent)
    const int nsteps = count(rng);
    for (int s = 0; s < nsteps; ++s) {
        const Rational top = Rational(small(rng)) + offset;
        const int k = len(rng);
        out.steps.push_back({top, k});
        const std::size_t a = gens.size();
        gens.push_back({"a" + std::to_string(s), top + 1 - 2 * k});
        gens.push_back({"b" + std::to_string(s), top});
        entries.push_back({a + 1, a, k});
    }
    const int npairs = units(rng);
    for (int s = 0; s < npairs; ++s) {
        const Rational top = Rational(small(rng)) + offset;
        const std::size_t a = gens.size();
        gens.push_back({"p" + std::to_string(s), top + 1});
        gens.push_back({"q" + std::to_string(s), top});
        entries.push_back({a + 1, a, 0});
    }
    const std::size_t n = gens.size();
    splice::UMatrix d(n, n);
    for (auto [i, j, k] : entries) d(i, j) = splice::UPoly::monomial(k);

    // x_i' = x_i + U^k x_j needs gr_i = gr_j - 2k; D' = E D E with E^2 = 1.
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int round = 0; round < 3 * static_cast<int>(n); ++round) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Rational k = (gens[j].grading - gens[i].grading) / 2;
        if (k.denominator() != 1 || k.numerator() < 0 || k.numerator() > 3) continue;
        splice::UMatrix e = splice::identity_umatrix(n);
        e(j, i) = splice::UPoly::monomial(static_cast<int>(k.numerator()));
        d = splice::multiply(e, splice::multiply(d, e));
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<splice::Generator> pg(n);
    splice::UMatrix pd(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        pg[perm[i]] = gens[i];
        for (std::size_t j = 0; j < n; ++j) pd(perm[i], perm[j]) = d(i, j);
    }
    (void)coin;
    out.complex = splice::GradedComplex("random", pg, pd);
    std::sort(out.steps.begin(), out.steps.end());
    return out;
}

}  // namespace oracle

#endif
