#include "splice/reduction.hpp"

#include <algorithm>
#include <limits>

#include "splice/error.hpp"

namespace splice {

bool operator<(const Step& a, const Step& b)
{
    if (a.top != b.top) return a.top < b.top;
    return a.length < b.length;
}

GradedComplex from_normal_form(const NormalForm& nf, std::string name)
{
    std::vector<Generator> gens{{"x", nf.tower_grading}};
    for (std::size_t i = 0; i < nf.steps.size(); ++i) {
        const auto& s = nf.steps[i];
        gens.push_back({"a" + std::to_string(i + 1), s.top + 1 - 2 * s.length});
        gens.push_back({"b" + std::to_string(i + 1), s.top});
    }
    UMatrix d(gens.size(), gens.size());
    for (std::size_t i = 0; i < nf.steps.size(); ++i) d(2 + 2 * i, 1 + 2 * i) = UPoly::monomial(nf.steps[i].length);
    return GradedComplex(std::move(name), std::move(gens), std::move(d));
}

std::vector<Step> Decomposition::steps() const
{
    std::vector<Step> out;
    for (auto [a, b] : pairs)
        out.push_back({reduced.grading(b), *reduced.differential()(b, a).single_exponent()});
    return out;
}

namespace {

// Running state: the current complex together with f: C -> current,
// g: current -> C and h: C -> C.
struct Workspace {
    std::string name;
    std::vector<Generator> gens;
    UMatrix d, f, g, h;
    std::vector<ReductionStep>* trace = nullptr;

    GradedComplex current() const { return GradedComplex(name, gens, d); }

    // Cancels ∂x = y + ... where the (y, x) entry is 1.
    void cancel(std::size_t x, std::size_t y)
    {
        const std::size_t m = gens.size();
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m; ++i)
            if (i != x && i != y) keep.push_back(i);
        const std::size_t k = keep.size();

        UMatrix sf(k, m), sg(m, k), sh(m, m), nd(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            const std::size_t a = keep[r];
            sf(r, a) = UPoly::one();
            sf(r, y) = d(a, x);
            sg(a, r) = UPoly::one();
            sg(x, r) = d(y, a);
            for (std::size_t c = 0; c < k; ++c) {
                const std::size_t b = keep[c];
                nd(r, c) = d(a, b) + d(a, x) * d(y, b);
            }
        }
        sh(x, y) = UPoly::one();

        std::vector<Generator> ngens;
        for (auto i : keep) ngens.push_back(gens[i]);

        GradedComplex before = trace ? current() : GradedComplex();
        // h_total = h + g sh f, using the maps before this step.
        h = add(h, multiply(multiply(g, sh), f));
        f = multiply(sf, f);
        g = multiply(g, sg);
        gens = std::move(ngens);
        d = std::move(nd);
        if (trace)
            trace->push_back({"cancel " + before.generator(x).id + " -> " + before.generator(y).id, before, current(),
                              {sf, 0}, {sg, 0}, {sh, 1}});
    }

    // New basis e'_b = e_b + c e_x.
    void basis_change(std::size_t b, std::size_t x, const UPoly& c)
    {
        const std::size_t m = gens.size();
        GradedComplex before = trace ? current() : GradedComplex();
        for (std::size_t i = 0; i < m; ++i)
            if (!d(i, x).is_zero()) d(i, b) += c * d(i, x);
        for (std::size_t j = 0; j < m; ++j)
            if (!d(b, j).is_zero()) d(x, j) += c * d(b, j);
        for (std::size_t i = 0; i < g.rows(); ++i)
            if (!g(i, x).is_zero()) g(i, b) += c * g(i, x);
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!f(b, j).is_zero()) f(x, j) += c * f(b, j);
        if (trace) {
            UMatrix p = identity_umatrix(m);
            p(x, b) = c;
            trace->push_back({"basis change " + gens[b].id + " += " + to_string(c) + "*" + gens[x].id, before,
                              current(), {p, 0}, {p, 0}, {UMatrix(m, m), 1}});
        }
    }
};

}  // namespace

Decomposition decompose(const GradedComplex& c, std::vector<ReductionStep>* trace)
{
    auto violations = validate(c);
    if (!violations.empty())
        throw InvalidInput("invalid complex: " + violations.front().kind + ": " + violations.front().detail);

    const std::size_t n = c.size();
    Workspace w{c.name(), c.generators(), c.differential(), identity_umatrix(n), identity_umatrix(n),
                UMatrix(n, n), trace};

    // Phase 1: unit cancellation.
    for (;;) {
        bool found = false;
        for (std::size_t y = 0; y < w.gens.size() && !found; ++y)
            for (std::size_t x = 0; x < w.gens.size() && !found; ++x)
                if (w.d(y, x).is_unit()) {
                    w.cancel(x, y);
                    found = true;
                }
        if (!found) break;
    }

    // Phase 2: split off U^k pairs, smallest k first.
    const std::size_t m = w.gens.size();
    std::vector<bool> active(m, true);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (;;) {
        int best = std::numeric_limits<int>::max();
        std::size_t bx = 0, by = 0;
        for (std::size_t y = 0; y < m; ++y) {
            if (!active[y]) continue;
            for (std::size_t x = 0; x < m; ++x) {
                if (!active[x] || w.d(y, x).is_zero()) continue;
                int e = *w.d(y, x).single_exponent();
                if (e < best) {
                    best = e;
                    bx = x;
                    by = y;
                }
            }
        }
        if (best == std::numeric_limits<int>::max()) break;

        // Make ∂x = U^k y.
        for (std::size_t a = 0; a < m; ++a) {
            if (a == by || !active[a] || w.d(a, bx).is_zero()) continue;
            int e = *w.d(a, bx).single_exponent();
            w.basis_change(by, a, UPoly::monomial(e - best));
        }
        // Make x the only generator hitting y.
        for (std::size_t b = 0; b < m; ++b) {
            if (b == bx || !active[b] || w.d(by, b).is_zero()) continue;
            int e = *w.d(by, b).single_exponent();
            w.basis_change(b, bx, UPoly::monomial(e - best));
        }
        active[bx] = active[by] = false;
        pairs.emplace_back(bx, by);
    }

    std::vector<std::size_t> order;
    std::vector<std::size_t> towers;
    for (std::size_t i = 0; i < m; ++i)
        if (active[i]) {
            towers.push_back(order.size());
            order.push_back(i);
        }
    std::vector<std::pair<std::size_t, std::size_t>> new_pairs;
    for (auto [x, y] : pairs) {
        new_pairs.emplace_back(order.size(), order.size() + 1);
        order.push_back(x);
        order.push_back(y);
    }

    std::vector<Generator> gens;
    UMatrix d(m, m), f(m, n), g(n, m);
    for (std::size_t r = 0; r < m; ++r) {
        gens.push_back(w.gens[order[r]]);
        for (std::size_t s = 0; s < m; ++s) d(r, s) = w.d(order[r], order[s]);
        for (std::size_t j = 0; j < n; ++j) {
            f(r, j) = w.f(order[r], j);
            g(j, r) = w.g(j, order[r]);
        }
    }

    Decomposition out;
    out.reduced = GradedComplex(c.name(), std::move(gens), std::move(d));
    out.towers = std::move(towers);
    out.pairs = std::move(new_pairs);
    out.to_reduced = {std::move(f), 0};
    out.from_reduced = {std::move(g), 0};
    out.homotopy = {std::move(w.h), 1};
    return out;
}

Reduction reduce(const GradedComplex& c)
{
    Reduction r;
    r.decomposition = decompose(c);
    const auto& dec = r.decomposition;
    if (dec.towers.size() != 1)
        throw NotRankOne("localization has rank " + std::to_string(dec.towers.size()) + ", expected 1");
    r.tower = dec.towers.front();
    r.normal_form.tower_grading = dec.reduced.grading(r.tower);
    r.normal_form.steps = dec.steps();
    std::sort(r.normal_form.steps.begin(), r.normal_form.steps.end());
    return r;
}

Rational d_invariant(const GradedComplex& c) { return reduce(c).normal_form.tower_grading; }

}  // namespace splice
