#include "splice/kirby.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <utility>

#include "splice/error.hpp"

namespace splice {

std::size_t SurgeryPresentation::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].label == label) return i;
    throw InvalidInput("no component labeled " + label);
}

std::vector<int> clasp_signs(const SurgeryPresentation& p)
{
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        auto v = p.linking(i, i + 1);
        out.push_back(v > 0 ? 1 : v < 0 ? -1 : 0);
    }
    return out;
}

SurgeryPresentation presentation_from_word(const GeneratorWord& w, const std::string& k0, const std::string& k1)
{
    auto m = evaluate_word(w);
    if (!is_splice_homology_sphere(m))
        throw InadmissibleWord("word " + to_string(w) + " evaluates to " + to_string(m) +
                               ", which does not give a homology sphere splice");

    std::vector<Component> comps{{k0, true}};
    std::vector<std::int64_t> framing{0};
    int unknots = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == Letter::Kind::H) {
            comps.push_back({"U" + std::to_string(++unknots), false});
            framing.push_back(0);
        } else {
            framing.back() += it->k;
        }
    }
    if (comps.size() == 1)
        comps.back() = {k0 + "#" + k1, true};
    else
        comps.back() = {k1, true};

    const std::size_t n = comps.size();
    IntMatrix lk(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        lk(i, i) = framing[i];
        if (i + 1 < n) lk(i, i + 1) = lk(i + 1, i) = 1;
    }
    return {std::move(comps), std::move(lk), {}};
}

SurgeryPresentation splice_chain(std::int64_t n, const std::string& k0, const std::string& k1)
{
    return presentation_from_word(lemma_word(n), k0, k1);
}

std::int64_t determinant(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    // Fraction-free Bareiss elimination.
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

std::int64_t h1_order(const SurgeryPresentation& p) { return std::llabs(determinant(p.linking)); }

namespace {

SurgeryPresentation remove_with_update(const SurgeryPresentation& p, std::size_t j)
{
    const std::int64_t e = p.framing(j);
    const std::size_t n = p.size();
    SurgeryPresentation out;
    out.notes = p.notes;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != j) {
            keep.push_back(i);
            out.components.push_back(p.components[i]);
        }
    out.linking = IntMatrix(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t s = 0; s < keep.size(); ++s)
            out.linking(r, s) = p.linking(keep[r], keep[s]) - e * p.linking(keep[r], j) * p.linking(keep[s], j);
    return out;
}

}  // namespace

SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t j)
{
    if (j >= p.size()) throw OutOfRange("component index " + std::to_string(j) + " out of range");
    if (p.components[j].companion)
        throw NotBlowdownable(p.components[j].label + " is a companion knot, not an unknot");
    if (p.framing(j) != 1 && p.framing(j) != -1)
        throw NotBlowdownable(p.components[j].label + " has framing " + std::to_string(p.framing(j)));
    return remove_with_update(p, j);
}

SurgeryPresentation absorb_companion(const SurgeryPresentation& p, std::size_t j)
{
    if (j >= p.size()) throw OutOfRange("component index " + std::to_string(j) + " out of range");
    const auto& c = p.components[j];
    if (!c.companion) throw NotBlowdownable(c.label + " is not a companion knot");
    if (p.framing(j) != 1 && p.framing(j) != -1)
        throw NotBlowdownable(c.label + " has framing " + std::to_string(p.framing(j)));
    auto out = remove_with_update(p, j);
    out.notes.push_back("ambient changes to Y_{" + std::string(p.framing(j) > 0 ? "+1" : "-1") + "}(" + c.label +
                        ")");
    return out;
}

SurgeryPresentation blow_up_clasp(const SurgeryPresentation& p, std::size_t i, std::size_t k, int sign,
                                  const std::string& label)
{
    const std::size_t n = p.size();
    if (i >= n || k >= n || i == k) throw OutOfRange("bad clasp indices");
    const std::int64_t l = p.linking(i, k);
    if (l != 1 && l != -1)
        throw NoClasp(p.components[i].label + " and " + p.components[k].label + " have linking " +
                      std::to_string(l));
    const std::int64_t e = sign < 0 ? 1 : -1;
    const std::size_t at = std::min(i, k) + 1;
    auto pos = [&](std::size_t old) { return old < at ? old : old + 1; };

    SurgeryPresentation out;
    out.notes = p.notes;
    out.components = p.components;
    out.components.insert(out.components.begin() + static_cast<std::ptrdiff_t>(at), Component{label, false});
    out.linking = IntMatrix(n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) out.linking(pos(r), pos(s)) = p.linking(r, s);
    const std::size_t pi = pos(i), pk = pos(k);
    out.linking(pi, pk) = out.linking(pk, pi) = 0;
    out.linking(pi, pi) += e;
    out.linking(pk, pk) += e;
    out.linking(at, at) = e;
    out.linking(at, pi) = out.linking(pi, at) = 1;
    out.linking(at, pk) = out.linking(pk, at) = -e * l;
    return out;
}

SurgeryPresentation cancel_pair(const SurgeryPresentation& p, std::size_t i, std::size_t j)
{
    const std::size_t n = p.size();
    if (i >= n || j >= n || i == j) throw OutOfRange("bad component indices");
    const std::int64_t a = p.linking(i, i), b = p.linking(i, j), d = p.linking(j, j);
    const std::int64_t det = a * d - b * b;
    if (det != 1 && det != -1)
        throw InvalidInput(p.components[i].label + " and " + p.components[j].label +
                           " do not form a unimodular pair");
    // Inverse of the 2x2 block.
    const std::int64_t inv[2][2] = {{d * det, -b * det}, {-b * det, a * det}};
    const std::size_t idx[2] = {i, j};

    SurgeryPresentation out;
    out.notes = p.notes;
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < n; ++r)
        if (r != i && r != j) {
            keep.push_back(r);
            out.components.push_back(p.components[r]);
        }
    out.linking = IntMatrix(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t s = 0; s < keep.size(); ++s) {
            std::int64_t v = p.linking(keep[r], keep[s]);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) v -= p.linking(keep[r], idx[x]) * inv[x][y] * p.linking(idx[y], keep[s]);
            out.linking(r, s) = v;
        }
    return out;
}

bool equivalent_up_to_orientation(const SurgeryPresentation& p, const SurgeryPresentation& q)
{
    const std::size_t n = p.size();
    if (q.size() != n || p.components != q.components) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (std::llabs(p.linking(i, k)) != std::llabs(q.linking(i, k)) ||
                (i == k && p.linking(i, i) != q.linking(i, i)))
                return false;
    std::vector<int> s(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (s[start] != 0) continue;
        s[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                if (w == u || q.linking(u, w) == 0) continue;
                const int ratio = p.linking(u, w) == q.linking(u, w) ? 1 : -1;
                const int want = s[u] * ratio;
                if (s[w] == 0) {
                    s[w] = want;
                    queue.push_back(w);
                } else if (s[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

NormalizationStep normalization_step(std::int64_t n, int dir, const std::string& k0, const std::string& k1)
{
    const int e = dir > 0 ? 1 : -1;
    NormalizationStep step;
    step.from_n = n;
    step.to_n = n + e;
    const std::string k0p = k0 + "'", k1p = k1 + "'";

    auto p = splice_chain(n, k0, k1);
    // K-U1 clasp gets a new unknot of framing e, U2-mK one of framing -e.
    p = blow_up_clasp(p, p.index_of(k0), p.index_of("U1"), -e, k0p);
    p = blow_up_clasp(p, p.index_of("U2"), p.index_of(k1), e, k1p);
    step.blown_up = p;

    p = absorb_companion(p, p.index_of(k0));
    p = absorb_companion(p, p.index_of(k1));
    p.components[p.index_of(k0p)].companion = true;
    p.components[p.index_of(k1p)].companion = true;
    step.result = p;
    step.matches_chain = equivalent_up_to_orientation(p, splice_chain(step.to_n, k0p, k1p));
    return step;
}

std::vector<NormalizationStep> normalize_to_zero(std::int64_t n)
{
    std::vector<NormalizationStep> steps;
    std::string k0 = "K", k1 = "mK";
    while (n != 0) {
        steps.push_back(normalization_step(n, n > 0 ? -1 : 1, k0, k1));
        n = steps.back().to_n;
        k0 += "'";
        k1 += "'";
    }
    return steps;
}

}  // namespace splice
