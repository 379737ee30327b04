#include "splice/cobordism.hpp"

#include <numeric>
#include <stdexcept>

#include "splice/error.hpp"

namespace splice {

Inertia inertia(const IntMatrix& q)
{
    std::vector<std::vector<Rational>> a(q.rows(), std::vector<Rational>(q.cols()));
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) a[i][j] = q(i, j);

    Inertia out;
    while (!a.empty()) {
        const std::size_t n = a.size();
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (a[i][i] != 0) p = i;
        if (p == n) {
            // Zero diagonal: fold a nonzero off-diagonal entry onto it.
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i)
                for (std::size_t j = 0; j < n && !found; ++j)
                    if (a[i][j] != 0) {
                        for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
                        for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
                        p = i;
                        found = true;
                    }
            if (!found) {
                out.zero += static_cast<int>(n);
                break;
            }
        }
        const Rational piv = a[p][p];
        (piv > 0 ? out.positive : out.negative)++;
        std::vector<std::vector<Rational>> b;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p) continue;
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != p) row.push_back(a[i][j] - a[i][p] * a[p][j] / piv);
            b.push_back(std::move(row));
        }
        a = std::move(b);
    }
    return out;
}

CobordismData from_intersection_form(const IntMatrix& q, std::string source, std::string target)
{
    CobordismData c;
    auto in = inertia(q);
    c.chi = static_cast<int>(q.rows());
    c.b2_plus = in.positive;
    c.b2_minus = in.negative;
    c.sigma = in.positive - in.negative;
    c.b1 = 0;
    c.even_form = true;
    for (std::size_t i = 0; i < q.rows(); ++i)
        if (q(i, i) % 2 != 0) c.even_form = false;
    c.grading_shift = Rational(-2 * c.chi - 3 * c.sigma, 4);
    c.form = q;
    c.source = std::move(source);
    c.target = std::move(target);
    return c;
}

CobordismData compose(const CobordismData& first, const CobordismData& second, bool outer_ends_are_homology_spheres)
{
    CobordismData c;
    c.chi = first.chi + second.chi;
    c.sigma = first.sigma + second.sigma;
    c.b1 = first.b1 + second.b1;
    c.b2_plus = first.b2_plus + second.b2_plus;
    c.b2_minus = first.b2_minus + second.b2_minus;
    c.even_form = first.even_form && second.even_form;
    if (outer_ends_are_homology_spheres && c.sigma % 8 != 0) c.even_form = false;
    c.grading_shift = Rational(-2 * c.chi - 3 * c.sigma, 4);
    c.source = first.source;
    c.target = second.target;
    c.notes = first.notes;
    c.notes.insert(c.notes.end(), second.notes.begin(), second.notes.end());
    return c;
}

std::int64_t meridian_seifert_framing(const SurgeryPresentation& p, std::size_t j, std::int64_t framing)
{
    const std::int64_t det = determinant(p.linking);
    if (det != 1 && det != -1) throw InvalidInput("linking matrix is not unimodular");
    const std::size_t n = p.size();
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t s = 0, ss = 0; s < n; ++s) {
            if (s == j) continue;
            minor(rr, ss++) = p.linking(r, s);
        }
        ++rr;
    }
    // (L^-1)_jj = det(minor) / det(L), and det(L) = +-1.
    return framing - determinant(minor) * det;
}

namespace {

CobordismData meridian_handle(SurgeryPresentation p, const std::string& k0, const std::string& k1, std::string source,
                              std::string target)
{
    p = cancel_pair(p, p.index_of("U1"), p.index_of("U2"));
    p.notes.push_back("cancelled the Hopf pair U1, U2");
    p = blow_up_clasp(p, p.index_of(k0), p.index_of(k1), +1, "E");
    p.notes.push_back("blew up the " + k0 + "-" + k1 + " clasp");
    const auto e = p.index_of("E");
    IntMatrix q(1, 1);
    q(0, 0) = meridian_seifert_framing(p, e, -1);
    auto c = from_intersection_form(q, std::move(source), std::move(target));
    c.notes = p.notes;
    c.notes.push_back("2-handle along a -1 framed meridian of E, Seifert framing " + std::to_string(q(0, 0)));
    return c;
}

}  // namespace

CobordismData type1_cobordism(std::int64_t n)
{
    auto steps = normalize_to_zero(n);
    std::string k0 = "K", k1 = "mK";
    std::vector<std::string> notes;
    for (const auto& s : steps) {
        if (!s.matches_chain) throw std::logic_error("normalization step did not reproduce the chain");
        notes.push_back("n = " + std::to_string(s.from_n) + " -> " + std::to_string(s.to_n));
        k0 += "'";
        k1 += "'";
    }
    auto p = splice_chain(0, k0, k1);
    p.notes = notes;
    return meridian_handle(p, k0, k1, "Sp_{phi_" + std::to_string(n) + "^+}(K,mK)",
                           "(-2)-surgery on " + k0 + " # -" + k0 + ", homology cobordant to RP^3");
}

CobordismData type1_filling()
{
    auto w = type1_cobordism(0);
    IntMatrix q(1, 1);
    q(0, 0) = -2;
    auto bundle = from_intersection_form(q, "RP^3", "S^3");
    bundle.notes.push_back("disk bundle over S^2 with Euler number -2");
    auto c = compose(w, bundle, true);
    c.target = "S^3 (negative definite filling)";
    return c;
}

CobordismData type2_cobordism()
{
    auto p = splice_chain(0, "K0", "K1");
    return meridian_handle(p, "K0", "K1", "Sp_{phi_0^+}(K0,K1)", "(Y0#Y1)_{-2}(K0#K1)");
}

Rational lens_d(std::int64_t p, std::int64_t i)
{
    if (p < 1 || i < 0 || i >= p)
        throw OutOfRange("need p >= 1 and 0 <= i < p, got p = " + std::to_string(p) + ", i = " + std::to_string(i));
    return Rational((2 * i - p) * (2 * i - p) - p, 4 * p);
}

namespace {

// d(-L(p, q), i)
Rational neg_lens_d(std::int64_t p, std::int64_t q, std::int64_t i)
{
    if (p == 1) return 0;
    const std::int64_t t = 2 * i + 1 - p - q;
    return Rational(p * q - t * t, 4 * p * q) - neg_lens_d(q, p % q, i % q);
}

}  // namespace

Rational lens_d_recursive(std::int64_t p, std::int64_t q, std::int64_t i)
{
    if (p < 1 || q < 1 || i < 0 || i >= p || std::gcd(p, q) != 1)
        throw OutOfRange("need p, q >= 1 coprime and 0 <= i < p");
    if (p == 1) return 0;
    return -neg_lens_d(p, q % p, i);
}

}  // namespace splice
