#include "splice/surgery_cone.hpp"

#include <stdexcept>

#include "splice/error.hpp"
#include "splice/reduction.hpp"

namespace splice {

namespace {

// Block layout [A_l, A_r, B] for the three pieces of a cone map.
UMatrix cone_blocks(const UMatrix& aa, const UMatrix& ba, const UMatrix& bb, std::size_t na_src, std::size_t nb_src,
                    std::size_t na_tgt, std::size_t nb_tgt)
{
    UMatrix m(2 * na_tgt + nb_tgt, 2 * na_src + nb_src);
    for (std::size_t i = 0; i < na_tgt; ++i)
        for (std::size_t j = 0; j < na_src; ++j) {
            m(i, j) = aa(i, j);
            m(na_tgt + i, na_src + j) = aa(i, j);
        }
    for (std::size_t i = 0; i < nb_tgt; ++i) {
        for (std::size_t j = 0; j < na_src; ++j) {
            m(2 * na_tgt + i, j) = ba(i, j);
            m(2 * na_tgt + i, na_src + j) = ba(i, j);
        }
        for (std::size_t j = 0; j < nb_src; ++j) m(2 * na_tgt + i, 2 * na_src + j) = bb(i, j);
    }
    return m;
}

}  // namespace

SurgeryCone surgery_cone(const GradedComplex& a, const GradedComplex& b, const UMap& v, const Rational& shift)
{
    for (const auto* c : {&a, &b})
        if (auto bad = validate(*c); !bad.empty())
            throw InvalidCone("invalid input complex: " + bad.front().kind + ": " + bad.front().detail);
    if (v.rows() != b.size() || v.cols() != a.size()) throw InvalidCone("v has the wrong shape");
    if (v.degree % 2 != 0) throw InvalidCone("v has odd degree " + std::to_string(v.degree));
    if (auto bad = map_violations(a, b, v); !bad.empty()) throw InvalidCone("v is not homogeneous: " + bad.front().detail);
    if (!is_chain_map(a, b, v)) throw InvalidCone("v is not a chain map");
    auto db = decompose(b);
    if (db.towers.size() != 1 || !db.pairs.empty()) throw InvalidCone("B is not homotopy equivalent to a single tower");

    const std::size_t na = a.size(), nb = b.size();
    std::vector<Generator> gens;
    for (const char* side : {"l:", "r:"})
        for (const auto& g : a.generators()) gens.push_back({side + g.id, g.grading + shift});
    for (const auto& g : b.generators()) gens.push_back({"b:" + g.id, g.grading - v.degree - 1 + shift});

    UMatrix d = cone_blocks(a.differential(), v.matrix, b.differential(), na, nb, na, nb);
    UMatrix iota(2 * na + nb, 2 * na + nb);
    for (std::size_t i = 0; i < na; ++i) {
        iota(i, na + i) = UPoly::one();
        iota(na + i, i) = UPoly::one();
    }
    for (std::size_t i = 0; i < nb; ++i) iota(2 * na + i, 2 * na + i) = UPoly::one();

    std::string name = "cone(" + a.name() + ")";
    return {{GradedComplex(name, std::move(gens), std::move(d)), {std::move(iota), 0}}, a, b, v, shift};
}

CorollaryResult corollary_reduce(const SurgeryCone& cone)
{
    Reduction ra, rb;
    try {
        ra = reduce(cone.a);
        rb = reduce(cone.b);
    } catch (const NotRankOne& e) {
        throw HypothesisFailed(e.what());
    }
    const Rational da = ra.normal_form.tower_grading;
    if (da != 0) throw HypothesisFailed("d(A) = " + to_string(da) + ", expected 0");

    const auto& deca = ra.decomposition;
    const auto& decb = rb.decomposition;
    const auto& fa = deca.to_reduced.matrix;
    const auto& ga = deca.from_reduced.matrix;
    const auto& ha = deca.homotopy.matrix;
    const auto& fb = decb.to_reduced.matrix;
    const auto& gb = decb.from_reduced.matrix;
    const auto& hb = decb.homotopy.matrix;
    const auto& v = cone.v.matrix;

    UMap vr{multiply(multiply(fb, v), ga), cone.v.degree};
    const std::size_t xa = ra.tower, zb = rb.tower;
    if (!vr.matrix(zb, xa).is_unit()) throw HypothesisFailed("v is not a unit on the towers");

    const std::size_t na = cone.a.size(), nb = cone.b.size();
    const std::size_t ma = deca.reduced.size(), mb = decb.reduced.size();

    // Homotopy equivalence between the cone and the cone on reduced pieces.
    UMap phi{cone_blocks(fa, multiply(multiply(fb, v), ha), fb, na, nb, ma, mb), 0};
    UMap psi{cone_blocks(ga, multiply(multiply(hb, v), ga), gb, ma, mb, na, nb), 0};

    // a <- a + v(a) x on both copies, for every step generator a.
    UMatrix p = identity_umatrix(2 * ma + mb);
    for (std::size_t j = 0; j < ma; ++j) {
        if (j == xa || vr.matrix(zb, j).is_zero()) continue;
        p(xa, j) = vr.matrix(zb, j);
        p(ma + xa, ma + j) = vr.matrix(zb, j);
    }

    CorollaryResult out;
    out.d = cone.shift + da;
    out.model = trivial_iota(out.d, "model");
    UMatrix to(1, 2 * ma + mb), from(2 * ma + mb, 1);
    to(0, xa) = UPoly::one();
    from(xa, 0) = UPoly::one();
    from(ma + xa, 0) = UPoly::one();
    out.to_model = {multiply(multiply(to, p), phi.matrix), 0};
    out.from_model = {multiply(multiply(psi.matrix, p), from), 0};

    if (!is_local_map(out.to_model, cone.iota, out.model) || !is_local_map(out.from_model, out.model, cone.iota))
        throw std::logic_error("corollary_reduce produced a map that is not local");
    return out;
}

}  // namespace splice
