#include "splice/pipeline.hpp"

#include <stdexcept>

#include "splice/error.hpp"
#include "splice/reduction.hpp"

namespace splice {

namespace {

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string model_name(const Rational& d) { return "(F[U]_{" + to_string(d) + "}, id)"; }

std::string describe(const CobordismData& c)
{
    return "chi=" + std::to_string(c.chi) + " sigma=" + std::to_string(c.sigma) + " b1=" + std::to_string(c.b1) +
           " b2+=" + std::to_string(c.b2_plus) + " b2-=" + std::to_string(c.b2_minus) +
           " even=" + (c.even_form ? "true" : "false") + " shift=" + to_string(c.grading_shift);
}

}  // namespace

PipelineReport verdict_type1(const GluingMatrix& m)
{
    auto t1 = classify_type1(m);
    if (!t1) throw NotType1(to_string(m) + " (" + to_string(m.basis) + ") is not a type-1 gluing matrix");

    PipelineReport r;
    r.type1 = t1;
    r.add("classification", "type1 n=" + std::to_string(t1->n) + " sign=" + sign_char(t1->sign));

    std::int64_t n = t1->n;
    if (t1->sign < 0) {
        if (!change_sign_identity(-n)) throw std::logic_error("sign identity failed");
        r.add("sign_change", "phi_" + std::to_string(n) + "^- = -phi_" + std::to_string(-n) + "^+");
        n = -n;
    }

    r.normalization = normalize_to_zero(n);
    r.add("moves", std::to_string(r.normalization.size()));
    for (const auto& s : r.normalization) {
        if (!s.matches_chain) throw std::logic_error("normalization step did not reproduce the chain");
        r.add("move", "n=" + std::to_string(s.from_n) + " -> " + std::to_string(s.to_n) + " (" +
                          s.result.notes.back() + ")");
    }

    r.cobordism = type1_cobordism(n);
    const auto& c = *r.cobordism;
    r.add("cobordism", describe(c));
    r.add("cobordism_target", c.target);
    if (!c.negative_definite() || !c.even_form)
        throw HypothesisFailed("cobordism is not negative definite and Spin");

    // The Spin structure on the target with d = 1/4 is the one the grading
    // coset selects; its complex is the rank one model.
    const Rational d_rp3 = lens_d(2, 0);
    r.model = trivial_iota(d_rp3, "RP^3");
    r.add("model", model_name(d_rp3));
    if (d_rp3 != c.grading_shift) throw HypothesisFailed("cobordism shift does not match the model grading");

    auto shifted = trivial_iota(d_rp3 - c.grading_shift);
    const bool to_trivial = is_locally_trivial(shifted);
    const bool from_trivial = is_locally_trivial(dual_iota(shifted));
    r.add("witness", std::string("model shifted by -") + to_string(c.grading_shift) + " is " +
                         model_name(d_rp3 - c.grading_shift) + ", local maps both ways " +
                         (to_trivial && from_trivial ? "verified" : "missing"));
    if (!to_trivial || !from_trivial) throw HypothesisFailed("shifted model is not locally trivial");

    r.verdict = kLocallyTrivialConditional;
    r.condition = "assumes the cobordism map of the negative definite Spin cobordism is a local map of the "
                  "computed degree, and uses the orientation-reversing symmetry for the reverse direction; "
                  "Floer cobordism maps are not computed here";
    return r;
}

PipelineReport verdict_type2(const KnotLikeComplex& k0, const KnotLikeComplex& k1, int n)
{
    PipelineReport r;
    for (auto [label, k] : {std::pair{"knot0", &k0}, std::pair{"knot1", &k1}}) {
        auto bad = validate_knotlike(*k);
        if (!bad.empty()) throw HypothesisFailed(std::string(label) + " is not a valid knot-like complex: " +
                                                 bad.front().kind + ": " + bad.front().detail);
        if (!is_locally_trivial_knotlike(*k)) throw HypothesisFailed(std::string(label) + " not locally trivial");
        r.add(label, k->name + " locally trivial");
    }

    auto sum = tensor(k0, reverse_orientation(mirror(k1)));
    r.add("connected_sum", std::to_string(sum.size()) + " generators");
    auto a = build_An(sum, n);
    auto b = build_B(sum);
    auto v = v_map(sum, n);
    const Rational da = d_invariant(a);
    r.add("d(A_" + std::to_string(n) + ")", to_string(da));
    if (da != 0) throw HypothesisFailed("d(A_" + std::to_string(n) + ") = " + to_string(da) + ", expected 0");

    const Rational shift = lens_d(2 * n, n);
    r.cone = surgery_cone(a, b, v, shift);
    r.add("cone", std::to_string(r.cone->iota.complex.size()) + " generators, shift " + to_string(shift));
    auto check = verify_iota(r.cone->iota);
    if (!check.ok())
        throw HypothesisFailed("cone is not an iota-complex: " + check.violations.front().kind + ": " +
                               check.violations.front().detail);
    r.add("iota_verify", "ok");

    r.reduction = corollary_reduce(*r.cone);
    const auto& red = *r.reduction;
    r.add("reduced_class", model_name(red.d));
    r.add("witness", "local maps cone <-> " + model_name(red.d) + " verified");

    auto dual_model = dual_iota(red.model);
    const Rational d_dual = dual_model.complex.grading(0);
    r.add("dual_class", model_name(d_dual));

    r.cobordism = type2_cobordism();
    const auto& c = *r.cobordism;
    r.add("cobordism", describe(c));
    r.add("cobordism_target", c.target);
    const Rational final_d = d_dual - c.grading_shift;
    r.model = trivial_iota(final_d);
    r.add("class", model_name(final_d));
    if (!is_locally_trivial(*r.model)) throw HypothesisFailed("class after the cobordism shift is " + model_name(final_d));

    r.verdict = kLocallyTrivialConditional;
    r.condition = "assumes the cobordism map of the negative definite Spin cobordism is a local map of the "
                  "computed degree and that the knots are positive and negative amphichiral respectively; "
                  "Floer cobordism maps are not computed here";
    return r;
}

}  // namespace splice
