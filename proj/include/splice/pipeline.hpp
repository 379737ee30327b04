#ifndef SPLICE_PIPELINE_HPP
#define SPLICE_PIPELINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splice/cobordism.hpp"
#include "splice/knot_like.hpp"
#include "splice/splice_classifier.hpp"
#include "splice/surgery_cone.hpp"

namespace splice {

// Result of one of the two end-to-end arguments. `entries` is the ordered
// record printed by the CLI; the witnesses let a caller re-check every
// algebraic claim.
struct PipelineReport {
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<std::string> warnings;
    std::string verdict;
    std::string condition;

    std::optional<Type1Class> type1;
    std::vector<NormalizationStep> normalization;
    std::optional<CobordismData> cobordism;
    std::optional<IotaComplex> model;        // class the cobordism lands in
    std::optional<SurgeryCone> cone;
    std::optional<CorollaryResult> reduction;

    void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
};

inline constexpr const char* kLocallyTrivialConditional = "locally trivial (conditional)";

// Type-1 splice: sign change to phi^+, normalization to n = 0, the
// negative definite Spin cobordism to the RP^3-like end and its model class.
// Throws NotType1.
PipelineReport verdict_type1(const GluingMatrix& m);

// Type-2 splice of K0 and K1: both knot complexes must be locally trivial;
// the 2n-surgery cone on K0 # -K1 is reduced explicitly and compared with
// the cobordism shift. Throws HypothesisFailed naming the failed check.
PipelineReport verdict_type2(const KnotLikeComplex& k0, const KnotLikeComplex& k1, int n = 1);

}  // namespace splice

#endif
