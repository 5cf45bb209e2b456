#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fuselab/core.hpp"

namespace fuselab {

enum class FusionKind { Uniform, Weighted };

// Probability-level (late) fusion rule: uniform averaging or skill-weighted
// averaging with an explicit weight vector.
struct FusionStrategy {
    FusionKind kind = FusionKind::Uniform;
    std::optional<WeightVector> weights;  // present iff kind == Weighted

    static FusionStrategy make_uniform() { return {FusionKind::Uniform, std::nullopt}; }
    static FusionStrategy make_weighted(WeightVector w) {
        return {FusionKind::Weighted, std::move(w)};
    }
};

// How raw per-model skill is measured on a validation panel before
// normalization into weights.
enum class SkillKind {
    AurocProportional,     // raw skill = validation AUROC
    ChanceAdjustedAuroc,   // raw skill = max(AUROC - 0.5, 1e-6)
    AccuracyProportional,  // raw skill = accuracy at `threshold`
    UserSupplied,          // weights come from a file, not a validation panel
};

struct SkillSource {
    SkillKind kind = SkillKind::AurocProportional;
    double threshold = 0.5;  // only used by AccuracyProportional
};

// Weighted fusion (one fused probability per sample): for each sample x,
// sum_i w_i * p_i(x), accumulated left to right in panel model order, then
// clamped to [min_i p_i(x), max_i p_i(x)] so the convexity contract holds
// under rounding. Errors: LengthMismatch.
std::vector<double> fuse_weighted(const ScorePanel& panel, const WeightVector& weights);

// Uniform fusion; bit-identical to fuse_weighted with w_i = 1/N.
std::vector<double> fuse_uniform(const ScorePanel& panel);

// Measures per-model skill on the validation panel and normalizes it into a
// WeightVector. Errors: SingleClassDataset, DegenerateSkills (all skills at
// or below chance under ChanceAdjustedAuroc), AllZeroWeights.
WeightVector derive_weights(const ScorePanel& validation_panel, const SkillSource& source);

// Appends one synthetic model row per strategy with the fused scores; the
// original rows are unchanged. Errors: NameCollision.
ScorePanel attach_ensembles(
    ScorePanel panel,
    const std::vector<std::pair<ModelId, FusionStrategy>>& strategies);

}  // namespace fuselab
