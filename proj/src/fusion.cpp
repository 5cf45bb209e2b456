#include "fuselab/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fuselab/metrics.hpp"

namespace fuselab {

std::vector<double> fuse_weighted(const ScorePanel& panel, const WeightVector& weights) {
    const std::size_t n_models = panel.model_count();
    if (weights.size() != n_models) {
        fail(ErrorCode::LengthMismatch,
             std::to_string(weights.size()) + " weights for " + std::to_string(n_models) +
                 " models");
    }
    const std::size_t n_samples = panel.sample_count();
    std::vector<double> fused(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) {
        // Left-to-right accumulation in panel model order; the order is part
        // of the contract so runs are reproducible.
        double sum = 0.0;
        double lo = panel.scores[0][s];
        double hi = lo;
        for (std::size_t m = 0; m < n_models; ++m) {
            const double p = panel.scores[m][s];
            sum += weights[m] * p;
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        // Convexity holds exactly: rounding may spill the sum a few ulps
        // past the member envelope, never further.
        fused[s] = std::clamp(sum, lo, hi);
    }
    return fused;
}

std::vector<double> fuse_uniform(const ScorePanel& panel) {
    return fuse_weighted(panel, WeightVector::uniform(panel.model_count()));
}

WeightVector derive_weights(const ScorePanel& validation_panel, const SkillSource& source) {
    if (source.kind == SkillKind::UserSupplied) {
        fail(ErrorCode::InvalidSpec, "user-supplied weights are not derived from a panel");
    }
    const std::size_t n_models = validation_panel.model_count();
    std::vector<double> skills(n_models);

    switch (source.kind) {
        case SkillKind::AurocProportional: {
            for (std::size_t m = 0; m < n_models; ++m) {
                skills[m] = auroc(validation_panel.labels, validation_panel.scores[m]);
            }
            break;
        }
        case SkillKind::ChanceAdjustedAuroc: {
            constexpr double kSkillFloor = 1e-6;
            bool any_above_chance = false;
            for (std::size_t m = 0; m < n_models; ++m) {
                const double adjusted =
                    auroc(validation_panel.labels, validation_panel.scores[m]) - 0.5;
                if (adjusted > 0.0) {
                    any_above_chance = true;
                }
                skills[m] = std::max(adjusted, kSkillFloor);
            }
            if (!any_above_chance) {
                fail(ErrorCode::DegenerateSkills,
                     "no model scores above chance on the validation panel");
            }
            break;
        }
        case SkillKind::AccuracyProportional: {
            for (std::size_t m = 0; m < n_models; ++m) {
                skills[m] = accuracy(validation_panel.labels, validation_panel.scores[m],
                                     source.threshold);
            }
            break;
        }
        case SkillKind::UserSupplied:
            break;  // unreachable
    }
    return normalize_weights(skills);
}

ScorePanel attach_ensembles(
    ScorePanel panel,
    const std::vector<std::pair<ModelId, FusionStrategy>>& strategies) {
    std::set<std::string> taken;
    for (const ModelId& model : panel.models) {
        taken.insert(model.name);
    }
    for (const auto& [id, strategy] : strategies) {
        validate_identifier(id.name, "ensemble id");
        if (!taken.insert(id.name).second) {
            fail(ErrorCode::NameCollision, "ensemble id '" + id.name + "' already in use");
        }
        std::vector<double> fused;
        if (strategy.kind == FusionKind::Uniform) {
            fused = fuse_uniform(panel);
        } else {
            if (!strategy.weights.has_value()) {
                fail(ErrorCode::LengthMismatch, "weighted strategy without weights");
            }
            fused = fuse_weighted(panel, *strategy.weights);
        }
        panel.models.push_back(id);
        panel.scores.push_back(std::move(fused));
    }
    return panel;
}

}  // namespace fuselab
