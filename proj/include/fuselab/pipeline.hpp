#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fuselab/core.hpp"
#include "fuselab/fusion.hpp"
#include "fuselab/ingest.hpp"
#include "fuselab/report.hpp"

namespace fuselab {

inline constexpr std::string_view kEnsembleAvgId = "ensemble-avg";
inline constexpr std::string_view kEnsembleWeightedId = "ensemble-weighted";

// CLI-level overrides applied on top of the manifest's fusion settings.
struct PipelineOptions {
    JoinPolicy join_policy = JoinPolicy::Strict;
    std::optional<StrategySelection> strategy;
    std::optional<SkillKind> weight_source;
    std::optional<std::string> weights_file;  // UserSupplied weights path
};

struct PipelineRun {
    RunManifest manifest;
    std::vector<ScorePanel> panels;          // per dataset, ensembles attached
    std::vector<std::size_t> dropped;        // per dataset (DropMissing only)
    std::optional<WeightVector> ensemble_weights;
    MetricsTable metrics;
    Provenance provenance;
};

// Full evaluation pipeline: load manifest, ingest and join score files,
// derive weights if a weighted ensemble is requested, attach ensembles,
// evaluate every panel. Digests of all consumed files are recorded.
PipelineRun run_pipeline(const std::filesystem::path& manifest_path,
                         const PipelineOptions& options);

// Re-entry mode: a pre-computed metrics table stands in for raw scores.
struct ReentryRun {
    MetricsTable metrics;
    Provenance provenance;
};

ReentryRun run_reentry(const std::filesystem::path& metrics_table_path);

}  // namespace fuselab
