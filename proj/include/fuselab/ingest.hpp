#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuselab/core.hpp"
#include "fuselab/fusion.hpp"

namespace fuselab {

// A score file row is exactly one ScoreRecord.
using ScoreFileRow = ScoreRecord;

// Parses a score CSV: header exactly "sample_id,label,score", LF or CRLF,
// decimal point '.', one row per non-empty line. Errors: BadHeader, BadRow,
// BadLabel, BadScore, DuplicateSampleId.
std::vector<ScoreRecord> parse_score_file(std::string_view content);

// Serializes rows back to the canonical score CSV (shortest round-trip
// decimals, LF endings). parse(serialize(rows)) == rows.
std::string score_file_csv(std::span<const ScoreRecord> rows);

enum class JoinPolicy { Strict, DropMissing };

struct JoinResult {
    ScorePanel panel;
    std::size_t dropped_samples = 0;  // |union| - |intersection| under DropMissing
};

// Joins per-model row lists into one validated panel, samples sorted by
// sample_id. Strict requires identical sample sets; DropMissing keeps the
// intersection. A label disagreement for a shared sample_id is fatal under
// both policies. Errors: LengthMismatch (< 2 files), DuplicateSampleId,
// LabelConflict, SampleSetMismatch, EmptyIntersection, plus panel validation.
JoinResult join_panels(const std::vector<std::pair<ModelId, std::vector<ScoreRecord>>>& files,
                       const DatasetId& dataset, JoinPolicy policy);

// Parses a metrics CSV: header exactly "model,dataset,auroc,auprc".
// Errors: BadHeader, BadRow, InvalidIdentifier, ValueOutOfRange, DuplicateEntry.
MetricsTable parse_metrics_table(std::string_view content);

// Serializes a MetricsTable to the same CSV (full precision); rows are
// emitted dataset-major in table order so a parse round-trip preserves both
// orders.
std::string metrics_table_csv(const MetricsTable& table);

// Which ensembles a run should attach.
enum class StrategySelection { None, Uniform, Weighted, Both };

struct FusionSettings {
    StrategySelection strategy = StrategySelection::None;
    SkillKind weight_source = SkillKind::AurocProportional;
    double accuracy_threshold = 0.5;
    std::string weights_file;                 // manifest-relative, UserSupplied only
    std::string validation_dataset;           // empty = sole dataset with validation files
};

struct ManifestDataset {
    DatasetId id;
    std::vector<std::string> score_files;       // manifest-relative, aligned with models
    std::vector<std::string> validation_files;  // empty, or aligned with models
};

struct RunManifest {
    std::filesystem::path base_dir;  // directory of the manifest file
    std::vector<ModelId> models;
    std::vector<ManifestDataset> datasets;
    FusionSettings fusion;

    std::filesystem::path resolve(const std::string& relative) const {
        return base_dir / std::filesystem::path(relative);
    }
};

// Parses and validates a manifest JSON document. `manifest_path` fixes the
// base directory for relative score-file paths. Errors: BadManifest,
// InvalidIdentifier, DuplicateEntry.
RunManifest parse_manifest(std::string_view json_text,
                           const std::filesystem::path& manifest_path);

RunManifest load_manifest(const std::filesystem::path& path);

// Weight file: JSON object {model id -> raw non-negative weight}, one entry
// per run model. Returns raw weights aligned with `models`.
std::vector<double> parse_weight_file(std::string_view json_text,
                                      const std::vector<ModelId>& models);

// Whole-file helpers; both throw IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fuselab
