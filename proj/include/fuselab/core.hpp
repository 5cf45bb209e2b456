#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuselab/error.hpp"

namespace fuselab {

// Identifier of one score-producing model ("xception", "ensemble-avg", ...).
// Names are case-sensitive, must contain a non-whitespace character, and may
// not contain commas or line breaks (they are written into CSV cells).
struct ModelId {
    std::string name;
    friend auto operator<=>(const ModelId&, const ModelId&) = default;
};

struct DatasetId {
    std::string name;
    friend auto operator<=>(const DatasetId&, const DatasetId&) = default;
};

// Throws InvalidIdentifier unless `name` is usable as a ModelId/DatasetId/
// sample id. `what` names the offending field in the error message.
void validate_identifier(const std::string& name, const std::string& what);

// One sample as seen by one model: ground-truth label (1 = fake/positive)
// and the model's fake-probability.
struct ScoreRecord {
    std::string sample_id;
    int label = 0;          // 0 or 1
    double score = 0.0;     // in [0, 1]
    friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

// Joined score matrix of one dataset: N model rows over S shared samples.
// scores[m][s] is model m's fake-probability for sample s. A quiet NaN cell
// marks a hole left by assembly; validate_panel rejects it.
struct ScorePanel {
    DatasetId dataset;
    std::vector<ModelId> models;
    std::vector<std::string> sample_ids;
    std::vector<std::uint8_t> labels;            // per sample, 1 = fake
    std::vector<std::vector<double>> scores;     // [model][sample]

    std::size_t model_count() const { return models.size(); }
    std::size_t sample_count() const { return sample_ids.size(); }

    friend bool operator==(const ScorePanel&, const ScorePanel&) = default;
};

// Checks every panel invariant and returns the panel unchanged. Idempotent.
// Errors: InvalidIdentifier, DuplicateEntry (model listed twice),
// DuplicateSampleId, MissingCell, ScoreOutOfRange, SingleClassDataset.
ScorePanel validate_panel(ScorePanel panel);

// Per-model convex weights: non-negative, summing to 1 within 1e-12.
class WeightVector {
public:
    // Normalizes raw non-negative skills to sum 1. Requires length >= 2.
    // Errors: NegativeWeight, AllZeroWeights, LengthMismatch.
    static WeightVector from_raw(const std::vector<double>& raw);

    // w_i = 1/n for all i.
    static WeightVector uniform(std::size_t n);

    const std::vector<double>& values() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {}
    std::vector<double> weights_;
};

inline WeightVector normalize_weights(const std::vector<double>& raw) {
    return WeightVector::from_raw(raw);
}

enum class MetricKind { Auroc, Auprc };

std::string_view metric_kind_name(MetricKind kind);

struct MetricCell {
    double auroc = 0.0;
    double auprc = 0.0;
    friend bool operator==(const MetricCell&, const MetricCell&) = default;
};

// (model, dataset) -> {AUROC, AUPRC}. Remembers first-insertion order of
// models and datasets so downstream output is deterministic.
class MetricsTable {
public:
    // Errors: DuplicateEntry, ValueOutOfRange (non-finite or outside [0,1]).
    void insert(const ModelId& model, const DatasetId& dataset, MetricCell cell);

    bool contains(const ModelId& model, const DatasetId& dataset) const;
    // Errors: MissingEntry.
    const MetricCell& at(const ModelId& model, const DatasetId& dataset) const;
    double value(const ModelId& model, const DatasetId& dataset, MetricKind kind) const;

    const std::vector<ModelId>& models() const { return models_; }
    const std::vector<DatasetId>& datasets() const { return datasets_; }
    std::size_t size() const { return cells_.size(); }

    // Errors: MissingEntry unless every (model, dataset) pair is present.
    void require_rectangular() const;

    friend bool operator==(const MetricsTable&, const MetricsTable&) = default;

private:
    std::vector<ModelId> models_;
    std::vector<DatasetId> datasets_;
    std::map<std::pair<ModelId, DatasetId>, MetricCell> cells_;
};

enum class TiePolicy { CompetitionMin };

// Competition-min ranks per (dataset, metric) column: rank 1 is best, tied
// values share the lowest applicable rank, the next distinct value skips by
// the tie-group size.
struct RankTable {
    TiePolicy tie_policy = TiePolicy::CompetitionMin;
    std::map<std::pair<DatasetId, MetricKind>, std::map<ModelId, int>> ranks;

    friend bool operator==(const RankTable&, const RankTable&) = default;
};

// Canonical tie key for metric comparisons: the value formatted to 12
// significant digits (round-half-even). Two metric values tie exactly when
// their keys compare equal, which keeps rank ties deterministic across
// platforms.
std::string metric_tie_key(double value);

// Shortest decimal that round-trips to the exact double (std::to_chars).
// Used for every CSV number the tool emits.
std::string format_double_shortest(double value);

}  // namespace fuselab
