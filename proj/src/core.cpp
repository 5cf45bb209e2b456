#include "fuselab/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

namespace fuselab {

void validate_identifier(const std::string& name, const std::string& what) {
    if (name.empty()) {
        fail(ErrorCode::InvalidIdentifier, what + " must not be empty");
    }
    bool has_visible = false;
    for (unsigned char c : name) {
        if (c == ',' || c == '\n' || c == '\r') {
            fail(ErrorCode::InvalidIdentifier,
                 what + " '" + name + "' contains a comma or line break");
        }
        if (!std::isspace(c)) {
            has_visible = true;
        }
    }
    if (!has_visible) {
        fail(ErrorCode::InvalidIdentifier, what + " is whitespace-only");
    }
}

ScorePanel validate_panel(ScorePanel panel) {
    validate_identifier(panel.dataset.name, "dataset id");
    if (panel.models.empty()) {
        fail(ErrorCode::MissingCell, "panel has no model rows");
    }

    std::set<std::string> model_names;
    for (const ModelId& model : panel.models) {
        validate_identifier(model.name, "model id");
        if (!model_names.insert(model.name).second) {
            fail(ErrorCode::DuplicateEntry, "model '" + model.name + "' listed twice");
        }
    }

    const std::size_t n_samples = panel.sample_ids.size();
    std::unordered_set<std::string> sample_names;
    sample_names.reserve(n_samples);
    for (const std::string& id : panel.sample_ids) {
        validate_identifier(id, "sample id");
        if (!sample_names.insert(id).second) {
            fail(ErrorCode::DuplicateSampleId, "sample '" + id + "' appears twice");
        }
    }

    if (panel.labels.size() != n_samples) {
        fail(ErrorCode::MissingCell, "label count does not match sample count");
    }
    std::size_t n_pos = 0;
    for (std::uint8_t label : panel.labels) {
        if (label > 1) {
            fail(ErrorCode::MissingCell, "label out of {0,1}");
        }
        n_pos += label;
    }
    if (n_samples == 0 || n_pos == 0 || n_pos == n_samples) {
        fail(ErrorCode::SingleClassDataset,
             "dataset '" + panel.dataset.name + "' needs at least one positive and one negative");
    }

    if (panel.scores.size() != panel.models.size()) {
        fail(ErrorCode::MissingCell, "score row count does not match model count");
    }
    for (std::size_t m = 0; m < panel.scores.size(); ++m) {
        const auto& row = panel.scores[m];
        if (row.size() != n_samples) {
            fail(ErrorCode::MissingCell,
                 "model '" + panel.models[m].name + "' has " + std::to_string(row.size()) +
                     " scores for " + std::to_string(n_samples) + " samples");
        }
        for (std::size_t s = 0; s < row.size(); ++s) {
            const double v = row[s];
            if (std::isnan(v)) {
                fail(ErrorCode::MissingCell,
                     "hole at model '" + panel.models[m].name + "', sample '" +
                         panel.sample_ids[s] + "'");
            }
            if (!(v >= 0.0 && v <= 1.0)) {
                fail(ErrorCode::ScoreOutOfRange,
                     "score " + std::to_string(v) + " for model '" + panel.models[m].name +
                         "', sample '" + panel.sample_ids[s] + "'");
            }
        }
    }
    return panel;
}

WeightVector WeightVector::from_raw(const std::vector<double>& raw) {
    if (raw.size() < 2) {
        fail(ErrorCode::LengthMismatch, "need at least 2 weights, got " +
                                            std::to_string(raw.size()));
    }
    double sum = 0.0;
    for (double w : raw) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            fail(ErrorCode::NegativeWeight, "raw weight " + std::to_string(w));
        }
        sum += w;
    }
    if (sum <= 0.0) {
        fail(ErrorCode::AllZeroWeights, "raw weights sum to zero");
    }
    std::vector<double> normalized(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        normalized[i] = raw[i] / sum;
    }
    return WeightVector(std::move(normalized));
}

WeightVector WeightVector::uniform(std::size_t n) {
    if (n < 2) {
        fail(ErrorCode::LengthMismatch, "need at least 2 weights");
    }
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::string_view metric_kind_name(MetricKind kind) {
    return kind == MetricKind::Auroc ? "auroc" : "auprc";
}

void MetricsTable::insert(const ModelId& model, const DatasetId& dataset, MetricCell cell) {
    for (double v : {cell.auroc, cell.auprc}) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            fail(ErrorCode::ValueOutOfRange,
                 "metric value " + std::to_string(v) + " for (" + model.name + ", " +
                     dataset.name + ")");
        }
    }
    auto [it, inserted] = cells_.emplace(std::make_pair(model, dataset), cell);
    (void)it;
    if (!inserted) {
        fail(ErrorCode::DuplicateEntry,
             "duplicate metrics entry (" + model.name + ", " + dataset.name + ")");
    }
    if (std::find(models_.begin(), models_.end(), model) == models_.end()) {
        models_.push_back(model);
    }
    if (std::find(datasets_.begin(), datasets_.end(), dataset) == datasets_.end()) {
        datasets_.push_back(dataset);
    }
}

bool MetricsTable::contains(const ModelId& model, const DatasetId& dataset) const {
    return cells_.find(std::make_pair(model, dataset)) != cells_.end();
}

const MetricCell& MetricsTable::at(const ModelId& model, const DatasetId& dataset) const {
    auto it = cells_.find(std::make_pair(model, dataset));
    if (it == cells_.end()) {
        fail(ErrorCode::MissingEntry,
             "no metrics entry (" + model.name + ", " + dataset.name + ")");
    }
    return it->second;
}

double MetricsTable::value(const ModelId& model, const DatasetId& dataset,
                           MetricKind kind) const {
    const MetricCell& cell = at(model, dataset);
    return kind == MetricKind::Auroc ? cell.auroc : cell.auprc;
}

void MetricsTable::require_rectangular() const {
    for (const ModelId& model : models_) {
        for (const DatasetId& dataset : datasets_) {
            at(model, dataset);
        }
    }
}

std::string metric_tie_key(double value) {
    char buffer[32];
    // %.11e prints 12 significant digits; the libc binary-to-decimal
    // conversion is correctly rounded (half-even on exact midpoints).
    std::snprintf(buffer, sizeof(buffer), "%.11e", value);
    return buffer;
}

std::string format_double_shortest(double value) {
    char buffer[40];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

}  // namespace fuselab
