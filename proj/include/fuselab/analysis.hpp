#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fuselab/core.hpp"

namespace fuselab {

struct RankedModel {
    ModelId model;
    double value = 0.0;
    int rank = 0;
    friend bool operator==(const RankedModel&, const RankedModel&) = default;
};

// Competition-min ranks of one (dataset, metric) column; higher value is
// better (rank 1). Ties are decided by metric_tie_key equality. Output is
// sorted by (rank, model name). Errors: MissingEntry.
std::vector<RankedModel> rank_models(const MetricsTable& table, const DatasetId& dataset,
                                     MetricKind kind);

// Ranks for every (dataset, metric) column of the table.
RankTable build_rank_table(const MetricsTable& table);

// One model's rank trajectory across datasets for one metric.
struct RankShift {
    ModelId model;
    MetricKind metric = MetricKind::Auroc;
    std::vector<int> ranks;   // dataset_order positions
    int max_shift = 0;        // max rank - min rank
    friend bool operator==(const RankShift&, const RankShift&) = default;
};

// Requires >= 2 datasets. Output sorted by first-dataset rank, then model
// name. Errors: LengthMismatch, MissingEntry.
std::vector<RankShift> rank_shifts(const MetricsTable& table, MetricKind kind,
                                   const std::vector<DatasetId>& dataset_order);

struct RobustnessSummary {
    struct Range {
        double auroc_range = 0.0;  // max - min across datasets
        double auprc_range = 0.0;
        friend bool operator==(const Range&, const Range&) = default;
    };
    // Models never attaining the worst (tie-inclusive minimum) value in any
    // (dataset, metric) column.
    std::set<ModelId> never_worst;
    std::map<ModelId, Range> ranges;
    friend bool operator==(const RobustnessSummary&, const RobustnessSummary&) = default;
};

// Errors: MissingEntry (table must be rectangular).
RobustnessSummary robustness_summary(const MetricsTable& table);

// Bump-chart data, one "model,metric,dataset,rank" row per combination.
// Models appear in first-dataset-rank order per metric, datasets in the
// given order.
std::string bump_chart_csv(const MetricsTable& table,
                           const std::vector<DatasetId>& dataset_order);

// {"never_worst": [...], "ranges": {model: {auroc_range, auprc_range}}}
std::string robustness_json(const RobustnessSummary& summary);

}  // namespace fuselab
