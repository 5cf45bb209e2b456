#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuselab/core.hpp"

namespace fuselab {

struct EvaluationResult {
    double auroc = 0.0;
    double auprc = 0.0;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    friend bool operator==(const EvaluationResult&, const EvaluationResult&) = default;
};

enum class CurveKind { Roc, Pr };

// Ordered curve points. Roc: (FPR, TPR) from (0,0) to (1,1), one point per
// distinct threshold. Pr: (recall, precision) at tie-block boundaries.
struct CurvePoints {
    CurveKind kind = CurveKind::Roc;
    std::vector<std::pair<double, double>> points;
};

// Mann-Whitney AUROC: the probability a random positive outscores a random
// negative, ties counted 0.5. Computed by sort-and-midrank in O(n log n) and
// equal to the O(n^2) pairwise definition within 1e-12.
// Errors: LengthMismatch, SingleClassDataset, NonFiniteScore.
double auroc(std::span<const std::uint8_t> labels, std::span<const double> scores);

// Non-interpolated average precision over tie-blocks: scores grouped by
// distinct value descending, AP += delta-recall * precision-at-block-end.
double auprc(std::span<const std::uint8_t> labels, std::span<const double> scores);

// Fraction of samples where (score >= threshold) matches (label == 1).
// threshold must lie in (0,1).
double accuracy(std::span<const std::uint8_t> labels, std::span<const double> scores,
                double threshold);

CurvePoints curve_points(std::span<const std::uint8_t> labels,
                         std::span<const double> scores, CurveKind kind);

EvaluationResult evaluate(std::span<const std::uint8_t> labels,
                          std::span<const double> scores);

// One EvaluationResult per panel row, in panel model order.
struct PanelEvaluation {
    DatasetId dataset;
    std::vector<std::pair<ModelId, EvaluationResult>> per_model;
};

PanelEvaluation evaluate_panel(const ScorePanel& panel);

// CSV export of one curve: a "# kind=... model=... dataset=..." comment line,
// an "x,y" header, then shortest round-trip decimal coordinates.
std::string curve_csv(const CurvePoints& curve, const ModelId& model,
                      const DatasetId& dataset);

}  // namespace fuselab
