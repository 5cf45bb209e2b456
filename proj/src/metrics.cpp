#include "fuselab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fuselab {

namespace {

struct ClassCounts {
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

ClassCounts check_inputs(std::span<const std::uint8_t> labels,
                         std::span<const double> scores) {
    if (labels.size() != scores.size()) {
        fail(ErrorCode::LengthMismatch,
             std::to_string(labels.size()) + " labels vs " +
                 std::to_string(scores.size()) + " scores");
    }
    ClassCounts counts;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] > 1) {
            fail(ErrorCode::BadLabel, "label " + std::to_string(labels[i]) + " at index " +
                                          std::to_string(i));
        }
        if (!std::isfinite(scores[i])) {
            fail(ErrorCode::NonFiniteScore, "score at index " + std::to_string(i));
        }
        if (labels[i] == 1) {
            ++counts.n_pos;
        } else {
            ++counts.n_neg;
        }
    }
    if (counts.n_pos == 0 || counts.n_neg == 0) {
        fail(ErrorCode::SingleClassDataset, "both classes are required");
    }
    return counts;
}

// Indices sorted by score descending; equal scores keep input order, which
// under panel ordering means sample_id ascending.
std::vector<std::size_t> order_by_score_desc(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return order;
}

// Walks tie blocks of the descending order and hands each block's cumulative
// (tp, fp) to the sink.
template <typename Sink>
void for_each_block(std::span<const std::uint8_t> labels, std::span<const double> scores,
                    const std::vector<std::size_t>& order, Sink&& sink) {
    const std::size_t n = order.size();
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t begin = 0;
    while (begin < n) {
        std::size_t end = begin;
        while (end < n && scores[order[end]] == scores[order[begin]]) {
            ++end;
        }
        std::size_t block_tp = 0;
        for (std::size_t i = begin; i < end; ++i) {
            block_tp += labels[order[i]];
        }
        tp += block_tp;
        fp += (end - begin) - block_tp;
        sink(tp, fp);
        begin = end;
    }
}

}  // namespace

double auroc(std::span<const std::uint8_t> labels, std::span<const double> scores) {
    const ClassCounts counts = check_inputs(labels, scores);
    const std::size_t n = labels.size();

    // Midrank formulation of the Mann-Whitney statistic. Ranks are ascending
    // by score; tied scores share the mean rank of their block. All partial
    // sums are exact half-integers, so the result matches the O(n^2)
    // pairwise count bit for bit after the final division.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    double positive_rank_sum = 0.0;
    std::size_t begin = 0;
    while (begin < n) {
        std::size_t end = begin;
        while (end < n && scores[order[end]] == scores[order[begin]]) {
            ++end;
        }
        // 1-based ranks begin+1 .. end share the midrank.
        const double midrank = (static_cast<double>(begin + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t i = begin; i < end; ++i) {
            if (labels[order[i]] == 1) {
                positive_rank_sum += midrank;
            }
        }
        begin = end;
    }

    const double n_pos = static_cast<double>(counts.n_pos);
    const double n_neg = static_cast<double>(counts.n_neg);
    const double numerator = positive_rank_sum - n_pos * (n_pos + 1.0) / 2.0;
    return numerator / (n_pos * n_neg);
}

double auprc(std::span<const std::uint8_t> labels, std::span<const double> scores) {
    const ClassCounts counts = check_inputs(labels, scores);
    const auto order = order_by_score_desc(scores);

    const double n_pos = static_cast<double>(counts.n_pos);
    double ap = 0.0;
    double prev_recall = 0.0;
    for_each_block(labels, scores, order, [&](std::size_t tp, std::size_t fp) {
        const double recall = static_cast<double>(tp) / n_pos;
        const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        ap += (recall - prev_recall) * precision;
        prev_recall = recall;
    });
    return ap;
}

double accuracy(std::span<const std::uint8_t> labels, std::span<const double> scores,
                double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        fail(ErrorCode::ValueOutOfRange,
             "decision threshold " + std::to_string(threshold) + " outside (0,1)");
    }
    if (labels.size() != scores.size()) {
        fail(ErrorCode::LengthMismatch,
             std::to_string(labels.size()) + " labels vs " +
                 std::to_string(scores.size()) + " scores");
    }
    if (labels.empty()) {
        fail(ErrorCode::LengthMismatch, "empty input");
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!std::isfinite(scores[i])) {
            fail(ErrorCode::NonFiniteScore, "score at index " + std::to_string(i));
        }
        const bool predicted_fake = scores[i] >= threshold;
        if (predicted_fake == (labels[i] == 1)) {
            ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(labels.size());
}

CurvePoints curve_points(std::span<const std::uint8_t> labels,
                         std::span<const double> scores, CurveKind kind) {
    const ClassCounts counts = check_inputs(labels, scores);
    const auto order = order_by_score_desc(scores);
    const double n_pos = static_cast<double>(counts.n_pos);
    const double n_neg = static_cast<double>(counts.n_neg);

    CurvePoints curve;
    curve.kind = kind;
    if (kind == CurveKind::Roc) {
        curve.points.emplace_back(0.0, 0.0);
        for_each_block(labels, scores, order, [&](std::size_t tp, std::size_t fp) {
            curve.points.emplace_back(static_cast<double>(fp) / n_neg,
                                      static_cast<double>(tp) / n_pos);
        });
    } else {
        bool first = true;
        for_each_block(labels, scores, order, [&](std::size_t tp, std::size_t fp) {
            const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
            if (first) {
                curve.points.emplace_back(0.0, precision);
                first = false;
            }
            curve.points.emplace_back(static_cast<double>(tp) / n_pos, precision);
        });
    }
    return curve;
}

EvaluationResult evaluate(std::span<const std::uint8_t> labels,
                          std::span<const double> scores) {
    const ClassCounts counts = check_inputs(labels, scores);
    EvaluationResult result;
    result.auroc = auroc(labels, scores);
    result.auprc = auprc(labels, scores);
    result.n_pos = counts.n_pos;
    result.n_neg = counts.n_neg;
    return result;
}

PanelEvaluation evaluate_panel(const ScorePanel& panel) {
    PanelEvaluation evaluation;
    evaluation.dataset = panel.dataset;
    evaluation.per_model.reserve(panel.model_count());
    for (std::size_t m = 0; m < panel.model_count(); ++m) {
        evaluation.per_model.emplace_back(panel.models[m],
                                          evaluate(panel.labels, panel.scores[m]));
    }
    return evaluation;
}

std::string curve_csv(const CurvePoints& curve, const ModelId& model,
                      const DatasetId& dataset) {
    std::string out = "# kind=";
    out += curve.kind == CurveKind::Roc ? "roc" : "pr";
    out += " model=" + model.name + " dataset=" + dataset.name + "\n";
    out += "x,y\n";
    for (const auto& [x, y] : curve.points) {
        out += format_double_shortest(x);
        out += ',';
        out += format_double_shortest(y);
        out += '\n';
    }
    return out;
}

}  // namespace fuselab
