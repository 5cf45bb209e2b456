#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fuselab/analysis.hpp"
#include "fuselab/core.hpp"

namespace fuselab {

// Content digests of everything a report was computed from. Keys are roles
// ("manifest", "metrics-table") or manifest-relative file paths, so reports
// built from the same inputs are byte-identical on any machine.
struct Provenance {
    std::string tool_version;
    std::map<std::string, std::string> input_digests;  // key -> sha256 hex
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReportBundle {
    std::vector<ModelId> model_order;      // table insertion order
    std::vector<DatasetId> dataset_order;
    MetricsTable metrics;
    RankTable ranks;
    std::vector<RankShift> shifts_auroc;   // empty when < 2 datasets
    std::vector<RankShift> shifts_auprc;
    RobustnessSummary robustness;
    Provenance provenance;
};

// Derives ranks, shifts and robustness from the metrics table.
// Errors: MissingEntry (table must be rectangular).
ReportBundle build_bundle(MetricsTable metrics, Provenance provenance);

// Markdown report: metrics table (3 decimals, best per column bolded, both
// cells on a tie), rank-shift tables, never-worst list, provenance digests.
// Rows ordered by first-dataset AUROC rank then model name; columns by
// dataset order.
std::string render_markdown(const ReportBundle& bundle);

// Canonical JSON: sorted object keys, shortest round-trip decimals, LF line
// endings, trailing newline. Rendering the same bundle twice is
// byte-identical, as is parse -> re-render.
std::string render_json(const ReportBundle& bundle);

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(std::string_view bytes);

}  // namespace fuselab
