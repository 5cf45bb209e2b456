#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuselab/core.hpp"

namespace fuselab {

struct SynthModelSpec {
    ModelId id;
    double target_auroc = 0.75;  // in (0, 1)
    friend bool operator==(const SynthModelSpec&, const SynthModelSpec&) = default;
};

// Recipe for a synthetic score panel under an equicorrelated binormal model:
// per model, negative latents ~ N(0,1) and positive latents ~ N(mu_i,1) with
// mu_i = sqrt(2) * probit(target_auroc_i); model latents share one common
// Gaussian factor with loading sqrt(rho); latents map to scores through the
// logistic function.
struct SynthSpec {
    DatasetId dataset;
    std::vector<SynthModelSpec> models;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    double rho = 0.0;            // in [0, 1)
    std::uint64_t seed = 0;
    friend bool operator==(const SynthSpec&, const SynthSpec&) = default;
};

// Deterministic: the same spec (seed included) yields a bit-identical panel.
// Sample ids are "n-<idx>" negatives followed by "p-<idx>" positives. Each
// model draws from its own counter-based substream keyed by (seed, model
// index), so adding a model never perturbs existing rows.
// Errors: InvalidSpec.
ScorePanel generate_panel(const SynthSpec& spec);

// Closed-form binormal AUROC for class-mean separation mu: Phi(mu / sqrt(2)).
double expected_auroc_of_mu(double mu);

// Inverse of the construction above: sqrt(2) * probit(target).
double mu_for_target_auroc(double target_auroc);

// Standard normal CDF and quantile (Wichura's AS 241 rational approximation,
// accurate to ~1e-15 across (0,1)).
double normal_cdf(double x);
double normal_quantile(double p);

// Counter-based uniform/normal stream: value k is a pure function of
// (seed, stream, k) built on the SplitMix64 finalizer, so substreams can be
// evaluated independently and in any order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    double uniform(std::uint64_t counter) const;  // in (0, 1)
    double normal(std::uint64_t counter) const;

private:
    std::uint64_t base_;
};

// JSON sidecar for a SynthSpec, and its parser (round-trips exactly).
std::string synth_spec_json(const SynthSpec& spec);
SynthSpec parse_synth_spec(std::string_view json_text);

}  // namespace fuselab
