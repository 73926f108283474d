#pragma once

#include <map>
#include <memory>

#include "gradmod/classify.hpp"
#include "gradmod/instance.hpp"

namespace gradmod {

struct PipelineOptions {
    int start_cap = 7;
    int max_cap = 10;
    uint64_t seed = 42;
    uint32_t p_override = 0;
    int window = -1;  // -1: cap - 2
    bool need_chain = true;
    bool with_rr = true;
    bool with_delta = true;
    bool with_exact_seq = false;
    bool with_classify = true;
    int max_trials = 50;
};

struct PipelineResult {
    std::string label;
    uint32_t p = 0;
    uint64_t seed = 0;
    int cap_used = 0;

    int mu = 0, iM = 0, det_order = 0, order_f = 0, dim = 0;
    HilbertData hilbert;

    std::optional<DepthReport> depth;
    std::optional<RRReport> rr;
    std::optional<DeltaReport> delta;
    std::optional<GradedQuotientSeries> gqs;
    std::optional<std::vector<int>> a_tuple;
    std::optional<ClassificationRecord> classification;
    int free_rank = 0;

    std::map<std::string, double> timings_ms;

    // heavyweight chain kept for downstream checks; never serialized
    std::shared_ptr<DepthComputation> chain_data;

    // the guarded-protocol comparison: every reported invariant must agree,
    // while window lengths, witnesses and timings may differ between caps
    bool agrees(const PipelineResult& o) const;

    // full equality of the serialized content (JSON round-trips)
    bool operator==(const PipelineResult& o) const;
};

// single computation at a fixed cap; throws CapError when the cap cannot
// certify a window-dependent inference
PipelineResult run_pipeline_at_cap(const InstanceFile& inst, int cap,
                                   const PipelineOptions& opt);

// the guarded protocol: compute at cap and cap+1, escalate on disagreement
// or CapError, hard-fail past max_cap
PipelineResult run_pipeline(const InstanceFile& inst, const PipelineOptions& opt);

std::string report_to_json_text(const PipelineResult& r);
PipelineResult report_from_json_text(const std::string& text);
std::string report_to_table(const PipelineResult& r);

}  // namespace gradmod
