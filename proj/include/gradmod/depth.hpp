#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gradmod/ratliff_rush.hpp"
#include "gradmod/superficial.hpp"

namespace gradmod {

struct DepthReport {
    int depth = 0;
    int dim = 0;
    std::vector<IntPoly> h_chain;            // h_{M_0} .. h_{M_dim}
    std::vector<std::string> witness_forms;  // the superficial sequence used
    std::vector<long long> b_first;          // b-vector of x_1 on M
    bool method_agreement = true;            // b == 0  <=>  h_M = h_{M_1}
    int trials_total = 0;

    bool equivalent(const DepthReport& o) const {
        return depth == o.depth && dim == o.dim && h_chain == o.h_chain;
    }

    bool operator==(const DepthReport& o) const {
        return depth == o.depth && dim == o.dim && h_chain == o.h_chain &&
               witness_forms == o.witness_forms && b_first == o.b_first &&
               method_agreement == o.method_agreement && trials_total == o.trials_total;
    }
};

// The full chain M_0 -> M_1 -> ... -> M_d kept alive for downstream checks.
struct DepthComputation {
    DepthReport report;
    SuperficialChain chain;
    std::vector<std::shared_ptr<TruncModule>> stages;  // size d+1
    std::vector<HilbertData> stage_hilbert;            // size d+1
};

// Depth of the associated graded module via the h-polynomial chain rule, with
// the b-vector criterion as a mandatory cross-check on depth >= 1.
DepthComputation depth_assoc_graded(const Presentation& pres, uint64_t seed, int max_trials = 50);

struct DeltaReport {
    long long delta = 0;
    std::vector<long long> per_n;  // ell(m^{n+1}M ∩ JM / J m^n M)

    bool operator==(const DeltaReport& o) const {
        return delta == o.delta && per_n == o.per_n;
    }
};

// Valabrega-Valla sum for the ideal generated by the given maximal
// superficial sequence (forms over the ring of m)
DeltaReport delta_vv(const TruncModule& m, const std::vector<TruncPoly>& J_forms, int window);

struct GradedQuotientSeries {
    long long mu = 0, alpha = 0, beta = 0;  // ell of the three graded pieces

    bool operator==(const GradedQuotientSeries& o) const {
        return mu == o.mu && alpha == o.alpha && beta == o.beta;
    }
};

// Hilbert series of G(M)/(forms*)G(M) for a maximal superficial sequence with
// reduction number <= 2: mu + alpha z + beta z^2, beta <= alpha <= mu
GradedQuotientSeries graded_quotient_series(const TruncModule& m,
                                            const std::vector<TruncPoly>& forms);

struct ExactSeqReport {
    // five-term alternating sums, one per n checked (all must vanish)
    std::vector<long long> five_term_alternating;
    // additivity ell(m^2 M/J m M) = b_1 + ell(m^2 N / Jbar m N), per chain stage
    std::vector<long long> additivity_lhs, additivity_rhs;
    // left-exactness bounds of the Ratliff-Rush sequences, per n
    int rr_bounds_checked = 0;
    bool ok = true;
};

// Length identities from the exact sequences tying colon modules, reductions
// and the Ratliff-Rush filtration together, evaluated on a computed chain.
ExactSeqReport verify_exact_sequences(const DepthComputation& dc, int window = -1);

}  // namespace gradmod
