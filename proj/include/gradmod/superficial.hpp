#pragma once

#include <random>
#include <vector>

#include "gradmod/hilbert.hpp"
#include "gradmod/module.hpp"

namespace gradmod {

struct SuperficialWitness {
    TruncPoly form;              // over the stage ring
    std::vector<long long> b;    // b-vector of the form on the stage module
    bool colon_stabilizes = false;
    bool entry_orders_preserved = false;
    bool det_order_preserved = false;
    int trials_used = 0;
};

// b_n = ell((m^{n+1}M : x)/m^n M) for n = 0..window
std::vector<long long> b_vector(const TruncModule& m, const TruncPoly& x, int window);

struct RhoVector {
    std::vector<long long> rho;  // rho_n = ell(m^{n+1}M / x m^n M), n = 0..window
};

// requires dim M = 1; verifies the reconstruction
// h(z) = mu + sum_{i>=1} (rho_{i-1} - rho_i) z^i
RhoVector rho_vector(const TruncModule& m, const TruncPoly& x, int window = -1);

struct SinghReport {
    IntPoly h_m, h_n, b_poly;
    IntPoly lhs, rhs;  // h_M and h_N - (1-z)^r b
    bool ok = false;
};

// Singh's equality h_M(z) = h_N(z) - (1-z)^r b_{x,M}(z), N = M/xM, exact
SinghReport verify_singh(const TruncModule& m, const TruncPoly& x);

// One step of the phi-superficial search. Checks, in order: the quotient
// presentation stays minimal, entry orders and det order are preserved, the
// colon chain of x stabilizes on the module and on the ring A = Q/(f).
struct CandidateCheck {
    bool ok = false;
    SuperficialWitness witness;
};
CandidateCheck check_phi_superficial(const TruncModule& m, const TruncPoly& x);

struct SuperficialChain {
    std::vector<SuperficialWitness> witnesses;  // size count
    std::vector<Presentation> stage_pres;       // size count+1: M_0..M_count
    int trials_total = 0;
};

SuperficialChain build_superficial_chain(const Presentation& pres, int count,
                                         std::mt19937_64& rng, int max_trials);

std::vector<SuperficialWitness> find_phi_superficial(const Presentation& pres, int count,
                                                     uint64_t seed, int max_trials = 50);

// a random linear form with all coefficients uniform in F_p (nonzero form)
TruncPoly random_linear_form(const RingSpecPtr& spec, std::mt19937_64& rng);

// a stage form (whose variables are a subset of the original ones) rewritten
// over the original ring
TruncPoly lift_form(const TruncPoly& form, const RingSpecPtr& original);

}  // namespace gradmod
