#pragma once

#include <vector>

#include "gradmod/hilbert.hpp"
#include "gradmod/module.hpp"

namespace gradmod {

struct RRReport {
    std::vector<long long> rr_dims;   // dim of the RR subspace for n = 1..window
    IntPoly r_poly;                   // r_M(z) = sum ell(rr^{n+1}/m^{n+1}M) z^n
    IntPoly h_tilde;                  // h(z) - (1-z)^{r+1} r_M(z)
    std::vector<int> stabilized_at;   // colon power where each union stabilized

    bool operator==(const RRReport& o) const {
        return rr_dims == o.rr_dims && r_poly == o.r_poly && h_tilde == o.h_tilde &&
               stabilized_at == o.stabilized_at;
    }
};

struct RRFiltration {
    std::vector<Subspace> tilde;  // index n-1 holds the RR subspace for m^n M, n = 1..window
    RRReport report;
};

// Ratliff-Rush filtration: rr(m^n M) = union_i (m^{n+i}M : m^i), computed
// incrementally until two consecutive colon powers agree below the cap guard.
// Requires positive depth (dimension >= 1 for the MCM inputs handled here).
RRFiltration rr_filtration_full(const TruncModule& m, int window = -1);

RRReport rr_filtration(const TruncModule& m, int window = -1);

}  // namespace gradmod
