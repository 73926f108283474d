#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradmod/depth.hpp"

namespace gradmod {

struct ClassificationRecord {
    std::vector<int> a_tuple;  // sorted diagonal orders of the artinian reduction
    long long eM = 0;
    IntPoly h;
    int depth = 0;
    int dim = 0;
    std::string case_id;  // "e4", "e5.a", ... "e7.d", "e8"
    bool theorem_ok = false;  // depth >= dim - 3

    bool operator==(const ClassificationRecord& o) const {
        return a_tuple == o.a_tuple && eM == o.eM && h == o.h && depth == o.depth &&
               dim == o.dim && case_id == o.case_id && theorem_ok == o.theorem_ok;
    }
};

// Smith normal form of a square matrix over the truncated one-variable ring
// k[y]/(y^cap): order-0 entries are units. Returns the sorted diagonal orders.
std::vector<int> smith_orders(const Presentation& dim0_pres);

// reduce phi modulo the chain's witnesses and decompose over the DVR;
// cross-checks sum(a_i) against the artinian length
std::vector<int> artinian_decompose(const DepthComputation& dc);

struct FreeSplit {
    int free_rank = 0;
    std::optional<Presentation> complement;  // absent when the module is free
};

// Detect direct (f)-blocks of the presentation: rows/columns whose single
// nonzero entry is a unit multiple of f split off a free summand.
FreeSplit split_free_summand(const Presentation& pres);

struct CaseRow {
    long long e;
    IntPoly h;
    int depth_drop;  // expected depth = dim - depth_drop
    const char* case_id;
};

// the classification table for mu = 4 over an e(A) = 3 hypersurface
const std::vector<CaseRow>& mu4_e3_case_table();

// assemble the record from a computed chain (mu = 4, order(f) = 3, no free
// summand required); the computed (e, h, depth) must match exactly one row
ClassificationRecord classify_from_chain(const DepthComputation& dc,
                                         const std::vector<int>& a_tuple);

// the spec-level entry point: runs the full chain itself
ClassificationRecord classify_mu4_e3(const Presentation& pres, uint64_t seed);

}  // namespace gradmod
