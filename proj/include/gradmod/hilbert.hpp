#pragma once

#include <vector>

#include "gradmod/intpoly.hpp"
#include "gradmod/module.hpp"

namespace gradmod {

struct HilbertData {
    std::vector<long long> H;  // ell(M/m^{n+1}M) for n = 0..window
    std::vector<long long> L;  // ell(m^n M/m^{n+1}M)
    int r = 0;                 // detected dimension
    IntPoly h;
    std::vector<long long> e;  // e_0..e_r
    long long mu = 0;          // ell(M/mM)

    bool operator==(const HilbertData& o) const {
        return H == o.H && L == o.L && r == o.r && h == o.h && e == o.e && mu == o.mu;
    }
};

// H[n] = ell(M/m^{n+1}M) for n = 0..window; window + 2 <= cap
std::vector<long long> hilbert_function(const TruncModule& m, int window);

// dimension r (stable finite differences over the window tail) and the
// h-polynomial h(z) = (sum L_n z^n)(1-z)^r; throws CapError when the window
// cannot certify either
std::pair<int, IntPoly> h_polynomial(const TruncModule& m, int window = -1);

HilbertData hilbert_data(const TruncModule& m, int window = -1);

}  // namespace gradmod
