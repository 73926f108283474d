#include "gradmod/hilbert.hpp"

#include <algorithm>

#include "gradmod/errors.hpp"

namespace gradmod {

std::vector<long long> hilbert_function(const TruncModule& m, int window) {
    if (window < 0 || window + 2 > m.cap())
        throw CapError("hilbert window " + std::to_string(window) + " too large for cap " +
                       std::to_string(m.cap()));
    std::vector<long long> H(window + 1);
    for (int n = 0; n <= window; ++n) {
        H[n] = m.length_upto(n + 1);
        if (n > 0 && H[n] < H[n - 1])
            throw ComputationError("Hilbert function decreased; model is inconsistent");
    }
    return H;
}

namespace {

int default_window(const TruncModule& m) { return m.cap() - 2; }

// r = smallest k whose k-th finite differences of H are constant over the
// last three window points
int detect_dimension(const std::vector<long long>& H) {
    std::vector<long long> d(H.begin(), H.end());
    for (int k = 0; static_cast<int>(d.size()) >= 3; ++k) {
        std::size_t n = d.size();
        if (d[n - 1] == d[n - 2] && d[n - 2] == d[n - 3]) return k;
        for (std::size_t i = n - 1; i > 0; --i) d[i] -= d[i - 1];
        d.erase(d.begin());
    }
    throw CapError("window too small to detect the module dimension");
}

}  // namespace

std::pair<int, IntPoly> h_polynomial(const TruncModule& m, int window) {
    if (window < 0) window = default_window(m);
    std::vector<long long> H = hilbert_function(m, window);
    int r = detect_dimension(H);

    std::vector<long long> L(H.size());
    L[0] = H[0];
    for (std::size_t n = 1; n < H.size(); ++n) L[n] = H[n] - H[n - 1];

    // numerator = (sum L_n z^n) * (1-z)^r, coefficients exact up to `window`
    IntPoly lser{std::vector<long long>(L)};
    IntPoly num = lser * IntPoly::one_minus_z_pow(r);
    int s = -1;
    for (int n = window; n >= 0; --n)
        if (num.coeff(n) != 0) {
            s = n;
            break;
        }
    if (s == window)
        throw CapError("window too small: h-polynomial support reaches the window edge");
    std::vector<long long> h(num.c.begin(),
                             num.c.begin() + std::min<std::size_t>(num.c.size(), s + 1));
    IntPoly hp{std::move(h)};
    if (hp.eval_at_one() <= 0)
        throw ComputationError("h(1) must be positive; inconsistent Hilbert data");
    return {r, hp};
}

HilbertData hilbert_data(const TruncModule& m, int window) {
    if (window < 0) window = default_window(m);
    HilbertData hd;
    hd.H = hilbert_function(m, window);
    auto [r, h] = h_polynomial(m, window);
    hd.r = r;
    hd.h = std::move(h);
    hd.L.resize(hd.H.size());
    hd.L[0] = hd.H[0];
    for (std::size_t n = 1; n < hd.H.size(); ++n) hd.L[n] = hd.H[n] - hd.H[n - 1];
    hd.e = hilbert_coefficients(hd.h, hd.r);
    hd.mu = hd.H[0];
    return hd;
}

}  // namespace gradmod
