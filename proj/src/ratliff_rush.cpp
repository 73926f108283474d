#include "gradmod/ratliff_rush.hpp"

#include "gradmod/errors.hpp"

namespace gradmod {

RRFiltration rr_filtration_full(const TruncModule& m, int window) {
    const int cap = m.cap();
    if (window < 0) window = cap - 4;
    if (window < 2) throw CapError("rr_filtration: cap too small for any window");

    auto [r, h] = h_polynomial(m);
    if (r < 1) throw ValidationError("rr_filtration: module must have positive dimension");

    RRFiltration out;
    for (int n = 1; n <= window; ++n) {
        // increasing union of (F_{n+i} : m^i); one agreement below the guard
        // declares stabilization
        Subspace prev = m.power(n);
        int stab = -1;
        for (int i = 1; n + i + 2 < cap; ++i) {
            Subspace cur = colon_ideal_power(m, m.power(n + i), i);
            if (!cur.contains(prev, m.field()))
                throw ComputationError("Ratliff-Rush chain is not increasing");
            if (cur == prev) {
                stab = i - 1;
                break;
            }
            prev = std::move(cur);
        }
        if (stab < 0)
            throw CapError("rr_filtration: no stabilization below the cap guard at n = " +
                           std::to_string(n));
        out.report.stabilized_at.push_back(stab);
        out.report.rr_dims.push_back(static_cast<long long>(prev.dim()));
        out.tilde.push_back(std::move(prev));
    }

    // r_M(z): coefficient n-1 is ell(rr(m^n M)/m^n M) for n >= 1
    std::vector<long long> rc(window);
    for (int n = 1; n <= window; ++n)
        rc[n - 1] = out.report.rr_dims[n - 1] - static_cast<long long>(m.power(n).dim());
    if (window >= 2 && rc[window - 1] != 0)
        throw CapError("rr_filtration: r_M support reaches the window edge");
    out.report.r_poly = IntPoly{std::move(rc)};

    out.report.h_tilde = h - IntPoly::one_minus_z_pow(r + 1) * out.report.r_poly;

    // cross-check the identity against the RR lengths inside the window:
    // the series h_tilde/(1-z)^r must reproduce ell(rr^n/rr^{n+1})
    std::vector<long long> Lt(window, 0);
    for (int n = 0; n < window; ++n) {
        long long acc = 0;
        for (int k = 0; k <= out.report.h_tilde.degree() && k <= n; ++k)
            acc += out.report.h_tilde.coeff(k) * binomial(n - k + r - 1, r - 1);
        Lt[n] = acc;
    }
    for (int n = 0; n + 1 < window; ++n) {
        long long lhs = (n == 0 ? static_cast<long long>(m.ambient()) -
                                      static_cast<long long>(out.report.rr_dims[0])
                                : out.report.rr_dims[n - 1] - out.report.rr_dims[n]);
        if (lhs != Lt[n])
            throw CapError("rr_filtration: identity h = h~ + (1-z)^{r+1} r_M failed at n = " +
                           std::to_string(n));
    }

    // the RR family is a filtration: m * rr^n inside rr^{n+1}
    std::vector<TruncPoly> vars;
    for (int i = 0; i < m.spec()->v(); ++i) vars.push_back(TruncPoly::variable(m.spec(), i));
    for (int n = 1; n < window; ++n) {
        Subspace prod = m.multiple_span(vars, out.tilde[n - 1]);
        if (!out.tilde[n].contains(prod, m.field()))
            throw ComputationError("Ratliff-Rush family is not a filtration");
    }
    return out;
}

RRReport rr_filtration(const TruncModule& m, int window) {
    return rr_filtration_full(m, window).report;
}

}  // namespace gradmod
