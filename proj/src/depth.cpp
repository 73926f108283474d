#include "gradmod/depth.hpp"

#include <algorithm>

#include "gradmod/errors.hpp"

namespace gradmod {

namespace {

bool all_zero(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// forms x_{c+1}..x_d of a chain, rewritten over the stage-c ring
std::vector<TruncPoly> tail_forms(const SuperficialChain& chain, int c,
                                  const RingSpecPtr& stage_spec) {
    std::vector<TruncPoly> out;
    for (std::size_t j = c; j < chain.witnesses.size(); ++j)
        out.push_back(lift_form(chain.witnesses[j].form, stage_spec));
    return out;
}

}  // namespace

DepthComputation depth_assoc_graded(const Presentation& pres, uint64_t seed, int max_trials) {
    if (!pres.square()) throw ValidationError("depth: presentation must be square");
    PresInvariants inv = presentation_invariants(pres);

    std::mt19937_64 rng(seed);
    const int d = pres.spec->v() - 1;

    std::string anomaly;
    for (int attempt = 0; attempt < 3; ++attempt) {
        DepthComputation dc;
        dc.chain = build_superficial_chain(pres, d, rng, max_trials);

        bool retry = false;
        for (int c = 0; c <= d; ++c) {
            auto mod = std::make_shared<TruncModule>(dc.chain.stage_pres[c]);
            HilbertData hd = hilbert_data(*mod);
            if (hd.r != d - c) {
                anomaly = "stage " + std::to_string(c) + " dimension " + std::to_string(hd.r) +
                          " != " + std::to_string(d - c);
                retry = true;
                break;
            }
            if (c == 0 && hd.r != d)
                throw ValidationError("module is not maximal Cohen-Macaulay: dim " +
                                      std::to_string(hd.r) + " != dim A");
            if (!dc.stage_hilbert.empty() &&
                (hd.e[0] != dc.stage_hilbert[0].e[0] || hd.mu != dc.stage_hilbert[0].mu)) {
                anomaly = "multiplicity or mu drifted along the chain at stage " +
                          std::to_string(c);
                retry = true;
                break;
            }
            dc.stages.push_back(std::move(mod));
            dc.stage_hilbert.push_back(std::move(hd));
        }
        if (retry) continue;

        long long e0 = dc.stage_hilbert[0].e[0];
        if (e0 < inv.eA_bound)
            throw ComputationError("e(M) = " + std::to_string(e0) +
                                   " below the bound mu(M) i(M) = " + std::to_string(inv.eA_bound));
        if (e0 == inv.eA_bound) {
            // boundary case forces h = mu (1 + z + ... + z^{i-1})
            std::vector<long long> expect(inv.iM, inv.mu);
            if (!(dc.stage_hilbert[0].h == IntPoly{std::move(expect)}))
                throw ComputationError("e(M) = mu i(M) but h is not mu(1+...+z^{i-1})");
        }

        DepthReport& rep = dc.report;
        rep.dim = d;
        rep.trials_total = dc.chain.trials_total;
        for (int c = 0; c <= d; ++c) rep.h_chain.push_back(dc.stage_hilbert[c].h);
        for (const auto& w : dc.chain.witnesses) rep.witness_forms.push_back(w.form.str());

        rep.depth = d;
        for (int c = 0; c < d; ++c)
            if (!(rep.h_chain[c] == rep.h_chain[c + 1])) {
                rep.depth = c;
                break;
            }

        if (d >= 1) {
            rep.b_first = dc.chain.witnesses[0].b;
            rep.method_agreement = all_zero(rep.b_first) == (rep.depth >= 1);
            if (!rep.method_agreement)
                throw CapError("depth criteria disagree: b-vector vs h-chain");
            // stages below the depth must satisfy Singh with b = 0 exactly
            for (int c = 0; c < rep.depth; ++c) {
                SinghReport sr = verify_singh(*dc.stages[c], dc.chain.witnesses[c].form);
                if (!sr.b_poly.is_zero() || !(sr.h_m == sr.h_n))
                    throw CapError("Singh re-derivation failed on a depth >= 1 stage");
            }
        }
        return dc;
    }
    throw ComputationError("depth: persistent chain anomalies (" + anomaly + ")");
}

DeltaReport delta_vv(const TruncModule& m, const std::vector<TruncPoly>& J_forms, int window) {
    if (window < 1 || window + 1 > m.cap())
        throw CapError("delta_vv: window outside the cap");
    for (const auto& f : J_forms)
        if (!f.is_linear_form()) throw ValidationError("delta_vv: J must consist of linear forms");

    DeltaReport rep;
    Subspace JM = m.multiple_span(J_forms, m.power(0));
    for (int n = 0; n < window; ++n) {
        Subspace num = subspace_intersect(m.power(n + 1), JM, m.field());
        Subspace den = m.multiple_span(J_forms, m.power(n));
        long long v = static_cast<long long>(num.dim()) - static_cast<long long>(den.dim());
        if (v < 0) throw ComputationError("delta summand negative: J m^n M not inside the cap");
        rep.per_n.push_back(v);
        rep.delta += v;
    }
    if (rep.per_n.back() != 0)
        throw CapError("delta_vv: support reaches the window edge");
    return rep;
}

GradedQuotientSeries graded_quotient_series(const TruncModule& m,
                                            const std::vector<TruncPoly>& forms) {
    if (m.cap() < 5) throw CapError("graded_quotient_series: cap too small");
    GradedQuotientSeries out;
    out.mu = m.length_upto(1);
    Subspace JM = m.multiple_span(forms, m.power(0));
    Subspace JmM = m.multiple_span(forms, m.power(1));
    Subspace Jm2M = m.multiple_span(forms, m.power(2));
    out.alpha = static_cast<long long>(m.power(1).dim()) -
                static_cast<long long>(subspace_sum(m.power(2), JM, m.field()).dim());
    out.beta = static_cast<long long>(m.power(2).dim()) -
               static_cast<long long>(subspace_sum(m.power(3), JmM, m.field()).dim());
    // reduction number <= 2 with respect to the witnessed sequence
    if (m.power(3).dim() != Jm2M.dim())
        throw ValidationError("graded_quotient_series: m^3 M != J m^2 M (reduction number > 2?)");
    if (!(out.beta <= out.alpha && out.alpha <= out.mu))
        throw ComputationError("graded quotient series violates beta <= alpha <= mu");
    return out;
}

ExactSeqReport verify_exact_sequences(const DepthComputation& dc, int window) {
    ExactSeqReport rep;
    const int d = dc.report.dim;

    // five-term sequence on the dimension-2 stage
    if (d >= 2) {
        int c = d - 2;
        const TruncModule& m = *dc.stages[c];
        const GF& gf = m.field();
        TruncPoly x = dc.chain.witnesses[c].form;
        TruncPoly y = lift_form(dc.chain.witnesses[c + 1].form, m.spec());
        int w = window < 0 ? m.cap() - 2 : std::min(window, m.cap() - 2);
        const TruncModule& mbar = *dc.stages[c + 1];
        TruncPoly ybar = dc.chain.witnesses[c + 1].form;
        for (int n = 1; n < w; ++n) {
            Subspace cx_n = colon_element(m, m.power(n), x);
            Subspace cy_n = colon_element(m, m.power(n), y);
            Subspace cJ_n = subspace_intersect(cx_n, cy_n, gf);
            Subspace cx_n1 = colon_element(m, m.power(n + 1), x);
            long long A = static_cast<long long>(cJ_n.dim()) - static_cast<long long>(m.power(n - 1).dim());
            long long B = static_cast<long long>(cx_n.dim()) - static_cast<long long>(m.power(n - 1).dim());
            long long C = static_cast<long long>(cx_n1.dim()) - static_cast<long long>(m.power(n).dim());
            long long D = static_cast<long long>(m.power(n + 1).dim()) -
                          static_cast<long long>(m.multiple_span({x, y}, m.power(n)).dim());
            long long E = static_cast<long long>(mbar.power(n + 1).dim()) -
                          static_cast<long long>(mbar.multiple_span({ybar}, mbar.power(n)).dim());
            long long alt = A - B + C - D + E;
            rep.five_term_alternating.push_back(alt);
            if (alt != 0) {
                rep.ok = false;
                throw CapError("five-term length sum nonzero at n = " + std::to_string(n));
            }
        }
    }

    // additivity ell(m^2 M/J m M) = b_1 + ell(m^2 N/Jbar m N) on every stage
    for (int c = 0; c < d; ++c) {
        const TruncModule& m = *dc.stages[c];
        const TruncModule& nmod = *dc.stages[c + 1];
        TruncPoly x = dc.chain.witnesses[c].form;
        std::vector<TruncPoly> J = tail_forms(dc.chain, c, m.spec());
        long long lhs = static_cast<long long>(m.power(2).dim()) -
                        static_cast<long long>(m.multiple_span(J, m.power(1)).dim());
        long long b1 = static_cast<long long>(colon_element(m, m.power(2), x).dim()) -
                       static_cast<long long>(m.power(1).dim());
        std::vector<TruncPoly> Jbar = tail_forms(dc.chain, c + 1, nmod.spec());
        long long quot = Jbar.empty()
                             ? static_cast<long long>(nmod.power(2).dim()) -
                                   static_cast<long long>(nmod.relations().dim())
                             : static_cast<long long>(nmod.power(2).dim()) -
                                   static_cast<long long>(nmod.multiple_span(Jbar, nmod.power(1)).dim());
        rep.additivity_lhs.push_back(lhs);
        rep.additivity_rhs.push_back(b1 + quot);
        if (lhs != b1 + quot) {
            rep.ok = false;
            throw CapError("reduction additivity failed at stage " + std::to_string(c));
        }
    }

    // Ratliff-Rush sequences: left-exactness length bounds
    for (int c = 0; c < d; ++c) {
        const TruncModule& m = *dc.stages[c];
        int dim_c = d - c;
        RRFiltration rr = rr_filtration_full(m);
        int w = static_cast<int>(rr.report.rr_dims.size());
        std::optional<RRFiltration> rr_next;
        if (dim_c >= 2) rr_next = rr_filtration_full(*dc.stages[c + 1]);
        TruncPoly x = dc.chain.witnesses[c].form;
        std::vector<long long> b = b_vector(m, x, w);
        auto rtilde = [&](int n) {
            return rr.report.rr_dims[n - 1] - static_cast<long long>(m.power(n).dim());
        };
        for (int n = 1; n < w; ++n) {
            long long rt_n = rtilde(n), rt_n1 = rtilde(n + 1);
            if (b[n] > rt_n) {
                rep.ok = false;
                throw CapError("RR bound b_n <= ell(rr^n/m^n) failed");
            }
            if (rt_n - b[n] > rt_n1) {
                rep.ok = false;
                throw CapError("RR middle-exactness bound failed");
            }
            if (rr_next) {
                long long rtN = rr_next->report.rr_dims[n] -
                                static_cast<long long>(dc.stages[c + 1]->power(n + 1).dim());
                if (rt_n1 - (rt_n - b[n]) > rtN) {
                    rep.ok = false;
                    throw CapError("RR four-term bound failed");
                }
            }
            ++rep.rr_bounds_checked;
        }
    }
    return rep;
}

}  // namespace gradmod
