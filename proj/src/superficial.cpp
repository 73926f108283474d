#include "gradmod/superficial.hpp"

#include <algorithm>

#include "gradmod/errors.hpp"

namespace gradmod {

std::vector<long long> b_vector(const TruncModule& m, const TruncPoly& x, int window) {
    if (!x.is_linear_form()) throw ValidationError("b_vector: x must be a linear form");
    if (window < 0 || window + 1 > m.cap())
        throw CapError("b_vector window too large for cap " + std::to_string(m.cap()));
    std::vector<long long> b(window + 1);
    for (int n = 0; n <= window; ++n) {
        Subspace colon = colon_element(m, m.power(n + 1), x);
        b[n] = static_cast<long long>(colon.dim()) - static_cast<long long>(m.power(n).dim());
        if (b[n] < 0) throw ComputationError("negative b-vector entry; colon inconsistency");
    }
    return b;
}

namespace {

int b_window(const TruncModule& m, int deg_h) {
    return std::min(deg_h + 3, m.cap() - 2);
}

IntPoly to_poly_checked(const std::vector<long long>& b, const char* what) {
    // finite support certified by two zero tail entries
    std::size_t n = b.size();
    if (n < 2 || b[n - 1] != 0 || b[n - 2] != 0)
        throw CapError(std::string(what) + ": support reaches the window edge");
    return IntPoly{std::vector<long long>(b)};
}

}  // namespace

RhoVector rho_vector(const TruncModule& m, const TruncPoly& x, int window) {
    if (!x.is_linear_form()) throw ValidationError("rho_vector: x must be a linear form");
    auto [r, h] = h_polynomial(m);
    if (r != 1) throw ValidationError("rho_vector: module must have dimension 1");
    if (window < 0) window = m.cap() - 2;

    RhoVector rv;
    rv.rho.resize(window + 1);
    for (int n = 0; n <= window; ++n) {
        Subspace xFn = m.multiple_span({x}, m.power(n));
        rv.rho[n] =
            static_cast<long long>(m.power(n + 1).dim()) - static_cast<long long>(xFn.dim());
        if (rv.rho[n] < 0)
            throw ComputationError("negative rho entry; x m^n M not inside m^{n+1} M");
    }

    for (int n = h.degree(); n <= window; ++n)
        if (rv.rho[n] != 0) throw ComputationError("rho_n must vanish for n >= deg h");

    // h(z) = mu + sum (rho_{i-1} - rho_i) z^i
    std::vector<long long> rec{static_cast<long long>(m.length_upto(1))};
    for (int i = 1; i <= window; ++i) rec.push_back(rv.rho[i - 1] - rv.rho[i]);
    if (!(IntPoly{std::move(rec)} == h))
        throw ComputationError("rho reconstruction disagrees with the h-polynomial");
    return rv;
}

SinghReport verify_singh(const TruncModule& m, const TruncPoly& x) {
    auto [r, h_m] = h_polynomial(m);
    if (r < 1) throw ValidationError("verify_singh: module must have positive dimension");

    TruncModule n_mod(quotient_by_form(m.pres(), x));
    auto [rn, h_n] = h_polynomial(n_mod);
    if (rn != r - 1)
        throw CapError("verify_singh: quotient dimension detection disagrees");

    std::vector<long long> b = b_vector(m, x, b_window(m, h_m.degree()));
    SinghReport rep;
    rep.h_m = h_m;
    rep.h_n = h_n;
    rep.b_poly = to_poly_checked(b, "b-vector");
    rep.lhs = h_m;
    rep.rhs = h_n - IntPoly::one_minus_z_pow(r) * rep.b_poly;
    rep.ok = rep.lhs == rep.rhs;
    if (!rep.ok)
        throw CapError("Singh's equality failed: " + rep.lhs.str() + " vs " + rep.rhs.str());
    return rep;
}

TruncPoly random_linear_form(const RingSpecPtr& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, spec->p - 1);
    for (;;) {
        TruncPoly form(spec);
        for (int i = 0; i < spec->v(); ++i) {
            uint32_t c = dist(rng);
            if (c) form = form + TruncPoly::variable(spec, i).scaled(c);
        }
        if (!form.is_zero()) return form;
    }
}

TruncPoly lift_form(const TruncPoly& form, const RingSpecPtr& original) {
    TruncPoly out(original);
    const auto& vars = form.spec()->vars;
    for (int i = 0; i < form.spec()->v(); ++i) {
        uint32_t c = form.coeff_of_var(i);
        if (c == 0) continue;
        auto it = std::find(original->vars.begin(), original->vars.end(), vars[i]);
        if (it == original->vars.end())
            throw ValidationError("lift_form: stage variable missing from the original ring");
        int idx = static_cast<int>(it - original->vars.begin());
        out = out + TruncPoly::variable(original, idx).scaled(c);
    }
    return out;
}

CandidateCheck check_phi_superficial(const TruncModule& m, const TruncPoly& x) {
    CandidateCheck res;
    res.witness.form = x;
    const Presentation& pres = m.pres();

    Presentation quot;
    try {
        quot = quotient_by_form(pres, x);
    } catch (const ValidationError&) {
        return res;  // substitution created a unit entry: not generic enough
    }

    // entry orders (including f) must be preserved
    res.witness.entry_orders_preserved = quot.f.order() == pres.f.order();
    for (int i = 0; i < pres.rows() && res.witness.entry_orders_preserved; ++i)
        for (int j = 0; j < pres.cols(); ++j) {
            if (quot.phi[i][j].order() != pres.phi[i][j].order()) {
                res.witness.entry_orders_preserved = false;
                break;
            }
        }
    if (!res.witness.entry_orders_preserved) return res;

    if (pres.square()) {
        res.witness.det_order_preserved =
            presentation_det(quot).order() == presentation_det(pres).order();
        if (!res.witness.det_order_preserved) return res;
    } else {
        res.witness.det_order_preserved = true;
    }

    // colon stabilization on M within the check window
    int deg_h;
    try {
        deg_h = h_polynomial(m).second.degree();
    } catch (const CapError&) {
        throw;  // window problems bubble up to the guarded driver
    }
    int wb = b_window(m, deg_h);
    std::vector<long long> b = b_vector(m, x, wb);
    if (b[0] != 0) throw ComputationError("b_0 must vanish");
    res.witness.b = b;
    bool tail_ok = wb >= 1 && b[wb] == 0 && b[wb - 1] == 0;

    // colon stabilization on A via the 1x1 presentation (f); every
    // superficial element of A has an identically zero b-vector here
    Presentation presA = make_presentation(
        pres.spec, {{pres.f}}, pres.f, pres.label + ":A");
    TruncModule modA(presA);
    std::vector<long long> bA = b_vector(modA, x, b_window(modA, pres.f.order() - 1));
    bool a_ok = std::all_of(bA.begin(), bA.end(), [](long long v) { return v == 0; });

    res.witness.colon_stabilizes = tail_ok && a_ok;
    res.ok = res.witness.colon_stabilizes;
    return res;
}

SuperficialChain build_superficial_chain(const Presentation& pres, int count,
                                         std::mt19937_64& rng, int max_trials) {
    if (count > pres.spec->v() - 1)
        throw ValidationError("superficial sequence longer than dim A");
    SuperficialChain chain;
    chain.stage_pres.push_back(pres);
    for (int s = 0; s < count; ++s) {
        const Presentation& cur = chain.stage_pres.back();
        TruncModule mod(cur);
        bool found = false;
        for (int trial = 1; trial <= max_trials; ++trial) {
            TruncPoly x = random_linear_form(cur.spec, rng);
            CandidateCheck check = check_phi_superficial(mod, x);
            ++chain.trials_total;
            if (check.ok) {
                check.witness.trials_used = trial;
                chain.witnesses.push_back(std::move(check.witness));
                chain.stage_pres.push_back(quotient_by_form(cur, x));
                found = true;
                break;
            }
        }
        if (!found)
            throw ComputationError("superficial search exhausted " + std::to_string(max_trials) +
                                   " trials at stage " + std::to_string(s));
    }
    return chain;
}

std::vector<SuperficialWitness> find_phi_superficial(const Presentation& pres, int count,
                                                     uint64_t seed, int max_trials) {
    std::mt19937_64 rng(seed);
    return build_superficial_chain(pres, count, rng, max_trials).witnesses;
}

}  // namespace gradmod
