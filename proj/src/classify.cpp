#include "gradmod/classify.hpp"

#include <algorithm>

#include "gradmod/errors.hpp"

namespace gradmod {

namespace {

// inverse of a unit u in k[y]/(y^cap), coefficient by coefficient
TruncPoly series_inverse(const TruncPoly& u) {
    const RingSpecPtr& spec = u.spec();
    GF gf(spec->p);
    const int cap = spec->cap;
    std::vector<uint32_t> a(cap, 0);
    for (const auto& [m, c] : u.terms()) a[m.degree()] = c;
    if (a[0] == 0) throw ComputationError("series_inverse: not a unit");
    std::vector<uint32_t> b(cap, 0);
    uint32_t inv0 = gf.inv(a[0]);
    b[0] = inv0;
    for (int n = 1; n < cap; ++n) {
        uint32_t acc = 0;
        for (int k = 1; k <= n; ++k) acc = gf.add(acc, gf.mul(a[k], b[n - k]));
        b[n] = gf.mul(gf.neg(acc), inv0);
    }
    TruncPoly out(spec);
    for (int n = 0; n < cap; ++n)
        if (b[n]) {
            Monomial m{std::vector<uint16_t>(1, static_cast<uint16_t>(n))};
            out.add_term(m, b[n]);
        }
    return out;
}

// divide q (of order >= a) by y^a exactly
TruncPoly shift_down(const TruncPoly& q, int a) {
    TruncPoly out(q.spec());
    for (const auto& [m, c] : q.terms()) {
        Monomial s{std::vector<uint16_t>(1, static_cast<uint16_t>(m.degree() - a))};
        out.add_term(s, c);
    }
    return out;
}

}  // namespace

std::vector<int> smith_orders(const Presentation& dim0_pres) {
    if (dim0_pres.spec->v() != 1)
        throw ValidationError("smith_orders: expected a one-variable presentation");
    if (!dim0_pres.square()) throw ValidationError("smith_orders: matrix must be square");
    const RingSpecPtr& spec = dim0_pres.spec;
    const int t = dim0_pres.rows();
    const int cap = spec->cap;
    auto a = dim0_pres.phi;

    std::vector<int> orders;
    for (int k = 0; k < t; ++k) {
        // pick the entry of minimal order in the remaining block
        int best_i = -1, best_j = -1, best = TruncPoly::kOrderInf;
        for (int i = k; i < t; ++i)
            for (int j = k; j < t; ++j)
                if (!a[i][j].is_zero() && a[i][j].order() < best) {
                    best = a[i][j].order();
                    best_i = i;
                    best_j = j;
                }
        if (best_i < 0 || best >= cap)
            throw ComputationError(
                "artinian reduction degenerate: a diagonal order reached the cap");
        std::swap(a[k], a[best_i]);
        for (int i = 0; i < t; ++i) std::swap(a[i][k], a[i][best_j]);

        // normalize the pivot to y^best
        TruncPoly unit = shift_down(a[k][k], best);
        TruncPoly uinv = series_inverse(unit);
        for (int j = k; j < t; ++j) a[k][j] = a[k][j] * uinv;

        // clear the column, then the row; quotients are exact since the
        // pivot has minimal order
        for (int i = k + 1; i < t; ++i) {
            if (a[i][k].is_zero()) continue;
            TruncPoly q = shift_down(a[i][k], best);
            for (int j = k; j < t; ++j) a[i][j] = a[i][j] - q * a[k][j];
        }
        for (int j = k + 1; j < t; ++j) {
            if (a[k][j].is_zero()) continue;
            TruncPoly q = shift_down(a[k][j], best);
            for (int i = k; i < t; ++i) a[i][j] = a[i][j] - q * a[i][k];
        }
        orders.push_back(best);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<int> artinian_decompose(const DepthComputation& dc) {
    const Presentation& bottom = dc.chain.stage_pres.back();
    if (bottom.spec->v() != 1)
        throw ValidationError("artinian_decompose: chain does not end in dimension zero");
    std::vector<int> orders = smith_orders(bottom);

    // cross-check: sum of the orders equals the artinian length
    long long sum = 0;
    for (int a : orders) sum += a;
    const HilbertData& hd = dc.stage_hilbert.back();
    long long len = 0;
    for (long long l : hd.L) len += l;
    if (sum != len)
        throw ComputationError("artinian decomposition length " + std::to_string(sum) +
                               " disagrees with the Hilbert length " + std::to_string(len));
    return orders;
}

FreeSplit split_free_summand(const Presentation& pres) {
    FreeSplit out;
    if (!pres.square()) return out;
    const GF gf(pres.spec->p);
    auto phi = pres.phi;
    std::vector<bool> row_gone(pres.rows(), false), col_gone(pres.cols(), false);

    auto is_unit_multiple_of_f = [&](const TruncPoly& q) {
        if (q.is_zero() || pres.f.is_zero()) return false;
        if (q.order() != pres.f.order()) return false;
        uint32_t qc = q.terms().begin()->second;
        uint32_t fc = pres.f.terms().begin()->second;
        return q == pres.f.scaled(gf.mul(qc, gf.inv(fc)));
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < pres.rows() && !changed; ++i) {
            if (row_gone[i]) continue;
            for (int j = 0; j < pres.cols() && !changed; ++j) {
                if (col_gone[j] || !is_unit_multiple_of_f(phi[i][j])) continue;
                bool lone = true;
                for (int jj = 0; jj < pres.cols() && lone; ++jj)
                    if (jj != j && !col_gone[jj] && !phi[i][jj].is_zero()) lone = false;
                for (int ii = 0; ii < pres.rows() && lone; ++ii)
                    if (ii != i && !row_gone[ii] && !phi[ii][j].is_zero()) lone = false;
                if (!lone) continue;
                row_gone[i] = col_gone[j] = true;
                ++out.free_rank;
                changed = true;
            }
        }
    }

    if (out.free_rank == 0 || out.free_rank == pres.rows()) return out;

    Presentation rest;
    rest.spec = pres.spec;
    rest.f = pres.f;
    rest.label = pres.label;
    for (int i = 0; i < pres.rows(); ++i) {
        if (row_gone[i]) continue;
        std::vector<TruncPoly> row;
        for (int j = 0; j < pres.cols(); ++j)
            if (!col_gone[j]) row.push_back(phi[i][j]);
        rest.phi.push_back(std::move(row));
    }
    out.complement = std::move(rest);
    return out;
}

const std::vector<CaseRow>& mu4_e3_case_table() {
    static const std::vector<CaseRow> table = [] {
        std::vector<CaseRow> t;
        t.push_back({4, IntPoly{{4}}, 0, "e4"});
        t.push_back({5, IntPoly{{4, 1}}, 0, "e5.a"});
        t.push_back({5, IntPoly{{4, 0, 1}}, 1, "e5.b"});
        t.push_back({6, IntPoly{{4, 2}}, 0, "e6.a"});
        t.push_back({6, IntPoly{{4, 1, 1}}, 1, "e6.b"});
        t.push_back({6, IntPoly{{4, 0, 2}}, 1, "e6.b'"});
        t.push_back({6, IntPoly{{4, 0, 3, -1}}, 2, "e6.c"});
        t.push_back({7, IntPoly{{4, 3}}, 0, "e7.a"});
        t.push_back({7, IntPoly{{4, 2, 1}}, 1, "e7.b"});
        t.push_back({7, IntPoly{{4, 1, 3, -1}}, 2, "e7.c"});
        // 3 + 4z + (1-z)^4 expanded
        t.push_back({7, IntPoly{{4, 0, 6, -4, 1}}, 3, "e7.d"});
        t.push_back({8, IntPoly{{4, 4}}, 0, "e8"});
        return t;
    }();
    return table;
}

ClassificationRecord classify_from_chain(const DepthComputation& dc,
                                         const std::vector<int>& a_tuple) {
    const Presentation& pres = dc.chain.stage_pres.front();
    if (pres.rows() != 4)
        throw ValidationError("classification table applies to mu(M) = 4");
    if (pres.f.order() != 3)
        throw ValidationError("classification table applies to e(A) = 3 hypersurfaces");
    for (int a : a_tuple)
        if (a > 2)
            throw ValidationError(
                "artinian invariant > 2: free summand present or invalid input");

    ClassificationRecord rec;
    rec.a_tuple = a_tuple;
    rec.dim = dc.report.dim;
    rec.depth = dc.report.depth;
    rec.h = dc.stage_hilbert[0].h;
    rec.eM = dc.stage_hilbert[0].e[0];

    long long asum = 0;
    for (int a : a_tuple) asum += a;
    if (asum != rec.eM)
        throw ComputationError("sum of the a-tuple does not equal e(M)");

    const CaseRow* match = nullptr;
    for (const CaseRow& row : mu4_e3_case_table())
        if (row.e == rec.eM && row.h == rec.h) {
            match = &row;
            break;
        }
    if (!match)
        throw ComputationError("no classification row matches e = " + std::to_string(rec.eM) +
                               ", h = " + rec.h.str());
    if (rec.depth != rec.dim - match->depth_drop)
        throw ComputationError("depth " + std::to_string(rec.depth) +
                               " does not match the classification row " + match->case_id +
                               " (expected " + std::to_string(rec.dim - match->depth_drop) + ")");
    rec.case_id = match->case_id;
    rec.theorem_ok = rec.depth >= rec.dim - 3;
    if (!rec.theorem_ok)
        throw ComputationError("depth bound depth >= dim - 3 violated");
    return rec;
}

ClassificationRecord classify_mu4_e3(const Presentation& pres, uint64_t seed) {
    FreeSplit split = split_free_summand(pres);
    if (split.free_rank > 0)
        throw ValidationError("module has a free summand; the mu = 4 table does not apply");
    DepthComputation dc = depth_assoc_graded(pres, seed);
    return classify_from_chain(dc, artinian_decompose(dc));
}

}  // namespace gradmod
