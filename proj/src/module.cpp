#include "gradmod/module.hpp"

#include <algorithm>

#include "gradmod/errors.hpp"

namespace gradmod {

Presentation make_presentation(RingSpecPtr spec, std::vector<std::vector<TruncPoly>> phi,
                               TruncPoly f, std::string label) {
    Presentation p;
    p.spec = std::move(spec);
    p.phi = std::move(phi);
    p.f = std::move(f);
    p.label = std::move(label);
    if (p.phi.empty()) throw ValidationError("presentation matrix is empty");
    const std::size_t cols = p.phi[0].size();
    for (const auto& row : p.phi)
        if (row.size() != cols) throw ValidationError("presentation matrix is ragged");
    return p;
}

Presentation Presentation::retruncated(int cap) const {
    RingSpecPtr ns = make_ring_spec(spec->vars, spec->p, cap);
    Presentation out;
    out.spec = ns;
    out.f = f.retruncated(ns);
    out.label = label;
    out.phi.resize(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (const auto& q : phi[i]) out.phi[i].push_back(q.retruncated(ns));
    return out;
}

void validate_presentation(const Presentation& pres) {
    if (pres.f.is_zero() || pres.f.order() < 1)
        throw ValidationError("hypersurface element must be a nonunit of positive order");
    for (int j = 0; j < pres.cols(); ++j) {
        bool nonzero = false;
        for (int i = 0; i < pres.rows(); ++i) {
            const TruncPoly& q = pres.phi[i][j];
            if (!q.is_zero()) nonzero = true;
            if (!q.is_zero() && q.order() == 0)
                throw ValidationError("presentation is not minimal: unit entry at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (!nonzero)
            throw ValidationError("presentation has a zero column (" + std::to_string(j) + ")");
    }
}

TruncPoly presentation_det(const Presentation& pres) {
    if (!pres.square()) throw ValidationError("determinant requires a square presentation");
    const int t = pres.rows();
    // entries are honest polynomials of degree < cap, so a cap of
    // t*(cap-1)+1 makes the expanded determinant exact
    int det_cap = t * (pres.spec->cap - 1) + 1;
    RingSpecPtr big = make_ring_spec(pres.spec->vars, pres.spec->p, det_cap);
    std::vector<std::vector<TruncPoly>> a(t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) a[i].push_back(pres.phi[i][j].retruncated(big));

    // cofactor expansion along the first row of the remaining minor
    std::vector<int> cols(t);
    for (int j = 0; j < t; ++j) cols[j] = j;
    struct Rec {
        const std::vector<std::vector<TruncPoly>>& a;
        RingSpecPtr big;
        TruncPoly run(int row, std::vector<int>& cs) {
            if (cs.size() == 1) return a[row][cs[0]];
            TruncPoly acc = TruncPoly::zero(big);
            for (std::size_t k = 0; k < cs.size(); ++k) {
                const TruncPoly& e = a[row][cs[k]];
                if (e.is_zero()) continue;
                int col = cs[k];
                cs.erase(cs.begin() + k);
                TruncPoly minor = run(row + 1, cs);
                cs.insert(cs.begin() + k, col);
                TruncPoly term = e * minor;
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    } rec{a, big};
    return rec.run(0, cols);
}

PresInvariants presentation_invariants(const Presentation& pres) {
    validate_presentation(pres);
    if (!pres.square())
        throw ValidationError("presentation invariants are defined for square presentations");
    PresInvariants inv;
    inv.mu = pres.rows();
    inv.iM = TruncPoly::kOrderInf;
    for (const auto& row : pres.phi)
        for (const auto& q : row)
            if (!q.is_zero()) inv.iM = std::min(inv.iM, q.order());
    TruncPoly det = presentation_det(pres);
    if (det.is_zero())
        throw ComputationError("cap too small for det: determinant vanished at the raised cap");
    inv.det_order = det.order();
    inv.eA_bound = static_cast<long long>(inv.mu) * inv.iM;
    inv.order_f = pres.f.order();
    return inv;
}

// ---------------------------------------------------------------------------

TruncModule::TruncModule(Presentation pres, int cap) : pres_(std::move(pres)), gf_(pres_.spec->p) {
    if (cap >= 0 && cap != pres_.spec->cap) {
        if (cap > pres_.spec->cap)
            throw ValidationError("build_module: cap exceeds the presentation cap");
        pres_ = pres_.retruncated(cap);
    }
    build();
}

void TruncModule::build() {
    validate_presentation(pres_);
    table_ = std::make_shared<const MonomialTable>(pres_.spec);
    t_ = pres_.rows();
    const int N = table_->size();
    ambient_ = static_cast<std::size_t>(N) * t_;
    const int cap = pres_.spec->cap;

    // relation generators: x^a * (column j), truncated
    std::vector<Row> gens;
    gens.reserve(static_cast<std::size_t>(N) * pres_.cols());
    for (int j = 0; j < pres_.cols(); ++j) {
        // cache the column as (row index, monomial index, coeff)
        std::vector<std::tuple<int, int, uint32_t>> col;
        int col_order = TruncPoly::kOrderInf;
        for (int i = 0; i < t_; ++i) {
            const TruncPoly& q = pres_.phi[i][j];
            col_order = std::min(col_order, q.order());
            for (const auto& [m, c] : q.terms()) col.emplace_back(i, table_->index_of(m), c);
        }
        for (int a = 0; a < N; ++a) {
            if (table_->degree_of(a) + col_order >= cap) break;  // all multiples vanish
            Row v(ambient_, 0);
            bool nonzero = false;
            for (const auto& [i, mi, c] : col) {
                int prod = table_->mul(a, table_->mono(mi));
                if (prod < 0) continue;
                v[coord(prod, i)] = gf_.add(v[coord(prod, i)], c);
                nonzero = true;
            }
            if (nonzero) gens.push_back(std::move(v));
        }
    }
    relations_ = echelonize(gens, ambient_, gf_);
    live_ = relations_.copivots();

    // f must annihilate M: f * e_i lies in the relation span
    for (int i = 0; i < t_; ++i) {
        Row v(ambient_, 0);
        for (const auto& [m, c] : pres_.f.terms()) {
            int idx = table_->index_of(m);
            if (idx >= 0) v[coord(idx, i)] = c;
        }
        if (!relations_.contains(v, gf_))
            throw ValidationError("f does not annihilate coker(phi): f*e_" + std::to_string(i) +
                                  " is not a relation");
    }

    // filtration: F_n = relations + unit vectors in degrees >= n.
    // Unit rows are passed first so they become instant pivots.
    filt_.resize(cap + 1);
    filt_[cap] = relations_;
    for (int n = cap - 1; n >= 0; --n) {
        std::vector<Row> rows;
        std::size_t lo = coord(table_->deg_start(n), 0);
        rows.reserve(ambient_ - lo + relations_.dim());
        for (std::size_t k = lo; k < ambient_; ++k) {
            Row u(ambient_, 0);
            u[k] = 1;
            rows.push_back(std::move(u));
        }
        for (const Row& r : relations_.basis()) rows.push_back(r);
        filt_[n] = echelonize(rows, ambient_, gf_);
    }
}

const Subspace& TruncModule::power(int n) const {
    if (n < 0 || n > cap()) throw ValidationError("power_submodule: index outside [0, cap]");
    return filt_[n];
}

long long TruncModule::length_upto(int n) const {
    return static_cast<long long>(ambient_) - static_cast<long long>(power(n).dim());
}

void TruncModule::mul_coord(const TruncPoly& q, std::size_t k, SparseVec& out) const {
    const int mono = coord_mono(k);
    const int gen = coord_gen(k);
    for (const auto& [m, c] : q.terms()) {
        int prod = table_->mul(mono, m);
        if (prod < 0) continue;
        out.emplace_back(coord(prod, gen), c);
    }
}

Row TruncModule::mul_vec(const TruncPoly& q, const Row& v) const {
    std::vector<uint64_t> buf(ambient_, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const int mono = coord_mono(k);
        const int gen = coord_gen(k);
        for (const auto& [m, c] : q.terms()) {
            int prod = table_->mul(mono, m);
            if (prod < 0) continue;
            buf[coord(prod, gen)] += static_cast<uint64_t>(c) * v[k];
        }
    }
    Row out(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) out[i] = static_cast<uint32_t>(buf[i] % gf_.p());
    return out;
}

Subspace TruncModule::multiple_span(const std::vector<TruncPoly>& mults,
                                    const Subspace& base) const {
    std::vector<Row> rows;
    rows.reserve(mults.size() * base.dim() + relations_.dim());
    for (const TruncPoly& q : mults)
        for (const Row& w : base.basis()) rows.push_back(mul_vec(q, w));
    for (const Row& r : relations_.basis()) rows.push_back(r);
    return echelonize(rows, ambient_, gf_);
}

// ---------------------------------------------------------------------------
// colon modules
//
// V = relations (+) span{e_k : k live}, and every target here contains the
// relations, so { v : x v in target } = relations (+) { l in live-span : x l
// in target }. The live part is a kernel computation over the live
// coordinates only.

namespace {

Subspace colon_from_live_kernel(const TruncModule& m, const Subspace& live_kernel) {
    const auto& live = m.live_coords();
    std::vector<Row> rows;
    rows.reserve(live_kernel.dim() + m.relations().dim());
    for (const Row& kr : live_kernel.basis()) {
        Row v(m.ambient(), 0);
        for (std::size_t i = 0; i < kr.size(); ++i) v[live[i]] = kr[i];
        rows.push_back(std::move(v));
    }
    for (const Row& r : m.relations().basis()) rows.push_back(r);
    return echelonize(rows, m.ambient(), m.field());
}

void check_colon_target(const TruncModule& m, const Subspace& target) {
    if (target.ambient() != m.ambient())
        throw ValidationError("colon: target ambient mismatch");
    if (target.dim() < m.relations().dim())
        throw ValidationError("colon: target must contain the relation subspace");
}

}  // namespace

Subspace colon_element(const TruncModule& m, const Subspace& target, const TruncPoly& x) {
    check_colon_target(m, target);
    if (!x.is_linear_form()) throw ValidationError("colon_element: x must be a linear form");
    std::vector<int> copiv = target.copivots();
    if (copiv.empty()) return Subspace::full(m.ambient());

    const auto& live = m.live_coords();
    const GF& gf = m.field();
    WorkMat mat(live.size(), copiv.size() + live.size());
    SparseVec img;
    for (std::size_t k = 0; k < live.size(); ++k) {
        img.clear();
        m.mul_coord(x, static_cast<std::size_t>(live[k]), img);
        Row res = target.residual_compact(img, gf, copiv);
        for (std::size_t j = 0; j < res.size(); ++j) mat.set(k, j, res[j]);
        mat.set(k, copiv.size() + k, 1);
    }
    Subspace live_kernel = augmented_kernel(mat, copiv.size(), live.size(), gf);
    return colon_from_live_kernel(m, live_kernel);
}

Subspace colon_maximal_ideal(const TruncModule& m, const Subspace& target) {
    check_colon_target(m, target);
    std::vector<int> copiv = target.copivots();
    if (copiv.empty()) return Subspace::full(m.ambient());

    const auto& live = m.live_coords();
    const GF& gf = m.field();
    const int nv = m.spec()->v();
    const std::size_t width = copiv.size() * nv;
    WorkMat mat(live.size(), width + live.size());
    SparseVec img;
    for (std::size_t k = 0; k < live.size(); ++k) {
        for (int var = 0; var < nv; ++var) {
            img.clear();
            m.mul_coord(TruncPoly::variable(m.spec(), var), static_cast<std::size_t>(live[k]), img);
            Row res = target.residual_compact(img, gf, copiv);
            for (std::size_t j = 0; j < res.size(); ++j)
                mat.set(k, var * copiv.size() + j, res[j]);
        }
        mat.set(k, width + k, 1);
    }
    Subspace live_kernel = augmented_kernel(mat, width, live.size(), gf);
    return colon_from_live_kernel(m, live_kernel);
}

Subspace colon_ideal_power(const TruncModule& m, const Subspace& target, int i) {
    if (i < 0) throw ValidationError("colon_ideal_power: negative power");
    if (i >= m.cap())
        throw CapError("cap too small: colon power " + std::to_string(i) + " at cap " +
                       std::to_string(m.cap()));
    check_colon_target(m, target);
    // (T : m^i) = ((T : m) : m^{i-1})
    Subspace cur = target;
    for (int step = 0; step < i; ++step) cur = colon_maximal_ideal(m, cur);
    return cur;
}

Presentation quotient_by_form(const Presentation& pres, const TruncPoly& form) {
    LinearElimination el = eliminate_linear_form(pres.spec, form);
    Presentation out;
    out.spec = el.to;
    out.label = pres.label;
    out.f = el.apply(pres.f);
    out.phi.resize(pres.rows());
    for (int i = 0; i < pres.rows(); ++i)
        for (int j = 0; j < pres.cols(); ++j) out.phi[i].push_back(el.apply(pres.phi[i][j]));
    // a unit entry after substitution means the form was not generic enough
    validate_presentation(out);
    return out;
}

}  // namespace gradmod
