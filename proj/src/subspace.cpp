#include "gradmod/subspace.hpp"

#include <algorithm>

#include "gradmod/errors.hpp"

namespace gradmod {

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_.resize(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_[i] = Row(ambient, 0);
        s.basis_[i][i] = 1;
        s.pivots_[i] = static_cast<int>(i);
    }
    return s;
}

Subspace Subspace::from_echelon(std::vector<Row> rows, std::vector<int> pivots,
                                std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

std::vector<int> Subspace::copivots() const {
    std::vector<int> out;
    out.reserve(ambient_ - pivots_.size());
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (k < pivots_.size() && pivots_[k] == static_cast<int>(j)) {
            ++k;
        } else {
            out.push_back(static_cast<int>(j));
        }
    }
    return out;
}

namespace {

// lazy reduction of a 64-bit buffer against an RREF basis
void reduce_buf(std::vector<uint64_t>& buf, const std::vector<Row>& basis,
                const std::vector<int>& pivots, uint64_t p) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
        std::size_t pc = static_cast<std::size_t>(pivots[r]);
        uint64_t c = buf[pc] % p;
        if (c == 0) {
            buf[pc] = 0;
            continue;
        }
        uint64_t nf = p - c;
        const Row& row = basis[r];
        for (std::size_t j = pc; j < row.size(); ++j) buf[j] += nf * row[j];
        buf[pc] = 0;
    }
    for (auto& x : buf) x %= p;
}

}  // namespace

Row Subspace::reduce(const Row& v, const GF& gf) const {
    std::vector<uint64_t> buf(v.begin(), v.end());
    buf.resize(ambient_, 0);
    reduce_buf(buf, basis_, pivots_, gf.p());
    return Row(buf.begin(), buf.end());
}

Row Subspace::residual_compact(const Row& v, const GF& gf, const std::vector<int>& copiv) const {
    Row red = reduce(v, gf);
    Row out(copiv.size());
    for (std::size_t i = 0; i < copiv.size(); ++i) out[i] = red[copiv[i]];
    return out;
}

Row Subspace::residual_compact(const SparseVec& v, const GF& gf,
                               const std::vector<int>& copiv) const {
    std::vector<uint64_t> buf(ambient_, 0);
    for (const auto& [idx, val] : v) buf[idx] = gf.add(static_cast<uint32_t>(buf[idx]), val);
    reduce_buf(buf, basis_, pivots_, gf.p());
    Row out(copiv.size());
    for (std::size_t i = 0; i < copiv.size(); ++i) out[i] = static_cast<uint32_t>(buf[copiv[i]]);
    return out;
}

bool Subspace::contains(const Row& v, const GF& gf) const {
    Row red = reduce(v, gf);
    return std::all_of(red.begin(), red.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other, const GF& gf) const {
    if (other.ambient_ != ambient_) throw ValidationError("subspace ambient mismatch");
    if (other.dim() > dim()) return false;
    for (const Row& r : other.basis_)
        if (!contains(r, gf)) return false;
    return true;
}

Subspace echelonize(const std::vector<Row>& vectors, std::size_t ambient, const GF& gf) {
    for (const Row& v : vectors)
        if (v.size() != ambient)
            throw ValidationError("echelonize: vector length does not match ambient dimension");
    WorkMat m = WorkMat::from_rows(vectors, ambient);
    RrefResult rr = rref(m, gf, ambient);
    std::vector<Row> rows(rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        rows[i].resize(ambient);
        const uint64_t* src = m.row(i);
        for (std::size_t j = 0; j < ambient; ++j) rows[i][j] = static_cast<uint32_t>(src[j]);
    }
    return Subspace::from_echelon(std::move(rows), std::move(rr.pivots), ambient);
}

Subspace augmented_kernel(WorkMat& m, std::size_t left_cols, std::size_t right_cols,
                          const GF& gf) {
    RrefResult rr = rref(m, gf, left_cols);
    std::vector<Row> kernel_rows;
    kernel_rows.reserve(m.rows() - rr.rank);
    for (std::size_t i = rr.rank; i < m.rows(); ++i) {
        Row r(right_cols);
        const uint64_t* src = m.row(i) + left_cols;
        for (std::size_t j = 0; j < right_cols; ++j) r[j] = static_cast<uint32_t>(src[j]);
        kernel_rows.push_back(std::move(r));
    }
    return echelonize(kernel_rows, right_cols, gf);
}

Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineMode mode, const GF& gf) {
    if (a.ambient() != b.ambient()) throw ValidationError("subspace ambient mismatch");
    const std::size_t n = a.ambient();
    if (mode == CombineMode::Sum) {
        std::vector<Row> rows = a.basis();
        rows.insert(rows.end(), b.basis().begin(), b.basis().end());
        return echelonize(rows, n, gf);
    }
    // Zassenhaus: rows [r|r] for a, [s|0] for b; kernel of the left block
    // carries the intersection in the right block.
    WorkMat m(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Row& r = a.basis()[i];
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, r[j]);
            m.set(i, n + j, r[j]);
        }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const Row& s = b.basis()[i];
        for (std::size_t j = 0; j < n; ++j) m.set(a.dim() + i, j, s[j]);
    }
    return augmented_kernel(m, n, n, gf);
}

Subspace map_preimage(const std::vector<Row>& matrix_rows, std::size_t codomain_dim,
                      const Subspace& target, const GF& gf) {
    if (target.ambient() != codomain_dim)
        throw ValidationError("map_preimage: target ambient does not match codomain");
    const std::size_t domain = matrix_rows.size();
    for (const Row& r : matrix_rows)
        if (r.size() != codomain_dim) throw ValidationError("map_preimage: row length mismatch");

    std::vector<int> copiv = target.copivots();
    if (copiv.empty()) return Subspace::full(domain);

    WorkMat m(domain, copiv.size() + domain);
    for (std::size_t k = 0; k < domain; ++k) {
        Row res = target.residual_compact(matrix_rows[k], gf, copiv);
        for (std::size_t j = 0; j < res.size(); ++j) m.set(k, j, res[j]);
        m.set(k, copiv.size() + k, 1);
    }
    return augmented_kernel(m, copiv.size(), domain, gf);
}

Subspace map_preimage_sparse(std::size_t domain_dim,
                             const std::function<void(std::size_t, SparseVec&)>& image_of,
                             const Subspace& target, const GF& gf) {
    std::vector<int> copiv = target.copivots();
    if (copiv.empty()) return Subspace::full(domain_dim);

    WorkMat m(domain_dim, copiv.size() + domain_dim);
    SparseVec img;
    for (std::size_t k = 0; k < domain_dim; ++k) {
        img.clear();
        image_of(k, img);
        Row res = target.residual_compact(img, gf, copiv);
        for (std::size_t j = 0; j < res.size(); ++j) m.set(k, j, res[j]);
        m.set(k, copiv.size() + k, 1);
    }
    return augmented_kernel(m, copiv.size(), domain_dim, gf);
}

}  // namespace gradmod
