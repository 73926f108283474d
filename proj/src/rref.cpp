#include "gradmod/rref.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gradmod {

WorkMat WorkMat::from_rows(const std::vector<Row>& rows, std::size_t cols) {
    WorkMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        uint64_t* dst = m.row(i);
        for (std::size_t j = 0; j < r.size() && j < cols; ++j) dst[j] = r[j];
    }
    return m;
}

void WorkMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(row(i), row(i) + cols_, row(j));
}

namespace {
Backend g_backend =
#ifdef _OPENMP
    Backend::Parallel;
#else
    Backend::Serial;
#endif
}  // namespace

Backend default_backend() { return g_backend; }
void set_default_backend(Backend b) { g_backend = b; }

RrefResult rref(WorkMat& m, const GF& gf, std::size_t pivot_limit, Backend backend) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    const uint64_t p = gf.p();
    pivot_limit = std::min(pivot_limit, ncols);
    RrefResult res;

    const bool par = backend == Backend::Parallel && nrows * ncols > 16384;
    (void)par;

    // Every elimination adds < p^2 to an entry, so entries stay below
    // 2^63 as long as we flush before p^2 * steps overflows.
    const uint64_t flush_every =
        std::max<uint64_t>(1, (uint64_t(1) << 62) / (p * p));
    uint64_t since_flush = 0;

    std::size_t r = 0;
    for (std::size_t col = 0; col < pivot_limit && r < nrows; ++col) {
        // pivot search; reduce candidates as we touch them
        std::size_t piv = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            uint64_t v = m.row(i)[col] % p;
            m.row(i)[col] = v;
            if (v != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nrows) continue;
        m.swap_rows(piv, r);

        // normalize the pivot row: reduce fully, then scale by the inverse
        uint64_t* prow = m.row(r);
        uint64_t inv = gf.inv(static_cast<uint32_t>(prow[col]));
        for (std::size_t j = col; j < ncols; ++j) prow[j] = prow[j] % p * inv % p;

        // eliminate the pivot column everywhere else; rows only accumulate
        // f * prow[j] with both factors < p, so no reduction is needed here
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (long long ii = 0; ii < static_cast<long long>(nrows); ++ii) {
            std::size_t i = static_cast<std::size_t>(ii);
            if (i == r) continue;
            uint64_t* arow = m.row(i);
            uint64_t f = arow[col] % p;
            if (f == 0) {
                arow[col] = 0;
                continue;
            }
            uint64_t nf = p - f;
            for (std::size_t j = col; j < ncols; ++j) arow[j] += nf * prow[j];
            arow[col] = 0;
        }

        res.pivots.push_back(static_cast<int>(col));
        ++r;

        if (++since_flush >= flush_every) {
            since_flush = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
            for (long long ii = 0; ii < static_cast<long long>(nrows); ++ii) {
                uint64_t* arow = m.row(static_cast<std::size_t>(ii));
                for (std::size_t j = 0; j < ncols; ++j) arow[j] %= p;
            }
        }
    }
    res.rank = r;

    // final pass: everything reduced mod p
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (long long ii = 0; ii < static_cast<long long>(nrows); ++ii) {
        uint64_t* arow = m.row(static_cast<std::size_t>(ii));
        for (std::size_t j = 0; j < ncols; ++j) arow[j] %= p;
    }
    return res;
}

RrefResult rref_reference(WorkMat& m, const GF& gf, std::size_t pivot_limit) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    pivot_limit = std::min(pivot_limit, ncols);
    RrefResult res;

    std::size_t r = 0;
    for (std::size_t col = 0; col < pivot_limit && r < nrows; ++col) {
        std::size_t piv = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (m.get(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == nrows) continue;
        m.swap_rows(piv, r);

        uint32_t inv = gf.inv(m.get(r, col));
        for (std::size_t j = col; j < ncols; ++j) m.set(r, j, gf.mul(m.get(r, j), inv));

        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            uint32_t f = m.get(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < ncols; ++j)
                m.set(i, j, gf.sub(m.get(i, j), gf.mul(f, m.get(r, j))));
        }
        res.pivots.push_back(static_cast<int>(col));
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace gradmod
