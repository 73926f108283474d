#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gradmod/gf.hpp"

namespace gradmod {

using Row = std::vector<uint32_t>;

// Dense row-major working matrix. Entries are residues held in 64 bits so the
// elimination kernels can defer modular reductions: with p < 2^24 a row
// accumulates less than 2^48 per elimination step and the kernels stay well
// below 2^63 for any matrix this project produces.
class WorkMat {
public:
    WorkMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static WorkMat from_rows(const std::vector<Row>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    uint64_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const uint64_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    void set(std::size_t i, std::size_t j, uint32_t v) { a_[i * cols_ + j] = v; }
    uint32_t get(std::size_t i, std::size_t j) const {
        return static_cast<uint32_t>(a_[i * cols_ + j]);
    }

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<uint64_t> a_;
};

enum class Backend { Serial, Parallel };

// Process-wide default used by the subspace layer; Parallel when OpenMP is
// compiled in, Serial otherwise.
Backend default_backend();
void set_default_backend(Backend b);

struct RrefResult {
    std::vector<int> pivots;  // pivot column per echelon row, ascending
    std::size_t rank = 0;
};

// In-place reduced row echelon form. Pivots are chosen only among the first
// pivot_limit columns. On return all entries are reduced mod p, the first
// rank rows are the echelon rows sorted by pivot column, and the remaining
// rows are the (still independent) rows whose pivot-region part vanished.
RrefResult rref(WorkMat& m, const GF& gf, std::size_t pivot_limit, Backend backend);

inline RrefResult rref(WorkMat& m, const GF& gf, std::size_t pivot_limit) {
    return rref(m, gf, pivot_limit, default_backend());
}

// Textbook elimination with immediate reductions, kept as an independent
// reference implementation for tests and the benchmark.
RrefResult rref_reference(WorkMat& m, const GF& gf, std::size_t pivot_limit);

}  // namespace gradmod
