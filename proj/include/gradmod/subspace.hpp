#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "gradmod/rref.hpp"

namespace gradmod {

// sparse coordinate vector: (index, value) pairs, value != 0
using SparseVec = std::vector<std::pair<std::size_t, uint32_t>>;

// A linear subspace of F_p^n held as a reduced row echelon basis. RREF is
// canonical, so two subspaces are equal iff their stored bases are equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace from_echelon(std::vector<Row> rows, std::vector<int> pivots,
                                 std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Row>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // sorted non-pivot column indices
    std::vector<int> copivots() const;

    // residual of v after reduction against the basis (full length)
    Row reduce(const Row& v, const GF& gf) const;
    // residual restricted to the given copivot columns
    Row residual_compact(const Row& v, const GF& gf, const std::vector<int>& copiv) const;
    Row residual_compact(const SparseVec& v, const GF& gf, const std::vector<int>& copiv) const;

    bool contains(const Row& v, const GF& gf) const;
    bool contains(const Subspace& other, const GF& gf) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Row> basis_;
    std::vector<int> pivots_;
};

Subspace echelonize(const std::vector<Row>& vectors, std::size_t ambient, const GF& gf);

enum class CombineMode { Sum, Intersect };

Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineMode mode, const GF& gf);

inline Subspace subspace_sum(const Subspace& a, const Subspace& b, const GF& gf) {
    return subspace_combine(a, b, CombineMode::Sum, gf);
}
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b, const GF& gf) {
    return subspace_combine(a, b, CombineMode::Intersect, gf);
}

// Preimage of `target` under the linear map that sends domain basis vector k
// to matrix_rows[k] (a vector of length codomain_dim). Contains the kernel.
Subspace map_preimage(const std::vector<Row>& matrix_rows, std::size_t codomain_dim,
                      const Subspace& target, const GF& gf);

// Same computation with images produced on demand as sparse vectors.
Subspace map_preimage_sparse(std::size_t domain_dim,
                             const std::function<void(std::size_t, SparseVec&)>& image_of,
                             const Subspace& target, const GF& gf);

// Rows of m are [left | right] with independent full rows; returns the
// echelonized right parts of the rows whose left block eliminates to zero.
Subspace augmented_kernel(WorkMat& m, std::size_t left_cols, std::size_t right_cols,
                          const GF& gf);

}  // namespace gradmod
