#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradmod/ring.hpp"
#include "gradmod/subspace.hpp"

namespace gradmod {

// A module presented by a matrix phi over the truncated ring: M = coker(phi).
// The hypersurface equation f must annihilate M (verified at build time).
// Presentations are square for every product-level input; a wider matrix is
// accepted at the model level so cyclic quotients like Q/(x_1..x_v) can be
// exercised in tests.
struct Presentation {
    RingSpecPtr spec;
    std::vector<std::vector<TruncPoly>> phi;  // phi[row][col]
    TruncPoly f;
    std::string label;

    int rows() const { return static_cast<int>(phi.size()); }
    int cols() const { return phi.empty() ? 0 : static_cast<int>(phi[0].size()); }
    bool square() const { return rows() == cols(); }

    // same data over a spec with a different cap
    Presentation retruncated(int cap) const;
};

Presentation make_presentation(RingSpecPtr spec, std::vector<std::vector<TruncPoly>> phi,
                               TruncPoly f, std::string label);

// no unit entries, no zero columns, f != 0 of positive order
void validate_presentation(const Presentation& pres);

struct PresInvariants {
    int mu = 0;         // minimal generators = rows of a minimal presentation
    int iM = 0;         // min order over entries
    int det_order = 0;  // order of det(phi)
    long long eA_bound = 0;  // mu * iM, a lower bound for e(M)
    int order_f = 0;
};

// determinant expanded at a cap large enough to be exact for polynomial entries
TruncPoly presentation_det(const Presentation& pres);
PresInvariants presentation_invariants(const Presentation& pres);

// Vector-space model of M/m^cap M: ambient (Q/n^cap)^t with coordinates
// (monomial, generator), the relation subspace spanned by all monomial
// multiples of the columns of phi, and the m-adic filtration
// F_n = relations + span{ x^a e_i : |a| >= n }.
class TruncModule {
public:
    TruncModule(Presentation pres, int cap = -1);

    const Presentation& pres() const { return pres_; }
    const RingSpecPtr& spec() const { return pres_.spec; }
    const MonomialTable& table() const { return *table_; }
    const GF& field() const { return gf_; }
    int cap() const { return pres_.spec->cap; }
    int t() const { return pres_.rows(); }
    std::size_t ambient() const { return ambient_; }

    const Subspace& relations() const { return relations_; }
    // F_n for 0 <= n <= cap
    const Subspace& power(int n) const;
    // non-pivot coordinates of the relation subspace; every submodule
    // computation works on these coordinates and re-attaches relations
    const std::vector<int>& live_coords() const { return live_; }

    // lengths ell(M / m^n M) = ambient - dim F_n (exact for n <= cap)
    long long length_upto(int n) const;

    // coordinate of (monomial index, generator)
    std::size_t coord(int mono_idx, int gen) const { return static_cast<std::size_t>(mono_idx) * t_ + gen; }
    int coord_mono(std::size_t c) const { return static_cast<int>(c / t_); }
    int coord_gen(std::size_t c) const { return static_cast<int>(c % t_); }
    int coord_degree(std::size_t c) const { return table_->degree_of(coord_mono(c)); }

    // image of q * e_k as a sparse vector (truncated at cap)
    void mul_coord(const TruncPoly& q, std::size_t k, SparseVec& out) const;
    // image of q * v for a dense vector
    Row mul_vec(const TruncPoly& q, const Row& v) const;

    // span{ q * w : w in base } + relations, for each q in mults
    Subspace multiple_span(const std::vector<TruncPoly>& mults, const Subspace& base) const;

private:
    void build();

    Presentation pres_;
    std::shared_ptr<const MonomialTable> table_;
    GF gf_;
    int t_ = 0;
    std::size_t ambient_ = 0;
    Subspace relations_;
    std::vector<Subspace> filt_;
    std::vector<int> live_;
};

inline TruncModule build_module(const Presentation& pres, int cap = -1) {
    return TruncModule(pres, cap);
}

inline const Subspace& power_submodule(const TruncModule& m, int n) { return m.power(n); }

// { v : x v in target }, for linear x; target must contain the relations
Subspace colon_element(const TruncModule& m, const Subspace& target, const TruncPoly& x);

// (target : m) = { v : x_j v in target for every variable }
Subspace colon_maximal_ideal(const TruncModule& m, const Subspace& target);

// (target : m^i), computed by iterating the variable-stacked preimage;
// equals the intersection of (target : x^a) over monomials of degree i
Subspace colon_ideal_power(const TruncModule& m, const Subspace& target, int i);

// presentation of M/(form)M over the ring with the form eliminated
Presentation quotient_by_form(const Presentation& pres, const TruncPoly& form);

}  // namespace gradmod
