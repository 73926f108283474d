#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gradmod/gf.hpp"

namespace gradmod {

// The ambient ring is k[[x_1..x_v]] with coefficients in F_p, represented by
// polynomials truncated at total degree `cap` (terms of degree >= cap are
// discarded by every operation).
struct RingSpec {
    std::vector<std::string> vars;
    uint32_t p = 32003;
    int cap = 7;

    int v() const { return static_cast<int>(vars.size()); }
    bool operator==(const RingSpec& o) const {
        return vars == o.vars && p == o.p && cap == o.cap;
    }
    std::string str() const;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

RingSpecPtr make_ring_spec(std::vector<std::string> vars, uint32_t p, int cap);

struct Monomial {
    std::vector<uint16_t> e;

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Listing order used everywhere: by total degree, then within a degree from
// the lexicographically largest exponent vector down (so for degree 1 the
// variables appear in declaration order).
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e;
    }
};

class TruncPoly {
public:
    static constexpr int kOrderInf = 1 << 30;

    TruncPoly() = default;
    explicit TruncPoly(RingSpecPtr spec) : spec_(std::move(spec)) {}

    static TruncPoly zero(RingSpecPtr spec) { return TruncPoly(std::move(spec)); }
    static TruncPoly constant(RingSpecPtr spec, long long v);
    static TruncPoly variable(RingSpecPtr spec, int idx);
    static TruncPoly monomial(RingSpecPtr spec, const Monomial& m, uint32_t coeff);

    const RingSpecPtr& spec() const { return spec_; }
    const std::map<Monomial, uint32_t, MonoOrder>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // v_Q of the element: the minimal total degree of a term; kOrderInf for 0
    int order() const;

    TruncPoly operator+(const TruncPoly& o) const;
    TruncPoly operator-(const TruncPoly& o) const;
    TruncPoly operator*(const TruncPoly& o) const;
    TruncPoly pow(unsigned e) const;
    TruncPoly scaled(uint32_t c) const;
    TruncPoly negated() const;

    bool operator==(const TruncPoly& o) const;

    // nonzero, every term of total degree exactly 1
    bool is_linear_form() const;
    uint32_t coeff_of_var(int idx) const;

    // re-truncate into a spec with the same variables but a different cap
    TruncPoly retruncated(const RingSpecPtr& new_spec) const;

    std::string str() const;

    void add_term(const Monomial& m, uint32_t coeff);  // reduces, drops cap/zero

private:
    void check_same_spec(const TruncPoly& o) const;

    RingSpecPtr spec_;
    std::map<Monomial, uint32_t, MonoOrder> terms_;
};

inline TruncPoly poly_mul_trunc(const TruncPoly& a, const TruncPoly& b) { return a * b; }

// Expression grammar (see README):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' nat)?
//   atom   := integer | variable | '(' expr ')'
TruncPoly parse_poly(std::string_view text, RingSpecPtr spec);

// monomials of total degree d in listing order; count = C(d+v-1, v-1)
std::vector<Monomial> graded_basis(int d, const RingSpec& spec);

// Indexes all monomials of degree < cap in listing order; the vector-space
// models address coordinates through this table.
class MonomialTable {
public:
    explicit MonomialTable(RingSpecPtr spec);

    const RingSpecPtr& spec() const { return spec_; }
    int size() const { return static_cast<int>(mons_.size()); }
    const Monomial& mono(int idx) const { return mons_[idx]; }
    int degree_of(int idx) const { return degs_[idx]; }
    // -1 when the monomial has degree >= cap
    int index_of(const Monomial& m) const;
    int mul_var(int idx, int var) const { return mul_var_[idx * nvars_ + var]; }
    int mul(int idx, const Monomial& m) const;
    int deg_start(int d) const { return deg_start_[d]; }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<uint16_t>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (auto x : v) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };

    RingSpecPtr spec_;
    int nvars_;
    std::vector<Monomial> mons_;
    std::vector<int> degs_;
    std::vector<int> deg_start_;  // size cap+1
    std::vector<int> mul_var_;
    std::unordered_map<std::vector<uint16_t>, int, VecHash> index_;
};

// Coordinate change sending a nonzero linear form to the last-indexed variable
// with a nonzero coefficient, which is then eliminated: the result is the ring
// on the remaining v-1 variables together with the substitution realizing
// reduction modulo the form.
struct LinearElimination {
    RingSpecPtr from, to;
    int pivot = -1;          // eliminated variable (index in `from`)
    TruncPoly replacement;   // image of the pivot variable, over `to`
    std::vector<int> var_map;  // from-index -> to-index, -1 at pivot

    TruncPoly apply(const TruncPoly& q) const;
};

LinearElimination eliminate_linear_form(const RingSpecPtr& spec, const TruncPoly& form);

}  // namespace gradmod
