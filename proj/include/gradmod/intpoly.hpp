#pragma once

#include <string>
#include <vector>

namespace gradmod {

// Polynomials in z with integer coefficients: h-polynomials, b-vectors and
// the numerator identities connecting them. Always stored without trailing
// zero coefficients.
struct IntPoly {
    std::vector<long long> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }
    long long eval_at_one() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c == o.c; }

    // (1-z)^k
    static IntPoly one_minus_z_pow(int k);

    // "4 + 6z^2 - 4z^3 + z^4"; zero polynomial prints "0"
    std::string str() const;
};

long long binomial(long long n, long long k);

// e_i = h^(i)(1)/i! = sum_k h_k * C(k, i), for i = 0..upto
std::vector<long long> hilbert_coefficients(const IntPoly& h, int upto);

}  // namespace gradmod
