#include "gradmod/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gradmod {

long long IntPoly::eval_at_one() const {
    long long s = 0;
    for (long long x : c) s += x;
    return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<long long> out(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) out[i] += o.c[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<long long> out(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) out[i] -= o.c[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<long long> out(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::one_minus_z_pow(int k) {
    std::vector<long long> out(k + 1);
    for (int i = 0; i <= k; ++i) out[i] = (i % 2 ? -1 : 1) * binomial(k, i);
    return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        long long v = c[i];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        long long a = v < 0 ? -v : v;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<long long> hilbert_coefficients(const IntPoly& h, int upto) {
    std::vector<long long> e(upto + 1, 0);
    for (int i = 0; i <= upto; ++i)
        for (int k = 0; k <= h.degree(); ++k) e[i] += h.coeff(k) * binomial(k, i);
    return e;
}

}  // namespace gradmod
