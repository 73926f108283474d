#include "gradmod/gf.hpp"

namespace gradmod {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

GF::GF(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (p >= (1u << 24)) throw ValidationError("p must be < 2^24 for the elimination kernels");
}

uint32_t GF::pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

uint32_t GF::inv(uint32_t a) const {
    if (a % p_ == 0) throw ComputationError("division by zero in F_p");
    return pow(a, p_ - 2);
}

}  // namespace gradmod
