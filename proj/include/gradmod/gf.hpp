#pragma once

#include <cstdint>

#include "gradmod/errors.hpp"

namespace gradmod {

bool is_prime(uint32_t n);

// Arithmetic in the prime field F_p. p is required to be prime and < 2^24 so
// that p^2 products fit comfortably in 64-bit lazy accumulators (see rref.cpp).
class GF {
public:
    explicit GF(uint32_t p);

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;

    // reduce an arbitrary signed integer into [0, p)
    uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const GF& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

}  // namespace gradmod
