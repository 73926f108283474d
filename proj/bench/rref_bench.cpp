// Compares the elimination kernels: textbook reference, optimized serial and
// the OpenMP variant. Run with --smoke for a quick consistency pass.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "gradmod/rref.hpp"

using namespace gradmod;

namespace {

WorkMat random_matrix(std::size_t rows, std::size_t cols, uint32_t p, std::mt19937_64& rng) {
    WorkMat m(rows, cols);
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

uint64_t checksum(const WorkMat& m) {
    uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) h = (h ^ m.get(i, j)) * 1099511628211ull;
    return h;
}

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;
    const GF gf(32003);
    std::vector<std::size_t> sizes = smoke ? std::vector<std::size_t>{96}
                                           : std::vector<std::size_t>{256, 512, 1024, 2048};

    std::cout << "size      reference     serial   parallel   speedup  agree\n";
    for (std::size_t n : sizes) {
        std::mt19937_64 rng(7);
        WorkMat a = random_matrix(n, n + n / 2, gf.p(), rng);
        WorkMat b = a, c = a;

        double t_ref = time_ms([&] { rref_reference(a, gf, a.cols()); });
        double t_ser = time_ms([&] { rref(b, gf, b.cols(), Backend::Serial); });
        double t_par = time_ms([&] { rref(c, gf, c.cols(), Backend::Parallel); });

        bool agree = checksum(a) == checksum(b) && checksum(b) == checksum(c);
        std::printf("%5zu  %9.1f ms  %7.1f ms  %7.1f ms  %6.2fx  %s\n", n, t_ref, t_ser, t_par,
                    t_ser / t_par, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
