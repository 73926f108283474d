#include <doctest.h>

#include <random>

#include "gradmod/subspace.hpp"

using namespace gradmod;

namespace {

std::vector<Row> random_rows(std::size_t n, std::size_t dim, uint32_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    std::vector<Row> rows(n, Row(dim));
    for (auto& r : rows)
        for (auto& x : r) x = dist(rng);
    return rows;
}

bool same_matrix(const WorkMat& a, const WorkMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j) != b.get(i, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("field arithmetic") {
    GF gf(32003);
    CHECK(gf.mul(gf.inv(12345), 12345) == 1);
    CHECK(gf.add(32002, 1) == 0);
    CHECK(gf.from_int(-1) == 32002);
    CHECK_THROWS_AS(GF(32004), ValidationError);  // composite
    GF small(5);
    for (uint32_t a = 1; a < 5; ++a) CHECK(small.mul(a, small.inv(a)) == 1);
}

TEST_CASE("optimized kernels match the reference on random matrices") {
    for (uint32_t p : {5u, 32003u}) {
        GF gf(p);
        std::mt19937_64 rng(31 + p);
        for (int round = 0; round < 6; ++round) {
            std::size_t rows = 20 + round * 7, cols = 30 + round * 5;
            std::vector<Row> data = random_rows(rows, cols, p, rng);
            WorkMat a = WorkMat::from_rows(data, cols);
            WorkMat b = WorkMat::from_rows(data, cols);
            WorkMat c = WorkMat::from_rows(data, cols);
            RrefResult ra = rref_reference(a, gf, cols);
            RrefResult rb = rref(b, gf, cols, Backend::Serial);
            RrefResult rc = rref(c, gf, cols, Backend::Parallel);
            CHECK(ra.pivots == rb.pivots);
            CHECK(rb.pivots == rc.pivots);
            CHECK(same_matrix(a, b));
            CHECK(same_matrix(b, c));
        }
    }
}

TEST_CASE("echelonize basics") {
    GF gf(32003);
    SUBCASE("empty span") {
        Subspace s = echelonize({}, 5, gf);
        CHECK(s.dim() == 0);
        CHECK(s.ambient() == 5);
    }
    SUBCASE("unit triangular spans everything") {
        Subspace s = echelonize({{1, 0}, {1, 1}}, 2, gf);
        CHECK(s.dim() == 2);
        CHECK(s == Subspace::full(2));
    }
    SUBCASE("proportional rows collapse") {
        Subspace s = echelonize({{2, 4}, {1, 2}}, 2, gf);
        CHECK(s.dim() == 1);
        CHECK(s.basis()[0] == Row{1, 2});
    }
    SUBCASE("dimension mismatch rejected") {
        CHECK_THROWS_AS(echelonize({{1, 2, 3}}, 2, gf), ValidationError);
    }
}

TEST_CASE("echelon form is canonical") {
    GF gf(32003);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<uint32_t> dist(0, gf.p() - 1);
    for (int round = 0; round < 10; ++round) {
        std::vector<Row> base = random_rows(4, 9, gf.p(), rng);
        Subspace s1 = echelonize(base, 9, gf);
        // a second spanning set: random invertible-ish combinations
        std::vector<Row> mixed;
        for (int k = 0; k < 7; ++k) {
            Row v(9, 0);
            for (const Row& b : base) {
                uint32_t c = dist(rng);
                for (std::size_t j = 0; j < 9; ++j)
                    v[j] = gf.add(v[j], gf.mul(c, b[j]));
            }
            mixed.push_back(std::move(v));
        }
        for (const Row& b : base) mixed.push_back(b);  // ensure the full span
        Subspace s2 = echelonize(mixed, 9, gf);
        CHECK(s1 == s2);
    }
}

TEST_CASE("echelonize is idempotent") {
    GF gf(32003);
    std::mt19937_64 rng(5);
    std::vector<Row> rows = random_rows(6, 10, gf.p(), rng);
    Subspace s = echelonize(rows, 10, gf);
    Subspace again = echelonize(s.basis(), 10, gf);
    CHECK(s == again);
}

TEST_CASE("sum and intersection") {
    GF gf(32003);
    SUBCASE("axis planes") {
        Subspace a = echelonize({{1, 0}}, 2, gf);
        Subspace b = echelonize({{0, 1}}, 2, gf);
        CHECK(subspace_sum(a, b, gf).dim() == 2);
        CHECK(subspace_intersect(a, b, gf).dim() == 0);
    }
    SUBCASE("idempotence") {
        Subspace a = echelonize({{1, 2, 3}, {0, 1, 1}}, 3, gf);
        CHECK(subspace_sum(a, a, gf) == a);
        CHECK(subspace_intersect(a, a, gf) == a);
    }
    SUBCASE("ambient mismatch") {
        Subspace a = Subspace::zero(2), b = Subspace::zero(3);
        CHECK_THROWS_AS(subspace_combine(a, b, CombineMode::Sum, gf), ValidationError);
    }
}

TEST_CASE("modular law on random subspaces, checked against stacked ranks") {
    GF gf(32003);
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 12; ++round) {
        Subspace a = echelonize(random_rows(1 + round % 4, 6, gf.p(), rng), 6, gf);
        Subspace b = echelonize(random_rows(1 + (round + 2) % 4, 6, gf.p(), rng), 6, gf);
        Subspace sum = subspace_sum(a, b, gf);
        Subspace meet = subspace_intersect(a, b, gf);
        CHECK(a.dim() + b.dim() == sum.dim() + meet.dim());

        // independent oracle for dim(sum): rank of the stacked raw bases
        // through the reference kernel
        std::vector<Row> stacked = a.basis();
        stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
        WorkMat m = WorkMat::from_rows(stacked, 6);
        CHECK(rref_reference(m, gf, 6).rank == sum.dim());

        // containment sanity
        CHECK(sum.contains(a, gf));
        CHECK(sum.contains(b, gf));
        CHECK(a.contains(meet, gf));
        CHECK(b.contains(meet, gf));
    }
}

TEST_CASE("map preimage") {
    GF gf(32003);
    SUBCASE("identity map returns the target") {
        Subspace t = echelonize({{1, 0, 2}, {0, 1, 5}}, 3, gf);
        std::vector<Row> id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        CHECK(map_preimage(id, 3, t, gf) == t);
    }
    SUBCASE("zero map returns the full space") {
        Subspace t = Subspace::zero(3);
        std::vector<Row> zero(4, Row(3, 0));
        CHECK(map_preimage(zero, 3, t, gf) == Subspace::full(4));
    }
    SUBCASE("projection onto the first coordinate") {
        // map(e1) = e1, map(e2) = map(e3) = 0; preimage of 0 is the kernel plane
        std::vector<Row> proj = {{1}, {0}, {0}};
        Subspace pre = map_preimage(proj, 1, Subspace::zero(1), gf);
        CHECK(pre.dim() == 2);
        CHECK(pre.contains(Row{0, 1, 0}, gf));
        CHECK(pre.contains(Row{0, 0, 1}, gf));
    }
    SUBCASE("preimage of the full space is everything") {
        std::mt19937_64 rng(3);
        std::vector<Row> rows = random_rows(5, 4, gf.p(), rng);
        CHECK(map_preimage(rows, 4, Subspace::full(4), gf) == Subspace::full(5));
    }
    SUBCASE("preimage contains the kernel") {
        std::mt19937_64 rng(8);
        for (int round = 0; round < 6; ++round) {
            std::vector<Row> rows = random_rows(6, 4, gf.p(), rng);
            Subspace target = echelonize(random_rows(2, 4, gf.p(), rng), 4, gf);
            Subspace pre = map_preimage(rows, 4, target, gf);
            Subspace ker = map_preimage(rows, 4, Subspace::zero(4), gf);
            CHECK(pre.contains(ker, gf));
            // membership is definitional: x in pre iff map(x) in target
            for (const Row& b : pre.basis()) {
                std::vector<uint64_t> img(4, 0);
                for (std::size_t k = 0; k < 6; ++k)
                    for (std::size_t j = 0; j < 4; ++j)
                        img[j] += static_cast<uint64_t>(b[k]) * rows[k][j];
                Row image(4);
                for (std::size_t j = 0; j < 4; ++j)
                    image[j] = static_cast<uint32_t>(img[j] % gf.p());
                CHECK(target.contains(image, gf));
            }
        }
    }
}
