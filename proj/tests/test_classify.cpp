#include <doctest.h>

#include "gradmod/classify.hpp"
#include "test_helpers.hpp"

using namespace gradmod;
using gradmod::testing::ex_pres;
using gradmod::testing::pres_of;

namespace {

Presentation one_var(const std::vector<std::vector<std::string>>& entries, int cap = 7) {
    return gradmod::testing::pres_of({"y"}, "y^3", entries, cap);
}

}  // namespace

TEST_CASE("smith normal form over the truncated series ring") {
    SUBCASE("already diagonal") {
        CHECK(smith_orders(one_var({{"y", "0"}, {"0", "y^2"}})) == std::vector<int>{1, 2});
    }
    SUBCASE("unit mixing does not change the orders") {
        // det = y^3 + y^4 - y^5 has order 3 = 1 + 2
        CHECK(smith_orders(one_var({{"y+y^2", "y^3"}, {"y^2", "y^2"}})) ==
              std::vector<int>{1, 2});
    }
    SUBCASE("the e=7 shape") {
        CHECK(smith_orders(one_var({{"y", "0", "0", "0"},
                                    {"0", "y^2", "0", "0"},
                                    {"0", "0", "y^2", "0"},
                                    {"0", "0", "0", "y^2"}})) ==
              std::vector<int>{1, 2, 2, 2});
    }
    SUBCASE("order at the cap is degenerate") {
        CHECK_THROWS_AS(smith_orders(one_var({{"y^7"}}, 7)), ComputationError);
    }
}

TEST_CASE("free summand detection") {
    const std::string f = "x^2*(x-y)";
    SUBCASE("an explicit (f) block") {
        Presentation p = pres_of({"x", "y", "z", "t"}, f,
                                 {{f, "0", "0", "0"},
                                  {"0", "x", "0", "0"},
                                  {"0", "0", "x^2", "0"},
                                  {"0", "0", "0", "x^2"}});
        FreeSplit split = split_free_summand(p);
        CHECK(split.free_rank == 1);
        REQUIRE(split.complement);
        CHECK(split.complement->rows() == 3);
        CHECK(split.complement->phi[0][0] == parse_poly("x", split.complement->spec));
    }
    SUBCASE("a unit multiple of f also splits") {
        Presentation p = pres_of({"x", "y", "z", "t"}, f,
                                 {{"3*x^2*(x-y)", "0"}, {"0", "x"}});
        CHECK(split_free_summand(p).free_rank == 1);
    }
    SUBCASE("example 1 has no free summand") {
        CHECK(split_free_summand(ex_pres(1)).free_rank == 0);
    }
    SUBCASE("the free module splits completely") {
        Presentation p = pres_of({"x", "y", "z", "t"}, f,
                                 {{f, "0", "0", "0"},
                                  {"0", f, "0", "0"},
                                  {"0", "0", f, "0"},
                                  {"0", "0", "0", f}});
        FreeSplit split = split_free_summand(p);
        CHECK(split.free_rank == 4);
        CHECK_FALSE(split.complement);
    }
}

TEST_CASE("the case table carries one row per conclusion") {
    const auto& table = mu4_e3_case_table();
    CHECK(table.size() == 12);
    long long sums[5] = {0, 0, 0, 0, 0};
    for (const CaseRow& row : table) {
        CHECK(row.e >= 4);
        CHECK(row.e <= 8);
        CHECK(row.h.eval_at_one() == row.e);
        ++sums[row.e - 4];
    }
    CHECK(sums[0] == 1);  // e=4
    CHECK(sums[1] == 2);  // e=5
    CHECK(sums[2] == 4);  // e=6
    CHECK(sums[3] == 4);  // e=7
    CHECK(sums[4] == 1);  // e=8
}

TEST_CASE("classification of the Ulrich diagonal") {
    Presentation p = pres_of({"x", "y", "z", "t"}, "x^3",
                             {{"x", "0", "0", "0"},
                              {"0", "x", "0", "0"},
                              {"0", "0", "x", "0"},
                              {"0", "0", "0", "x"}});
    ClassificationRecord rec = classify_mu4_e3(p, 42);
    CHECK(rec.case_id == "e4");
    CHECK(rec.eM == 4);
    CHECK(rec.depth == 3);
    CHECK(rec.a_tuple == std::vector<int>{1, 1, 1, 1});
    CHECK(rec.h == IntPoly{{4}});
    CHECK(rec.theorem_ok);
}

TEST_CASE("classification refuses free summands") {
    Presentation p = pres_of({"x", "y", "z", "t"}, "x^3",
                             {{"x^3", "0", "0", "0"},
                              {"0", "x", "0", "0"},
                              {"0", "0", "x", "0"},
                              {"0", "0", "0", "x^2"}});
    CHECK_THROWS_AS(classify_mu4_e3(p, 42), ValidationError);
}
