#include <doctest.h>

#include "gradmod/hilbert.hpp"
#include "test_helpers.hpp"

using namespace gradmod;
using gradmod::testing::ex_pres;
using gradmod::testing::pres_of;
using gradmod::testing::ring_as_module;

TEST_CASE("hilbert function of the ambient ring") {
    // a 1x1 presentation with f of order >= window+2 behaves like Q itself
    // inside the window
    TruncModule m(pres_of({"x", "y", "z", "t"}, "x^7", {{"x^7"}}, 9));
    auto H = hilbert_function(m, 4);
    for (int n = 0; n <= 4; ++n) CHECK(H[n] == binomial(n + 4, 4));
}

TEST_CASE("hilbert function of the hypersurface ring") {
    TruncModule m(ring_as_module("x^2*(x-y)", 7));
    auto H = hilbert_function(m, 3);
    CHECK(H == std::vector<long long>{1, 5, 15, 34});
}

TEST_CASE("hilbert function of the residue field") {
    // one generator killed by every variable; a wide presentation is enough
    // for the model even though product-level inputs stay square
    TruncModule m(pres_of({"x", "y", "z", "t"}, "x^2", {{"x", "y", "z", "t"}}, 6));
    auto H = hilbert_function(m, 4);
    for (long long v : H) CHECK(v == 1);
}

TEST_CASE("h-polynomial of the ring is 1 + z + z^2") {
    TruncModule m(ring_as_module("x^2*(x-y)", 7));
    auto [r, h] = h_polynomial(m);
    CHECK(r == 3);
    CHECK(h == IntPoly{{1, 1, 1}});
    HilbertData hd = hilbert_data(m);
    CHECK(hd.e == std::vector<long long>{3, 3, 1, 0});
    CHECK(hd.mu == 1);
}

TEST_CASE("h-polynomial of example 4") {
    TruncModule m(ex_pres(4, 7));
    auto [r, h] = h_polynomial(m);
    CHECK(r == 3);
    CHECK(h == IntPoly{{4, 3}});
}

TEST_CASE("h-polynomial of example 1") {
    // 3 + 4z + (1-z)^4 expanded
    TruncModule m(ex_pres(1, 8));
    auto [r, h] = h_polynomial(m);
    CHECK(r == 3);
    CHECK(h == IntPoly{{4, 0, 6, -4, 1}});
}

TEST_CASE("hilbert coefficients by differentiation at one") {
    CHECK(hilbert_coefficients(IntPoly{{1, 1, 1}}, 2) == std::vector<long long>{3, 3, 1});
    CHECK(hilbert_coefficients(IntPoly{{4}}, 3) == std::vector<long long>{4, 0, 0, 0});
    CHECK(hilbert_coefficients(IntPoly{{4, 0, 2}}, 2) == std::vector<long long>{6, 4, 2});
}

TEST_CASE("artinian modules have dimension zero") {
    auto spec1 = make_ring_spec({"y"}, 32003, 7);
    std::vector<std::vector<TruncPoly>> phi = {
        {parse_poly("y", spec1), TruncPoly::zero(spec1)},
        {TruncPoly::zero(spec1), parse_poly("y^2", spec1)}};
    Presentation pres =
        make_presentation(spec1, std::move(phi), parse_poly("y^3", spec1), "artinian");
    TruncModule m(pres);
    auto [r, h] = h_polynomial(m);
    CHECK(r == 0);
    CHECK(h == IntPoly{{2, 1}});  // Q'/(y) + Q'/(y^2)
}

TEST_CASE("window too small raises the cap signal") {
    TruncModule m(ex_pres(1, 6));
    // deg h = 4 leaves no certified margin inside a window of 4
    CHECK_THROWS_AS(h_polynomial(m), CapError);
}
