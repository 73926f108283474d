#include <doctest.h>

#include <random>

#include "gradmod/ring.hpp"

using namespace gradmod;

namespace {

RingSpecPtr spec4(int cap = 7) { return make_ring_spec({"x", "y", "z", "t"}, 32003, cap); }

Monomial mono(std::vector<uint16_t> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST_CASE("parser expands the running example") {
    auto s = spec4();
    TruncPoly q = parse_poly("x^2*(x-y)", s);
    CHECK(q.terms().size() == 2);
    CHECK(q.terms().at(mono({3, 0, 0, 0})) == 1);
    CHECK(q.terms().at(mono({2, 1, 0, 0})) == 32002);  // -1 mod p
    CHECK(q.order() == 3);
}

TEST_CASE("parser corner cases") {
    auto s = spec4();
    CHECK(parse_poly("0", s).is_zero());
    CHECK(parse_poly("0", s).order() == TruncPoly::kOrderInf);

    TruncPoly sq = parse_poly("(x+y)^2", s);
    CHECK(sq == parse_poly("x^2 + 2*x*y + y^2", s));

    CHECK(parse_poly("-x^2", s) == parse_poly("0 - x^2", s));
    CHECK(parse_poly("2^3", s) == TruncPoly::constant(s, 8));

    CHECK_THROWS_AS(parse_poly("x + w", s), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", s), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", s), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", s), ParseError);
}

TEST_CASE("parsing is a ring homomorphism on expressions") {
    auto s = spec4();
    const char* exprs[] = {"x^2*(x-y)", "x+y+z", "3*t^2 - z", "(x-t)*(y+2)", "x^6"};
    for (const char* a : exprs)
        for (const char* b : exprs) {
            std::string sum = std::string("(") + a + ")+(" + b + ")";
            std::string prod = std::string("(") + a + ")*(" + b + ")";
            CHECK(parse_poly(sum, s) == parse_poly(a, s) + parse_poly(b, s));
            CHECK(parse_poly(prod, s) == poly_mul_trunc(parse_poly(a, s), parse_poly(b, s)));
        }
}

TEST_CASE("truncated products") {
    auto s = spec4(5);
    TruncPoly x = TruncPoly::variable(s, 0);
    CHECK((x * parse_poly("x^4", s)).is_zero());
    TruncPoly any = parse_poly("1 + x + y*z", s);
    CHECK(TruncPoly::constant(s, 1) * any == any);
    CHECK(parse_poly("(x-y)*(x+y)", s) == parse_poly("x^2-y^2", s));
}

TEST_CASE("order is additive below the cap") {
    auto s = spec4(9);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> deg(0, 3), var(0, 3), coeff(1, 32002);
    for (int round = 0; round < 30; ++round) {
        TruncPoly a(s), b(s);
        for (int k = 0; k < 3; ++k) {
            std::vector<uint16_t> e(4, 0);
            e[var(rng)] += deg(rng);
            e[var(rng)] += deg(rng) / 2;
            a.add_term(Monomial{e}, coeff(rng));
            std::vector<uint16_t> e2(4, 0);
            e2[var(rng)] += deg(rng);
            b.add_term(Monomial{e2}, coeff(rng));
        }
        if (a.is_zero() || b.is_zero()) continue;
        if (a.order() + b.order() < 9) CHECK((a * b).order() == a.order() + b.order());
    }
}

TEST_CASE("graded bases") {
    auto s = spec4();
    CHECK(graded_basis(0, *s).size() == 1);
    CHECK(graded_basis(2, *s).size() == 10);  // C(5,3)
    auto deg1 = graded_basis(1, *s);
    REQUIRE(deg1.size() == 4);
    CHECK(deg1[0] == mono({1, 0, 0, 0}));
    CHECK(deg1[1] == mono({0, 1, 0, 0}));
    CHECK(deg1[2] == mono({0, 0, 1, 0}));
    CHECK(deg1[3] == mono({0, 0, 0, 1}));
    CHECK_THROWS_AS(graded_basis(7, *s), ValidationError);
}

TEST_CASE("monomial table indexing and products") {
    auto s = spec4(6);
    MonomialTable table(s);
    // C(5+4,4) monomials of degree < 6 in 4 variables
    CHECK(table.size() == 126);
    for (int idx = 0; idx < table.size(); ++idx)
        CHECK(table.index_of(table.mono(idx)) == idx);
    // degrees are non-decreasing in listing order
    for (int idx = 1; idx < table.size(); ++idx)
        CHECK(table.degree_of(idx) >= table.degree_of(idx - 1));
    // x * x^5 truncates away
    int x5 = table.index_of(mono({5, 0, 0, 0}));
    REQUIRE(x5 >= 0);
    CHECK(table.mul_var(x5, 0) == -1);
    CHECK(table.mul_var(x5, 1) == -1);
}

TEST_CASE("eliminating a plain variable") {
    auto s = spec4();
    LinearElimination el = eliminate_linear_form(s, TruncPoly::variable(s, 3));
    CHECK(el.to->vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(el.replacement.is_zero());
    CHECK(el.apply(parse_poly("x + 2*t", s)) == parse_poly("x", el.to));
}

TEST_CASE("eliminating x - y identifies the variables") {
    auto s = spec4();
    LinearElimination el = eliminate_linear_form(s, parse_poly("x - y", s));
    CHECK(el.to->vars == std::vector<std::string>{"x", "z", "t"});
    CHECK(el.apply(parse_poly("y", s)) == parse_poly("x", el.to));
    CHECK(el.apply(parse_poly("x^2*(x-y)", s)).is_zero());
}

TEST_CASE("generic forms preserve orders of images") {
    auto s = spec4();
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<uint32_t> dist(1, 32002);
    for (int round = 0; round < 8; ++round) {
        TruncPoly form(s);
        for (int i = 0; i < 4; ++i)
            form = form + TruncPoly::variable(s, i).scaled(dist(rng));
        REQUIRE(form.coeff_of_var(3) != 0);
        LinearElimination el = eliminate_linear_form(s, form);
        CHECK(el.apply(TruncPoly::variable(s, 0)).order() == 1);
        CHECK(el.apply(parse_poly("x^2 + y*z", s)).order() == 2);
    }
}

TEST_CASE("two successive eliminations drop two variables") {
    auto s = spec4();
    LinearElimination e1 = eliminate_linear_form(s, parse_poly("x + 2*y - t", s));
    LinearElimination e2 = eliminate_linear_form(e1.to, parse_poly("y - z", e1.to));
    CHECK(e2.to->v() == 2);
    TruncPoly img = e2.apply(e1.apply(parse_poly("x^2*(x-y)", s)));
    CHECK(img.order() == 3);
}

TEST_CASE("retruncation drops high terms") {
    auto s9 = spec4(9);
    auto s5 = spec4(5);
    TruncPoly q = parse_poly("x^2 + x^7", s9);
    CHECK(q.retruncated(s5) == parse_poly("x^2", s5));
}
