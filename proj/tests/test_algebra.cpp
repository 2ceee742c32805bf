#include <doctest.h>

#include <random>

#include "newt/errors.hpp"
#include "newt/polyops.hpp"

using namespace newt;

namespace {

BPoly P(const std::string& s) { return parse_poly(s); }

BPoly random_poly(std::mt19937_64& eng, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nd(1, max_terms), ed(0, max_deg), cd(-9, 9);
    BPoly f;
    int n = nd(eng);
    for (int i = 0; i < n; ++i) f.add_term(ed(eng), ed(eng), Rat(cd(eng)));
    return f;
}

} // namespace

TEST_CASE("parsing monomials and expansions") {
    BPoly f = P("x^3*y");
    CHECK(f.term_count() == 1);
    CHECK(f.coeff(3, 1) == 1);

    BPoly g = P("(y+x)^3+x^8");
    CHECK(g.coeff(0, 3) == 1);
    CHECK(g.coeff(1, 2) == 3);
    CHECK(g.coeff(2, 1) == 3);
    CHECK(g.coeff(3, 0) == 1);
    CHECK(g.coeff(8, 0) == 1);
    CHECK(g.term_count() == 5);

    BPoly h = P("y^2-3*x");
    CHECK(h.coeff(0, 2) == 1);
    CHECK(h.coeff(1, 0) == -3);

    CHECK(P("1/2*x").coeff(1, 0) == make_rat(1, 2));
    CHECK_THROWS_AS(P("3x"), syntax_error);
    CHECK_THROWS_AS(P("x^"), syntax_error);
    CHECK_THROWS_AS(P("(x+y"), syntax_error);
    CHECK_THROWS_AS(P("x+*y"), syntax_error);
    CHECK_THROWS_AS(P("z"), syntax_error);
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        P("x^2 + $");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.offset == 6);
    }
}

TEST_CASE("order of a polynomial") {
    CHECK(P("x^3*y").order() == 4);
    CHECK(P("1").order() == 0);
    CHECK(P("y^2*((x^2+y^3)^2+x*y^5)*(x^2-y^3)").order() == 8);
    CHECK_THROWS_AS(BPoly().order(), zero_polynomial);
}

TEST_CASE("order is additive on products") {
    std::mt19937_64 eng(7);
    for (int i = 0; i < 200; ++i) {
        BPoly f = random_poly(eng, 4, 6), g = random_poly(eng, 4, 6);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).order() == f.order() + g.order());
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd(P("x^3*y"), P("x^6+y^4")).is_constant());
    BPoly g = gcd_many({P("(x-y)^2*x^3"), P("(x-y)^2*y^3"), P("(x-y)*x^6")});
    CHECK(g == P("x-y"));
    BPoly f = P("3*y^2-9*x");
    // normalized: integer-primitive, coefficient of the lex-greatest monomial positive
    CHECK(gcd(f, f) == P("y^2-3*x").normalized());
    CHECK(gcd(f, f) == P("3*x-y^2"));
}

TEST_CASE("gcd divides both inputs exactly") {
    std::mt19937_64 eng(11);
    for (int i = 0; i < 100; ++i) {
        BPoly a = random_poly(eng, 3, 4), b = random_poly(eng, 3, 4), c = random_poly(eng, 3, 4);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        BPoly f = a * c, g = b * c;
        BPoly d = gcd(f, g);
        CHECK(d.divides(f));
        CHECK(d.divides(g));
        CHECK(c.divides(d));
    }
}

TEST_CASE("squarefree decomposition") {
    auto dec = squarefree_decompose(P("(y-x^3)^2"));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == P("y-x^3").normalized());
    CHECK(dec[0].second == 2);

    dec = squarefree_decompose(P("(x-y)^2*x^3"));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == P("x-y"));
    CHECK(dec[0].second == 2);
    CHECK(dec[1].first == P("x"));
    CHECK(dec[1].second == 3);

    dec = squarefree_decompose(P("y^4*(y+x)*(y^2-3*x)"));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == P("(y+x)*(y^2-3*x)").normalized());
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P("y"));
    CHECK(dec[1].second == 4);
}

TEST_CASE("squarefree decomposition reconstructs the input up to a constant") {
    std::mt19937_64 eng(13);
    for (int i = 0; i < 60; ++i) {
        BPoly a = random_poly(eng, 3, 3), b = random_poly(eng, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        BPoly f = a * b * b;
        BPoly prod(Rat(1));
        for (auto& [fac, m] : squarefree_decompose(f)) {
            BPoly rep = gcd(gcd(fac, fac.derivative_x()), gcd(fac, fac.derivative_y()));
            CHECK(rep.is_constant());
            prod = prod * fac.pow(m);
        }
        CHECK(prod.normalized() == f.normalized());
    }
}

TEST_CASE("resultants with the stated row convention") {
    UPoly r = resultant_y(P("y-x"), P("y+x"));
    REQUIRE(r.degree() == 1);
    CHECK(r.coeff(1) == 2);
    CHECK(r.coeff(0) == 0);

    r = resultant_y(P("y^2-x^3"), P("y"));
    REQUIRE(r.degree() == 3);
    CHECK(r.coeff(3) == -1);

    r = resultant_y(P("y^2-x^3+x*y"), P("1"));
    CHECK(r == UPoly::constant(Rat(1)));

    CHECK_THROWS_AS(resultant_y(P("x"), P("x+1")), both_constant_in_y);
}

TEST_CASE("resultant vanishes exactly on common roots") {
    // Res_y(f, g)(c) = 0 iff f(c,.) and g(c,.) share a root.
    UPoly r = resultant_y(P("y-x^2"), P("y-2*x"));
    CHECK(r.eval(Rat(0)) == 0);
    CHECK(r.eval(Rat(2)) == 0);
    CHECK(r.eval(Rat(1)) != 0);
}

TEST_CASE("rational roots") {
    // (X+1)^2 (X-1)
    UPoly u(std::vector<Rat>{Rat(-1), Rat(-1), Rat(1), Rat(1)});
    auto rr = rational_roots(u);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == -1);
    CHECK(rr.roots[0].second == 2);
    CHECK(rr.roots[1].first == 1);
    CHECK(rr.roots[1].second == 1);
    CHECK(rr.residual.is_constant());

    rr = rational_roots(UPoly(std::vector<Rat>{Rat(-3), Rat(1)}));
    REQUIRE(rr.roots.size() == 1);
    CHECK(rr.roots[0].first == 3);

    rr = rational_roots(UPoly(std::vector<Rat>{Rat(-3), Rat(0), Rat(1)}));
    CHECK(rr.roots.empty());
    CHECK(rr.residual.degree() == 2);
}

TEST_CASE("rational roots with fractional values and deflation residues") {
    // (2X-1)(3X+5)^2 (X^2+1)
    UPoly u = UPoly(std::vector<Rat>{Rat(-1), Rat(2)}) *
              UPoly(std::vector<Rat>{Rat(5), Rat(3)}) * UPoly(std::vector<Rat>{Rat(5), Rat(3)}) *
              UPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    auto rr = rational_roots(u);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == make_rat(-5, 3));
    CHECK(rr.roots[0].second == 2);
    CHECK(rr.roots[1].first == make_rat(1, 2));
    CHECK(rr.roots[1].second == 1);
    REQUIRE(rr.residual.degree() == 2);
    for (auto& [r, m] : rr.roots) CHECK(rr.residual.eval(r) != 0);
}

TEST_CASE("parse/print round trip on random polynomials") {
    std::mt19937_64 eng(17);
    for (int i = 0; i < 300; ++i) {
        BPoly f = random_poly(eng, 6, 8);
        BPoly g = parse_poly(f.to_string());
        CHECK(f == g);
    }
}

TEST_CASE("arbitrary precision coefficients flow through") {
    BPoly f = P("123456789012345678901234567890*x^2-1/98765432109876543210*y");
    CHECK(f.coeff(2, 0) == Rat(Int("123456789012345678901234567890")));
    CHECK(parse_poly(f.to_string()) == f);
    CHECK_THROWS_AS(rational_roots(UPoly()), zero_polynomial);
}
