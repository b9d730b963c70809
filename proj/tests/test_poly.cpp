#include <doctest.h>

#include <random>

#include "tknot/census.hpp"
#include "tknot/poly.hpp"

using tknot::XPoly;

namespace {

XPoly P(const char* s) { return XPoly::parse(s); }

XPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 5), xd(0, 4), ad(-8, 8), c(-4, 4);
    XPoly p;
    for (int i = terms(rng); i > 0; --i) p += XPoly::monomial(c(rng), xd(rng), ad(rng));
    return p;
}

}  // namespace

TEST_CASE("addition normalizes") {
    CHECK(XPoly::x() + XPoly() == XPoly::x());
    CHECK((XPoly::a(-4) + (-XPoly::a(-4))).is_zero());
    CHECK((XPoly::a(-4) - XPoly::a(-4)).str() == "0");
    XPoly s = P("x^2*a^-4") + P("-a^-4-1");
    CHECK(s == -P("-x^2*a^-4+a^-4+1"));
    CHECK(s.str() == "x^2*a^-4-1-a^-4");
}

TEST_CASE("multiplication") {
    XPoly p = P("3*x*a^2-a^-1");
    CHECK(p * XPoly::constant(1) == p);
    CHECK(tknot::circle_power(1) * tknot::circle_power(1) == P("a^4+2+a^-4"));
    XPoly neg_a_cubed_inv = -XPoly::a(-3);
    CHECK(XPoly::x() * neg_a_cubed_inv == P("-x*a^-3"));
}

TEST_CASE("circle powers") {
    CHECK(tknot::circle_power(0) == XPoly::constant(1));
    CHECK(tknot::circle_power(1).str() == "-a^2-a^-2");
    CHECK(tknot::circle_power(2).str() == "a^4+2+a^-4");
    CHECK(tknot::circle_power(3) == tknot::circle_power(2) * tknot::circle_power(1));
}

TEST_CASE("mirror") {
    CHECK(XPoly::x().mirror_a() == XPoly::x());
    XPoly two_one = P("x^3*a^-8 + x*(-2*a^-8 - a^-4)");
    CHECK(two_one.mirror_a() == P("x^3*a^8 + x*(-2*a^8 - a^4)"));
    CHECK(two_one.mirror_a().mirror_a() == two_one);
}

TEST_CASE("canonical order") {
    XPoly p = P("x^2-a^3");
    CHECK(tknot::canonical_compare(p, p) == std::strong_ordering::equal);
    CHECK(tknot::canonical_compare(XPoly(), XPoly::x()) == std::strong_ordering::less);
    CHECK(tknot::canonical_compare(P("x*a^-1"), P("x*a")) == std::strong_ordering::less);
    CHECK(tknot::canonical_mirror_rep(P("x*a")) == P("x*a^-1"));
}

TEST_CASE("text codec") {
    CHECK(XPoly::x().str() == "x");
    CHECK(tknot::circle_power(1).str() == "-a^2-a^-2");
    XPoly two_one = P("x^3*a^-8 + x*(-2*a^-8 - a^-4)");
    CHECK(two_one == XPoly::monomial(1, 3, -8) + XPoly::monomial(-2, 1, -8) + XPoly::monomial(-1, 1, -4));
    CHECK(two_one.str() == "x^3*a^-8-x*a^-4-2*x*a^-8");
    CHECK(P("x a^2") == XPoly::monomial(1, 1, 2));
    CHECK(P("-(x^2*a^-4 - a^-4 - 1)") == P("-x^2*a^-4+a^-4+1"));
    CHECK(XPoly::parse("0").is_zero());
}

TEST_CASE("parse errors carry a position") {
    for (const char* bad : {"x^", "3*", "a^-", "(x", "x^-1", "x+*a", "y"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(XPoly::parse(bad), tknot::ParseError);
    }
    try {
        XPoly::parse("x + ?");
        FAIL("no throw");
    } catch (const tknot::ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("every shipped table polynomial round-trips") {
    auto expected = tknot::load_expected_file(tknot::default_expected_path());
    CHECK(expected.size() == 64);
    for (const auto& e : expected) {
        CAPTURE(e.label);
        CHECK(XPoly::parse(e.poly.str()) == e.poly);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        XPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q).mirror_a() == p.mirror_a() * q.mirror_a());
        CHECK((p + q).mirror_a() == p.mirror_a() + q.mirror_a());
        CHECK(XPoly::parse(p.str()) == p);
        auto c = tknot::canonical_compare(p, q);
        CHECK((c == std::strong_ordering::equal) == (p == q));
        CHECK(tknot::canonical_compare(q, p) == (0 <=> c));
    }
}
