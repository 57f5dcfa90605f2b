#include "doctest.h"
#include "helpers.hpp"
#include "polar/errors.hpp"

using namespace pt;

TEST_CASE("parse the running-example defining function") {
    auto c = ctx_xyt();
    Polynomial f = P(c, "y*(y^2 - x^3 - t^2*x^2)");
    CHECK(f.term_count() == 3);
    CHECK(f == P(c, "y^3 - x^3*y - t^2*x^2*y"));
}

TEST_CASE("zero and cancellation") {
    auto c = ctx_xyt();
    CHECK(P(c, "0").is_zero());
    CHECK(P(c, "x - x").is_zero());
    CHECK(P(c, "x*y - y*x").is_zero());
}

TEST_CASE("parse errors carry positions") {
    auto c = ctx_xyt();
    CHECK_THROWS_AS(P(c, "x + q"), ParseError);
    CHECK_THROWS_AS(P(c, "x +"), ParseError);
    CHECK_THROWS_AS(P(c, "2x"), ParseError);  // juxtaposition is not multiplication
    CHECK_THROWS_AS(P(c, "(x"), ParseError);
}

TEST_CASE("rational literals") {
    auto c = ctx_xy();
    CHECK(P(c, "1/2*x + 1/2*x") == P(c, "x"));
    CHECK(P(c, "2/4") == P(c, "1/2"));
}

TEST_CASE("partial derivatives of the running example") {
    auto c = ctx_xyt();
    Polynomial f = P(c, "y*(y^2 - x^3 - t^2*x^2)");
    CHECK(f.derivative("x") == P(c, "y*(-3*x^2 - 2*t^2*x)"));
    CHECK(f.derivative("y") == P(c, "3*y^2 - x^3 - t^2*x^2"));
    CHECK(P(c, "5").derivative("x").is_zero());
    CHECK_THROWS_AS(f.derivative("q"), DimensionError);
}

TEST_CASE("substitution realizes intersection with a differential graph") {
    auto amb = ctx_xyt();
    auto c = VarContext::make_doubled(amb);
    auto idx = [&](const char* n) { return *c->index_of(n); };
    std::map<std::size_t, Polynomial> bind{{idx("w1"), Polynomial(c)},
                                           {idx("w2"), Polynomial(c, Rational(1))}};
    CHECK(P(c, "y*w2 + t*x^2*w1").substituted(bind) == P(c, "y"));
    CHECK(P(c, "(x + t^2)*w2 + y*t*w1").substituted(bind) == P(c, "x + t^2"));
    Polynomial q = P(c, "x*w0 - y^2");
    CHECK(q.substituted({}) == q);
}

TEST_CASE("vanishing order") {
    auto c = ctx_xy();
    CHECK(vanishing_order(P(c, "y^2 - x^3"), RationalPoint::origin(c)) == 2);
    CHECK(vanishing_order(P(c, "x"), RationalPoint::origin(c)) == 1);
    auto c3 = ctx_xyt();
    CHECK(vanishing_order(P(c3, "x + t^2"), pt_of(c3, {"-1", "0", "1"})) == 1);
    CHECK_THROWS_AS(vanishing_order(P(c, "0"), RationalPoint::origin(c)), DimensionError);
}

TEST_CASE("print/parse round trip on random polynomials") {
    auto c = ctx_xyt();
    Rng rng(7001);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(c, rng);
        CHECK(P(c, p.str()) == p);
    }
}

TEST_CASE("ring laws on random polynomials") {
    auto c = ctx_xy();
    Rng rng(7002);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(c, rng), b = random_poly(c, rng), d = random_poly(c, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
    }
}

TEST_CASE("derivative is linear and satisfies Leibniz") {
    auto c = ctx_xy();
    Rng rng(7003);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(c, rng), b = random_poly(c, rng);
        std::size_t v = static_cast<std::size_t>(rng.int_in(0, 1));
        CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
        CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("substitution composes") {
    auto c = ctx_xyt();
    Rng rng(7004);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(c, rng);
        Polynomial u = random_poly(c, rng, 3, 2), v = random_poly(c, rng, 3, 2);
        // x -> u, then everywhere t -> v equals the single substitution
        // {x -> u with t replaced by v, t -> v}
        std::map<std::size_t, Polynomial> first{{0, u}};
        std::map<std::size_t, Polynomial> second{{2, v}};
        std::map<std::size_t, Polynomial> fused{{0, u.substituted(second)}, {2, v}};
        CHECK(p.substituted(first).substituted(second) == p.substituted(fused));
    }
}

TEST_CASE("translation moves the base point") {
    auto c = ctx_xyt();
    Polynomial f = P(c, "x + t^2");
    RationalPoint q = pt_of(c, {"-1", "0", "1"});
    Polynomial g = f.translated(q);
    CHECK(g.evaluate(RationalPoint::origin(c)) == f.evaluate(q));
}
