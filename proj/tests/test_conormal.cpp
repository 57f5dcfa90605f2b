#include "doctest.h"
#include "helpers.hpp"
#include "polar/conormal.hpp"
#include "polar/errors.hpp"

using namespace pt;

namespace {

struct Fixture {
    CtxPtr amb = ctx_xyt();
    CtxPtr dc = VarContext::make_doubled(amb);
};

}  // namespace

TEST_CASE("conormals of smooth closures") {
    Fixture fx;
    // hyperplane V(y): covectors proportional to dy
    ConormalIdeal s1 =
        conormal_ideal(fx.dc, {P(fx.amb, "y")}, presentation_singular_ideal(fx.amb, {P(fx.amb, "y")}));
    CHECK(ideal_equal(s1.ideal, I(fx.dc, {"y", "w0", "w2"})));

    // codimension-two line V(x, y)
    std::vector<Polynomial> line = {P(fx.amb, "x"), P(fx.amb, "y")};
    ConormalIdeal s3 = conormal_ideal(fx.dc, line, presentation_singular_ideal(fx.amb, line));
    CHECK(ideal_equal(s3.ideal, I(fx.dc, {"x", "y", "w2"})));

    // whole space: the zero section
    ConormalIdeal amb = conormal_ideal(fx.dc, {}, Ideal::unit(fx.amb));
    CHECK(ideal_equal(amb.ideal, I(fx.dc, {"w0", "w1", "w2"})));

    // the parabola-axis curve V(x + t^2, y)
    std::vector<Polynomial> s4gens = {P(fx.amb, "x + t^2"), P(fx.amb, "y")};
    ConormalIdeal s4 = conormal_ideal(fx.dc, s4gens, presentation_singular_ideal(fx.amb, s4gens));
    CHECK(ideal_equal(s4.ideal, I(fx.dc, {"x + t^2", "y", "w2 - 2*t*w0"})));

    // a point carries the full cotangent fiber
    std::vector<Polynomial> pt0 = {P(fx.amb, "x"), P(fx.amb, "y"), P(fx.amb, "t")};
    ConormalIdeal o = conormal_ideal(fx.dc, pt0, presentation_singular_ideal(fx.amb, pt0));
    CHECK(ideal_equal(o.ideal, I(fx.dc, {"x", "y", "t"})));
}

TEST_CASE("degenerate presentations are rejected") {
    Fixture fx;
    std::vector<Polynomial> dup = {P(fx.amb, "y"), P(fx.amb, "y")};
    CHECK_THROWS_AS(conormal_ideal(fx.dc, dup, Ideal::unit(fx.amb)), PresentationError);
}

TEST_CASE("the singular surface conormal separates limit covectors") {
    Fixture fx;
    std::vector<Polynomial> s2 = {P(fx.amb, "y^2 - x^3 - t^2*x^2")};
    ConormalIdeal c = conormal_ideal(fx.dc, s2, presentation_singular_ideal(fx.amb, s2));
    // the honest conormal direction at the smooth point (3, 6, 1)
    RationalPoint good = pt_of(fx.dc, {"3", "6", "1", "-33", "12", "-18"});
    CHECK(contains_point(c.ideal, good));
    // dt at the origin is not a limit of conormals from the smooth part
    RationalPoint dt = pt_of(fx.dc, {"0", "0", "0", "0", "0", "1"});
    CHECK_FALSE(contains_point(c.ideal, dt));
}

TEST_CASE("relative conormals of the worked example") {
    Fixture fx;
    Polynomial f = P(fx.amb, "x");

    // S1: closure V(y)
    ConormalIdeal r1 = relative_conormal_ideal(
        fx.dc, {P(fx.amb, "y")}, presentation_singular_ideal(fx.amb, {P(fx.amb, "y")}), f);
    CHECK(ideal_equal(r1.ideal, I(fx.dc, {"y", "w2"})));

    // S4: closure V(x + t^2, y); the relative conormal is the whole fiber
    std::vector<Polynomial> s4 = {P(fx.amb, "x + t^2"), P(fx.amb, "y")};
    ConormalIdeal r4 =
        relative_conormal_ideal(fx.dc, s4, presentation_singular_ideal(fx.amb, s4), f);
    CHECK(ideal_equal(r4.ideal, I(fx.dc, {"x + t^2", "y"})));

    // S2: the gap-sheaf step must produce the corrected generator
    std::vector<Polynomial> s2 = {P(fx.amb, "y^2 - x^3 - t^2*x^2")};
    ConormalIdeal r2 =
        relative_conormal_ideal(fx.dc, s2, presentation_singular_ideal(fx.amb, s2), f);
    CHECK(membership(P(fx.dc, "(x + t^2)*w2 + y*t*w1"), r2.ideal, MembershipMode::Exact));
    CHECK(membership(P(fx.dc, "y^2 - x^3 - t^2*x^2"), r2.ideal, MembershipMode::Exact));
    CHECK(membership(P(fx.dc, "y*w2 + t*x^2*w1"), r2.ideal, MembershipMode::Exact));
    // and agrees with the displayed cycle generators up to radical
    Ideal display = I(fx.dc, {"y^2 - x^3 - t^2*x^2", "y*w2 + t*x^2*w1", "(x + t^2)*w2 + y*t*w1"});
    CHECK(radical_contains(display, r2.ideal));
    CHECK(radical_contains(r2.ideal, display));

    // constant functions on a stratum are rejected
    CHECK_THROWS(relative_conormal_ideal(fx.dc, {P(fx.amb, "x"), P(fx.amb, "y")},
                                         presentation_singular_ideal(
                                             fx.amb, {P(fx.amb, "x"), P(fx.amb, "y")}),
                                         f));
}

TEST_CASE("differential graphs") {
    Fixture fx;
    CHECK(ideal_equal(im_d(fx.dc, P(fx.amb, "t")), I(fx.dc, {"w0", "w1", "w2 - 1"})));
    CHECK(ideal_equal(im_d(fx.dc, P(fx.amb, "0")), I(fx.dc, {"w0", "w1", "w2"})));
    CHECK(ideal_equal(im_d(fx.dc, P(fx.amb, "x + y")), I(fx.dc, {"w0 - 1", "w1 - 1", "w2"})));
}

TEST_CASE("substituting the differential graph realizes the projected intersection") {
    Fixture fx;
    Polynomial f = P(fx.amb, "x"), g = P(fx.amb, "t");

    std::vector<Polynomial> s2 = {P(fx.amb, "y^2 - x^3 - t^2*x^2")};
    ConormalIdeal r2 =
        relative_conormal_ideal(fx.dc, s2, presentation_singular_ideal(fx.amb, s2), f);
    Ideal down = intersect_im_d(r2, g);
    CHECK(ideal_equal(down, I(fx.amb, {"x + t^2", "y"})));

    ConormalIdeal r1 = relative_conormal_ideal(
        fx.dc, {P(fx.amb, "y")}, presentation_singular_ideal(fx.amb, {P(fx.amb, "y")}), f);
    CHECK(intersect_im_d(r1, g).is_unit());

    std::vector<Polynomial> s4 = {P(fx.amb, "x + t^2"), P(fx.amb, "y")};
    ConormalIdeal r4 =
        relative_conormal_ideal(fx.dc, s4, presentation_singular_ideal(fx.amb, s4), f);
    CHECK(ideal_equal(intersect_im_d(r4, g), I(fx.amb, {"x + t^2", "y"})));
}

TEST_CASE("relative conormal always contains the graph of df over the stratum") {
    Fixture fx;
    Polynomial f = P(fx.amb, "x");
    std::vector<Polynomial> s2 = {P(fx.amb, "y^2 - x^3 - t^2*x^2")};
    ConormalIdeal r2 =
        relative_conormal_ideal(fx.dc, s2, presentation_singular_ideal(fx.amb, s2), f);
    // substituting w = df must land back inside the stratum closure
    Ideal pullback = intersect_im_d(r2, f);
    CHECK(membership(P(fx.amb, "y^2 - x^3 - t^2*x^2"), pullback, MembershipMode::Exact));
    CHECK(radical_contains(pullback, I(fx.amb, {"y^2 - x^3 - t^2*x^2"})));
}

TEST_CASE("stratified critical locus of the first coordinate") {
    Fixture fx;
    Polynomial f = P(fx.amb, "x");
    std::vector<std::pair<ConormalIdeal, bool>> strata;
    auto add = [&](std::vector<Polynomial> gens) {
        strata.emplace_back(
            conormal_ideal(fx.dc, gens, presentation_singular_ideal(fx.amb, gens)), true);
    };
    add({P(fx.amb, "y")});
    add({P(fx.amb, "y^2 - x^3 - t^2*x^2")});
    add({P(fx.amb, "x"), P(fx.amb, "y")});
    add({P(fx.amb, "x + t^2"), P(fx.amb, "y")});
    add({P(fx.amb, "x"), P(fx.amb, "y"), P(fx.amb, "t")});

    auto crit = critical_locus(strata, f);
    // every returned piece lies in V(x,y) or V(x+t^2,y)
    for (const auto& A : crit) {
        bool inside = radical_contains(A, I(fx.amb, {"x", "y"})) ||
                      radical_contains(A, I(fx.amb, {"x + t^2", "y"}));
        CHECK(inside);
    }
    // smooth ambient with a coordinate function is critical nowhere
    std::vector<std::pair<ConormalIdeal, bool>> smooth;
    smooth.emplace_back(conormal_ideal(fx.dc, {}, Ideal::unit(fx.amb)), true);
    CHECK(critical_locus(smooth, f).empty());
    // a constant function is critical along every visible stratum
    CHECK(critical_locus(smooth, P(fx.amb, "0")).size() == 1);
}

TEST_CASE("every conormal contains its closure ideal") {
    Fixture fx;
    std::vector<std::vector<Polynomial>> closures = {
        {P(fx.amb, "y")},
        {P(fx.amb, "y^2 - x^3 - t^2*x^2")},
        {P(fx.amb, "x"), P(fx.amb, "y")},
        {P(fx.amb, "x + t^2"), P(fx.amb, "y")},
        {P(fx.amb, "x"), P(fx.amb, "y"), P(fx.amb, "t")}};
    for (const auto& gens : closures) {
        ConormalIdeal c = conormal_ideal(fx.dc, gens, presentation_singular_ideal(fx.amb, gens));
        for (const auto& h : gens)
            CHECK(membership(h.embedded(fx.dc), c.ideal, MembershipMode::Exact));
    }
}
