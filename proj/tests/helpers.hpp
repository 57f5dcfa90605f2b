#ifndef POLAR_TESTS_HELPERS_HPP
#define POLAR_TESTS_HELPERS_HPP

#include <vector>

#include "polar/cycle.hpp"
#include "polar/ideal.hpp"
#include "polar/polynomial.hpp"
#include "polar/rng.hpp"

namespace pt {

using namespace polar;

inline CtxPtr ctx_xyt() { return VarContext::make({"x", "y", "t"}); }
inline CtxPtr ctx_xy() { return VarContext::make({"x", "y"}); }

inline Polynomial P(const CtxPtr& c, const std::string& s) { return parse_poly(s, c); }

inline Ideal I(const CtxPtr& c, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, c));
    return Ideal(c, std::move(ps));
}

inline RationalPoint pt_of(const CtxPtr& c, const std::vector<std::string>& coords) {
    RationalPoint p{c, {}};
    for (const auto& s : coords) p.coords.push_back(rational_from_string(s));
    return p;
}

// Random polynomial with small integer coefficients.
inline Polynomial random_poly(const CtxPtr& c, Rng& rng, unsigned max_terms = 4,
                              unsigned max_deg = 3) {
    Polynomial p(c);
    unsigned nterms = static_cast<unsigned>(rng.int_in(0, static_cast<int>(max_terms)));
    for (unsigned k = 0; k < nterms; ++k) {
        Exponents e(c->arity(), 0);
        unsigned budget = max_deg;
        for (std::size_t i = 0; i < c->arity(); ++i) {
            unsigned d = static_cast<unsigned>(rng.int_in(0, static_cast<int>(budget)));
            e[i] = d;
            budget -= d;
        }
        p = p + Polynomial::monomial(c, e, Rational(rng.int_in(-4, 4)));
    }
    return p;
}

inline Polynomial random_nonzero_poly(const CtxPtr& c, Rng& rng, unsigned max_terms = 4,
                                      unsigned max_deg = 3) {
    for (;;) {
        Polynomial p = random_poly(c, rng, max_terms, max_deg);
        if (!p.is_zero()) return p;
    }
}

}  // namespace pt

#include "polar/problem.hpp"

namespace pt {

// The running example: X = V(y(y^2 - x^3 - t^2 x^2)) in C^3 with the shifted
// constant sheaf, f = x, g = t.
inline ProblemSpec example26_spec() {
    ProblemSpec s;
    s.ambient = ctx_xyt();
    s.doubled = VarContext::make_doubled(s.ambient);
    s.space_components = {P(s.ambient, "y"), P(s.ambient, "y^2 - x^3 - t^2*x^2")};
    s.shift = 2;
    s.f = P(s.ambient, "x");
    s.g = P(s.ambient, "t");

    StratumSpec s1{"S1", {P(s.ambient, "y")}, {"S3", "S4", "O"}, 2, std::nullopt, std::nullopt};
    StratumSpec s2{"S2",
                   {P(s.ambient, "y^2 - x^3 - t^2*x^2")},
                   {"S3", "S4", "O"},
                   2,
                   std::nullopt,
                   std::nullopt};
    StratumSpec s3{"S3",
                   {P(s.ambient, "x"), P(s.ambient, "y")},
                   {"O"},
                   1,
                   pt_of(s.ambient, {"0", "0", "1"}),
                   std::nullopt};
    StratumSpec s4{"S4",
                   {P(s.ambient, "x + t^2"), P(s.ambient, "y")},
                   {"O"},
                   1,
                   pt_of(s.ambient, {"-1", "0", "1"}),
                   std::nullopt};
    StratumSpec o{"O",
                  {P(s.ambient, "x"), P(s.ambient, "y"), P(s.ambient, "t")},
                  {},
                  0,
                  std::nullopt,
                  std::nullopt};
    s.strata = {s1, s2, s3, s4, o};

    s.candidates.add(I(s.ambient, {"x", "y"}), 1, pt_of(s.ambient, {"0", "0", "1"}));
    s.candidates.add(I(s.ambient, {"x + t^2", "y"}), 1, pt_of(s.ambient, {"-1", "0", "1"}));
    s.candidates.add(I(s.ambient, {"3*x + 2*t^2", "3*y^2 - x^3 - t^2*x^2"}), 1,
                     pt_of(s.ambient, {"-2/3", "2/9", "1"}));
    return s;
}

// Two planes in C^4 meeting only at the origin, with the origin Morse data
// supplied as an override.
inline ProblemSpec two_planes_spec() {
    ProblemSpec s;
    s.ambient = VarContext::make({"x", "y", "z", "t"});
    s.doubled = VarContext::make_doubled(s.ambient);
    s.shift = 2;
    s.f = P(s.ambient, "x + z");
    s.g = P(s.ambient, "y + t");

    StratumSpec p1{"P1", {P(s.ambient, "z"), P(s.ambient, "t")}, {"O"}, 2, std::nullopt,
                   std::nullopt};
    StratumSpec p2{"P2", {P(s.ambient, "x"), P(s.ambient, "y")}, {"O"}, 2, std::nullopt,
                   std::nullopt};
    StratumSpec o{"O",
                  {P(s.ambient, "x"), P(s.ambient, "y"), P(s.ambient, "z"), P(s.ambient, "t")},
                  {},
                  0,
                  std::nullopt,
                  std::vector<MorseEntry>{{-1, FGAbelianGroup::free(1)}}};
    s.strata = {p1, p2, o};
    return s;
}

// Whole ambient space C^3 with f = y^2 - t x^2, g = x.
inline ProblemSpec rem_main2_spec() {
    ProblemSpec s;
    s.ambient = ctx_xyt();
    s.doubled = VarContext::make_doubled(s.ambient);
    s.shift = 3;
    s.f = P(s.ambient, "y^2 - t*x^2");
    s.g = P(s.ambient, "x");
    StratumSpec all{"A", {}, {}, 3, std::nullopt, std::nullopt};
    s.strata = {all};
    s.candidates.add(I(s.ambient, {"x", "y"}), 1, pt_of(s.ambient, {"0", "0", "1"}));
    return s;
}

// The cuspidal cubic in the plane.
inline ProblemSpec cusp_spec() {
    ProblemSpec s;
    s.ambient = ctx_xy();
    s.doubled = VarContext::make_doubled(s.ambient);
    s.space_components = {P(s.ambient, "y^2 - x^3")};
    s.shift = 1;
    s.f = P(s.ambient, "y^2 - x^3");
    s.g = P(s.ambient, "x");
    StratumSpec reg{"C", {P(s.ambient, "y^2 - x^3")}, {"O"}, 1, pt_of(s.ambient, {"1", "1"}),
                    std::nullopt};
    StratumSpec o{"O", {P(s.ambient, "x"), P(s.ambient, "y")}, {}, 0, std::nullopt, std::nullopt};
    s.strata = {reg, o};
    return s;
}

}  // namespace pt

#endif
