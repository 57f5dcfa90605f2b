#include "polar/problem.hpp"

#include <set>

#include "polar/errors.hpp"

namespace polar {

Ideal ProblemSpec::closure_ideal(const StratumSpec& st) const {
    return Ideal(ambient, st.closure);
}

const StratumSpec* ProblemSpec::stratum(const std::string& name) const {
    for (const auto& st : strata)
        if (st.name == name) return &st;
    return nullptr;
}

int ProblemSpec::space_dim() const {
    int d = 0;
    for (const auto& st : strata) d = std::max(d, st.dim);
    return d;
}

Polynomial ProblemSpec::space_product() const {
    if (space_components.empty())
        throw ValidationError("space has no hypersurface presentation", "/space/components");
    Polynomial p(ambient, Rational(1));
    for (const auto& c : space_components) p = p * c;
    return p;
}

void validate_problem(const ProblemSpec& spec) {
    if (spec.strata.empty()) throw ValidationError("no strata", "/strata");
    const RationalPoint origin = RationalPoint::origin(spec.ambient);

    if (spec.f.is_zero() || spec.f.evaluate(origin) != 0)
        throw ValidationError("f must be nonzero and vanish at the origin", "/f");
    if (spec.g.is_zero() || spec.g.evaluate(origin) != 0)
        throw ValidationError("g must be nonzero and vanish at the origin", "/g");

    std::set<std::string> names;
    for (std::size_t i = 0; i < spec.strata.size(); ++i) {
        const auto& st = spec.strata[i];
        const std::string at = "/strata/" + std::to_string(i);
        if (!names.insert(st.name).second)
            throw ValidationError("duplicate stratum name '" + st.name + "'", at);

        Ideal closure = spec.closure_ideal(st);
        auto d = krull_dim(closure);
        if (!d || *d != st.dim)
            throw ValidationError("declared dimension " + std::to_string(st.dim) +
                                      " does not match the closure of '" + st.name + "'",
                                  at + "/dim");
        if (st.dim != static_cast<int>(spec.ambient->arity() - st.closure.size()))
            throw ValidationError(
                "closure of '" + st.name +
                    "' is not a set-theoretic complete-intersection presentation "
                    "(generator count must equal the codimension)",
                at + "/closure");
        if (!contains_point(closure, origin))
            throw ValidationError("closure of '" + st.name + "' misses the origin", at);

        for (const auto& m : st.minus)
            if (!spec.stratum(m))
                throw ValidationError("unknown stratum '" + m + "' in subtract list", at + "/minus");

        if (st.test_point) {
            if (st.test_point->coords.size() != spec.ambient->arity())
                throw ValidationError("test point arity mismatch", at + "/test_point");
            if (!contains_point(closure, *st.test_point))
                throw ValidationError("test point of '" + st.name + "' is off its closure",
                                      at + "/test_point");
            for (const auto& m : st.minus) {
                const StratumSpec* sub = spec.stratum(m);
                if (sub && contains_point(spec.closure_ideal(*sub), *st.test_point))
                    throw ValidationError("test point of '" + st.name +
                                              "' lies on subtracted stratum '" + m + "'",
                                          at + "/test_point");
            }
        }
    }

    // coverage: V(product of components) must be the union of the closures
    if (!spec.space_components.empty()) {
        Polynomial prod = spec.space_product();
        Ideal inter = spec.closure_ideal(spec.strata.front());
        for (std::size_t i = 1; i < spec.strata.size(); ++i)
            inter = ideal_intersect(inter, spec.closure_ideal(spec.strata[i]));
        Ideal hyp(spec.ambient, {prod});
        for (const auto& gen : inter.gens())
            if (!membership(gen, hyp, MembershipMode::Radical))
                throw ValidationError("strata closures do not cover the space", "/strata");
    }
}

}  // namespace polar
