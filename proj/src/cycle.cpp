#include "polar/cycle.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

void Cycle::add(const Ideal& prime, unsigned mult) {
    if (mult == 0) return;
    for (auto& c : components) {
        if (ideal_equal(c.prime, prime)) {
            c.mult += mult;
            return;
        }
    }
    components.push_back({prime, mult});
    std::sort(components.begin(), components.end(),
              [](const CycleComponent& a, const CycleComponent& b) {
                  return a.prime.str() < b.prime.str();
              });
}

Cycle Cycle::operator+(const Cycle& o) const {
    Cycle out = *this;
    for (const auto& c : o.components) out.add(c.prime, c.mult);
    return out;
}

std::string Cycle::str() const {
    if (components.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) os << " + ";
        if (components[i].mult != 1) os << components[i].mult << "*";
        os << "V" << components[i].prime.str();
    }
    return os.str();
}

bool cycle_equal(const Cycle& a, const Cycle& b) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i].mult != b.components[i].mult) return false;
        if (!ideal_equal(a.components[i].prime, b.components[i].prime)) return false;
    }
    return true;
}

void CandidateSet::add(const Ideal& prime, int dim, std::optional<RationalPoint> test_point) {
    for (auto& c : items)
        if (ideal_equal(c.prime, prime)) {
            if (!c.test_point && test_point) c.test_point = std::move(test_point);
            return;
        }
    items.push_back({prime, dim, std::move(test_point)});
}

Ideal gap_sheaf(const Ideal& I, const Ideal& W) { return saturate(I, W).ideal; }

std::optional<RationalPoint> find_curve_point(const Ideal& P, const std::vector<Ideal>& avoid) {
    static const int nums[] = {1, -1, 2, -2, 3, -3, 1, -1, 5, -5};
    static const int dens[] = {1, 1, 1, 1, 1, 1, 2, 2, 1, 1};
    const std::size_t n = P.ctx()->arity();
    for (std::size_t k = 0; k < std::size(nums); ++k) {
        Rational a(nums[k], dens[k]);
        a.canonicalize();
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial slice =
                Polynomial::variable(P.ctx(), i) - Polynomial(P.ctx(), a);
            Ideal J = ideal_sum(P, slice);
            if (J.is_unit()) continue;
            if (!vspace_dim(J)) continue;  // slice not finite
            for (const auto& pt : rational_points(J)) {
                bool bad = false;
                for (const auto& A : avoid)
                    if (contains_point(A, pt)) {
                        bad = true;
                        break;
                    }
                if (!bad) return pt;
            }
        }
    }
    return std::nullopt;
}

namespace {

// A slice is trusted when it cuts the reduced curve P with local length one,
// i.e. it is transverse to P at a smooth point.
std::optional<unsigned> sliced_length(const Ideal& I, const Ideal& P, const Polynomial& h,
                                      const RationalPoint& q) {
    if (membership(h, P, MembershipMode::Radical)) return std::nullopt;  // slice contains P
    Ideal check = ideal_sum(P, h);
    if (!isolated_or_absent_at(check, q)) return std::nullopt;
    if (length_at(check, q) != 1) return std::nullopt;
    return length_at(ideal_sum(I, h), q);
}

Polynomial random_hyperplane(const CtxPtr& ctx, const RationalPoint& q, Rng& rng) {
    Polynomial h(ctx);
    for (std::size_t i = 0; i < ctx->arity(); ++i) {
        int c = rng.int_in(-5, 5);
        if (c == 0) continue;
        h = h + (Polynomial::variable(ctx, i) - Polynomial(ctx, q.coords[i])).scaled(Rational(c));
    }
    return h;
}

}  // namespace

unsigned component_multiplicity(const Ideal& I, const Candidate& P, Rng& rng) {
    auto d = krull_dim(I);
    if (d && *d > 1) throw DimensionError("component_multiplicity requires dim <= 1");
    if (!radical_contains(P.prime, I)) return 0;

    RationalPoint q = P.test_point ? *P.test_point : [&] {
        auto found = find_curve_point(P.prime, {});
        if (!found)
            throw NeedsTestPointError("no rational test point found on " + P.prime.str());
        return *found;
    }();

    // first slice: coordinate hyperplane through q
    std::optional<unsigned> first;
    for (std::size_t i = 0; i < I.ctx()->arity() && !first; ++i) {
        Polynomial h = Polynomial::variable(I.ctx(), i) - Polynomial(I.ctx(), q.coords[i]);
        first = sliced_length(I, P.prime, h, q);
    }
    // fall back to (and in any case validate with) seeded random hyperplanes
    std::optional<unsigned> second;
    for (int attempt = 0; attempt < 20 && !second; ++attempt)
        second = sliced_length(I, P.prime, random_hyperplane(I.ctx(), q, rng), q);
    if (!first) first = second, second.reset();
    if (!second)
        for (int attempt = 0; attempt < 20 && !second; ++attempt)
            second = sliced_length(I, P.prime, random_hyperplane(I.ctx(), q, rng), q);
    if (!first || !second)
        throw GenericityError("no transverse slice of " + P.prime.str() + " at " + q.str());
    if (*first != *second)
        throw GenericityError("slice multiplicities disagree (" + std::to_string(*first) + " vs " +
                              std::to_string(*second) + ") along " + P.prime.str());
    return *first;
}

namespace {

// Variable factors of a principal generator are components in their own
// right; offering them as candidates lets monomial-divisible inputs
// decompose without user-supplied primes.
void harvest_monomial_factors(const Ideal& I, CandidateSet& cands) {
    if (I.gens().size() != 1) return;
    const Polynomial& g = I.gens().front();
    const std::size_t n = I.ctx()->arity();
    for (std::size_t v = 0; v < n; ++v) {
        unsigned minexp = UINT_MAX;
        for (const auto& [e, c] : g.terms()) minexp = std::min(minexp, e[v]);
        if (minexp > 0)
            cands.add(Ideal(I.ctx(), {Polynomial::variable(I.ctx(), v)}),
                      static_cast<int>(n) - 1);
    }
}

}  // namespace

Cycle cycle_of_ideal(const Ideal& I, const CandidateSet& cands_in, Rng& rng,
                     const RationalPoint* germ_at) {
    Cycle out;
    auto d = krull_dim(I);
    if (!d) return out;
    if (*d > 1) throw DimensionError("cycle_of_ideal implemented for dim <= 1");

    CandidateSet cands = cands_in;
    harvest_monomial_factors(I, cands);

    for (const auto& cand : cands.items) {
        if (cand.dim != *d) continue;
        auto pd = krull_dim(cand.prime);
        if (!pd || *pd != *d) continue;
        if (!radical_contains(cand.prime, I)) continue;
        unsigned m;
        if (*d == 0) {
            auto pts = rational_points(cand.prime);
            if (pts.empty())
                throw NeedsTestPointError("candidate point " + cand.prime.str() + " is irrational");
            m = length_at(I, pts.front());
        } else {
            Candidate local = cand;
            if (!local.test_point) {
                // avoid other components, but not sets containing this curve
                std::vector<Ideal> avoid;
                for (const auto& other : cands.items) {
                    if (ideal_equal(other.prime, cand.prime)) continue;
                    if (radical_contains(cand.prime, other.prime)) continue;
                    avoid.push_back(other.prime);
                }
                local.test_point = find_curve_point(cand.prime, avoid);
                if (!local.test_point)
                    throw NeedsTestPointError("no rational test point found on " +
                                              cand.prime.str());
            }
            m = component_multiplicity(I, local, rng);
        }
        if (m > 0) out.add(cand.prime, m);
    }

    Ideal residual = I;
    for (const auto& c : out.components) residual = saturate(residual, c.prime).ideal;
    auto rd = krull_dim(residual);
    if (rd && *rd >= *d) {
        bool tolerable = germ_at && !contains_point(residual, *germ_at);
        if (!tolerable)
            throw UnresolvedComponentError(
                "candidates do not cover the top-dimensional part of " + I.str() +
                    "; residual " + residual.str(),
                residual.str());
    }
    if (germ_at)
        std::erase_if(out.components,
                      [&](const CycleComponent& c) { return !contains_point(c.prime, *germ_at); });
    return out;
}

unsigned intersection_number_at(const Cycle& C, const Polynomial& h, const RationalPoint& p) {
    unsigned total = 0;
    for (const auto& [P, m] : C.components) {
        if (contains_point(P, p) && membership(h, P, MembershipMode::Radical))
            throw NonProperError("component " + P.str() + " lies inside V(" + h.str() +
                                 ") through " + p.str());
        total += m * length_at(ideal_sum(P, h), p);
    }
    return total;
}

}  // namespace polar
