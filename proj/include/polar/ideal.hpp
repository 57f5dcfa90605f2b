#ifndef POLAR_IDEAL_HPP
#define POLAR_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "polar/order.hpp"
#include "polar/polynomial.hpp"

namespace polar {

// Global S-pair budget for Groebner computations; fail loudly, never hang.
long groebner_budget();
void set_groebner_budget(long max_spairs);

// A polynomial ideal with per-order reduced-Groebner-basis caching. Values
// are immutable; the cache is write-once per order and shared across copies.
class Ideal {
public:
    Ideal(CtxPtr ctx, std::vector<Polynomial> gens);

    static Ideal zero(const CtxPtr& ctx);
    static Ideal unit(const CtxPtr& ctx);
    // The maximal ideal (z0 - p0, ..., zn - pn) of a rational point.
    static Ideal point(const RationalPoint& pt);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    // Reduced Groebner basis; empty for the zero ideal.
    const std::vector<Polynomial>& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit() const;

    std::string str() const;  // canonical: reduced grevlex basis

private:
    CtxPtr ctx_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::vector<Polynomial>> bases;
    };
    std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& p, const Ideal& I,
                       const MonomialOrder& ord = MonomialOrder::grevlex());

enum class MembershipMode { Exact, Radical };

bool membership(const Polynomial& p, const Ideal& I, MembershipMode mode);

bool ideal_equal(const Ideal& I, const Ideal& J);

// Each generator of J lies in the radical of I, i.e. V(I) is contained in V(J).
bool radical_contains(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Polynomial& p);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

struct Saturation {
    Ideal ideal;
    int index;  // first exponent at which the quotient chain stabilizes
};
Saturation saturate(const Ideal& I, const Ideal& J);

// I intersected with the subring in the kept variables (result lives in the
// same context).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& keep);

// Krull dimension of V(I); nullopt encodes the empty set.
std::optional<int> krull_dim(const Ideal& I);

// Number of standard monomials; nullopt encodes an infinite-dimensional
// quotient (positive-dimensional ideal).
std::optional<unsigned> vspace_dim(const Ideal& I);

// The part of I supported away from p, i.e. I : (m_p)^infinity.
Ideal away_part(const Ideal& I, const RationalPoint& pt);

// The m_p-primary part of I (unit ideal when p is not an isolated or
// embedded point of V(I)).
Ideal isolated_part_at(const Ideal& I, const RationalPoint& pt);

// True when p is not on any positive-dimensional component of V(I).
bool isolated_or_absent_at(const Ideal& I, const RationalPoint& pt);

// Length of the local ring at p; requires p isolated in (or absent from)
// V(I). Returns 0 when p is not in V(I).
unsigned length_at(const Ideal& I, const RationalPoint& pt);

// Spec-facing wrapper: requires krull_dim(I) <= 0 and delegates to length_at.
unsigned local_multiplicity(const Ideal& I, const RationalPoint& pt);

bool contains_point(const Ideal& I, const RationalPoint& pt);

// All rational points of a zero-dimensional ideal.
std::vector<RationalPoint> rational_points(const Ideal& I);

// Rational roots of a univariate polynomial in variable `var` of its context.
std::vector<Rational> rational_roots_univariate(const Polynomial& p, std::size_t var);

}  // namespace polar

#endif
