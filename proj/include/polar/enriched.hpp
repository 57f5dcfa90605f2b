#ifndef POLAR_ENRICHED_HPP
#define POLAR_ENRICHED_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polar/abelian.hpp"
#include "polar/cycle.hpp"
#include "polar/ideal.hpp"

namespace polar {

// Formal sum of irreducible supports with abelian-group coefficients; zero
// coefficients are never stored and components are kept sorted canonically.
class EnrichedCycle {
public:
    struct Component {
        Ideal support;
        FGAbelianGroup group;
    };

    const std::vector<Component>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    void add(const Ideal& support, const FGAbelianGroup& group);
    const FGAbelianGroup* coefficient(const Ideal& support) const;

    std::string str() const;

private:
    std::vector<Component> comps_;
};

bool enriched_equal(const EnrichedCycle& a, const EnrichedCycle& b);

// Integer-indexed enriched cycles with finite support.
class GradedEnrichedCycle {
public:
    const std::map<int, EnrichedCycle>& by_degree() const { return deg_; }
    bool is_zero() const { return deg_.empty(); }

    void add(int degree, const Ideal& support, const FGAbelianGroup& group);
    const EnrichedCycle* degree(int k) const;

    std::string str() const;

private:
    std::map<int, EnrichedCycle> deg_;
};

bool ge_equal(const GradedEnrichedCycle& a, const GradedEnrichedCycle& b);

GradedEnrichedCycle ge_sum(const GradedEnrichedCycle& a, const GradedEnrichedCycle& b);

// (E[k])^i = E^{i+k}
GradedEnrichedCycle ge_shift(const GradedEnrichedCycle& e, int k);

// q . E, tensoring every coefficient by q.
GradedEnrichedCycle ge_scale(const FGAbelianGroup& q, const GradedEnrichedCycle& e);

// D <= E in the direct-summand partial order, degree- and component-wise.
bool ge_leq(const GradedEnrichedCycle& d, const GradedEnrichedCycle& e);

struct SignedCycle {
    std::vector<std::pair<Ideal, long>> components;
    std::string str() const;
};

bool signed_cycle_equal(const SignedCycle& a, const SignedCycle& b);

// Alternating-sign rank collapse; torsion does not contribute.
SignedCycle ordinary_of(const GradedEnrichedCycle& e);

// Resolves one component pair to its proper intersection cycle; throws
// NonProperError when the pair meets improperly.
using IntersectionOracle = std::function<Cycle(const Ideal&, const Ideal&)>;

// Oracle for pairs expected to meet in dimension zero with rational points.
IntersectionOracle point_intersection_oracle();

GradedEnrichedCycle ge_intersect(const GradedEnrichedCycle& d, const GradedEnrichedCycle& e,
                                 const IntersectionOracle& oracle);

// Proper push-forward along a map of supports; coincident images direct-sum.
GradedEnrichedCycle ge_pushforward(const GradedEnrichedCycle& e,
                                   const std::function<Ideal(const Ideal&)>& image);

}  // namespace polar

#endif
