#ifndef POLAR_POLAR_OPS_HPP
#define POLAR_POLAR_OPS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polar/gecc.hpp"

namespace polar {

// Per-stratum record of how the polar computation went.
struct StratumTrace {
    std::string stratum;
    bool used = false;
    std::string skip_reason;          // invisible / constant (when !used)
    std::optional<Ideal> substituted;  // defining ideal of the projected intersection
    std::optional<int> dim;            // krull dimension of the substituted ideal
};

struct PolarResult {
    GradedEnrichedCycle curve;         // ambient components through the origin
    std::vector<Ideal> set_components;  // their primes (deduplicated)
    bool curve_ok = true;
    std::string failure;               // offending stratum when !curve_ok
    bool origin_in_set = false;
    std::vector<StratumTrace> traces;
};

struct Main1Report {
    PolarResult polar;
    bool verdict_supp = false;  // via the support identity on the union ideal
    bool verdict_f = false;     // dim_0 V(f) meet |polar| <= 0
    bool verdict_fg = false;    // dim_0 V(f,g) meet |polar| <= 0
    bool verdicts_hold = false;
    bool phipsi_ok = false;  // V(f) meet |polar| lies in V(g) near the origin
    std::map<int, FGAbelianGroup> stalk;  // nonzero degrees only
};

struct PairReport {
    GradedEnrichedCycle gamma_hat;
    std::vector<Ideal> excluded;          // components inside V(g)
    std::map<int, FGAbelianGroup> with_f;  // degreewise (gamma_hat . V(f))_0
    std::map<int, FGAbelianGroup> with_g;  // degreewise (gamma_hat . V(g))_0
};

struct EmptinessTrial {
    Polynomial form;
    bool origin_in_polar = false;
    bool verdict_f = false;  // dim_0 V(f) meet |polar| <= 0
    bool verdict_l = false;  // dim_0 V(l) meet |polar| <= 0
    bool stalk_zero = false;
};

struct EmptinessReport {
    std::vector<EmptinessTrial> trials;
    bool exists_missing_origin = false;   // some sampled form misses the origin
    bool generic_missing_origin = false;  // every sampled form does
    bool generic_stalk_zero = false;
    bool genericity_failure = false;  // trials disagree
};

struct FamilyPointBlock {
    RationalPoint point;
    std::map<int, FGAbelianGroup> groups;
};

struct FamilySample {
    Rational a;
    std::vector<FamilyPointBlock> points;
    unsigned unsplit_residual = 0;  // quotient length not split into rational points
    bool rank_match = false;
};

struct FamilyReport {
    bool verdict = false;  // dim_0 V(g) meet |polar(g, f)| <= 0
    std::map<int, FGAbelianGroup> at_zero;
    std::vector<FamilySample> samples;
};

// Orchestrates the polar-curve computations over a fixed problem, reusing the
// stratum conormals and Morse modules.
class PolarPipeline {
public:
    PolarPipeline(const ProblemSpec& spec, Rng& rng);

    const GeccBuilder& builder() const { return builder_; }
    const ProblemSpec& spec() const { return spec_; }

    // Sum over the visible strata on which f is nonconstant of the Morse
    // modules on the relative conormal components (doubled context).
    GradedEnrichedCycle relative_conormal_cycle(const Polynomial& ftilde);
    GradedEnrichedCycle relative_conormal_cycle() { return relative_conormal_cycle(spec_.f); }

    PolarResult polar_curve(const Polynomial& ftilde, const Polynomial& gtilde);
    PolarResult polar_curve() { return polar_curve(spec_.f, spec_.g); }

    Main1Report main1();
    PairReport main2();
    EmptinessReport emptiness(int trials);
    FamilyReport family(const std::vector<Rational>& samples);

    // Stratified critical locus of f as a list of ambient ideals.
    std::vector<Ideal> critical_locus_of(const Polynomial& ftilde);

private:
    const ProblemSpec& spec_;
    Rng& rng_;
    GeccBuilder builder_;
    std::map<std::string, std::map<std::string, ConormalIdeal>> rel_conormals_;

    const ConormalIdeal& relative_conormal(const StratumSpec& st, const Polynomial& ftilde);
    bool constant_on(const Polynomial& ftilde, const StratumSpec& st) const;
    CandidateSet polar_candidates() const;

    struct SetData {
        std::vector<StratumTrace> traces;
        std::vector<std::pair<Ideal, const StratumSpec*>> pieces;  // nonunit substituted ideals
    };
    SetData polar_set_data(const Polynomial& ftilde, const Polynomial& gtilde);
    bool verdict_componentwise(const SetData& sd, const std::vector<Polynomial>& cut);
    bool verdict_union(const SetData& sd, const std::vector<Polynomial>& cut);
};

struct LeAttachResult {
    unsigned tau = 0;
    Ideal polar;  // gap-sheafed critical scheme of the pair
};

// tau = (polar . V(f))_0 for an ambient function with respect to a linear
// form, with the genericity preconditions checked.
LeAttachResult le_attaching(const Polynomial& ftilde, const Polynomial& linear_form);

// Length of the Jacobian quotient at an isolated critical point.
unsigned milnor_number(const Polynomial& ftilde, const RationalPoint& p);

}  // namespace polar

#endif
