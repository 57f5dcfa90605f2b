#ifndef POLAR_PROBLEM_HPP
#define POLAR_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "polar/abelian.hpp"
#include "polar/cycle.hpp"
#include "polar/ideal.hpp"

namespace polar {

struct MorseEntry {
    int degree;
    FGAbelianGroup group;
};

struct StratumSpec {
    std::string name;
    std::vector<Polynomial> closure;  // ambient generators; empty = whole space
    std::vector<std::string> minus;   // names of the smaller strata removed
    int dim;
    std::optional<RationalPoint> test_point;
    std::optional<std::vector<MorseEntry>> morse_override;
};

// A full problem instance: the stratified space, the shift of the constant
// sheaf, the pair of functions, and optional decomposition candidates.
struct ProblemSpec {
    CtxPtr ambient;
    CtxPtr doubled;
    std::vector<Polynomial> space_components;  // product defines X; empty = strata union
    int shift = 0;
    std::vector<StratumSpec> strata;
    Polynomial f;
    Polynomial g;
    CandidateSet candidates;

    Ideal closure_ideal(const StratumSpec& st) const;
    const StratumSpec* stratum(const std::string& name) const;
    int space_dim() const;  // max stratum dimension

    // Product of the space components; requires a nonempty component list.
    Polynomial space_product() const;
};

// Checks the documented invariants (dimensions, test points, coverage,
// vanishing of f and g at the origin); throws ValidationError.
void validate_problem(const ProblemSpec& spec);

}  // namespace polar

#endif
