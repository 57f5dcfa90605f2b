#ifndef POLAR_CYCLE_HPP
#define POLAR_CYCLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polar/ideal.hpp"
#include "polar/rng.hpp"

namespace polar {

// A formal sum of prime components with positive integer multiplicities.
// Components are kept sorted by their canonical basis string; the empty sum
// is the zero cycle.
struct CycleComponent {
    Ideal prime;
    unsigned mult;
};

struct Cycle {
    std::vector<CycleComponent> components;

    bool is_zero() const { return components.empty(); }
    void add(const Ideal& prime, unsigned mult);
    Cycle operator+(const Cycle& o) const;
    std::string str() const;
};

bool cycle_equal(const Cycle& a, const Cycle& b);

struct Candidate {
    Ideal prime;
    int dim;
    std::optional<RationalPoint> test_point;
};

struct CandidateSet {
    std::vector<Candidate> items;

    void add(const Ideal& prime, int dim,
             std::optional<RationalPoint> test_point = std::nullopt);
};

// Removes every component of V(I) contained in V(W).
Ideal gap_sheaf(const Ideal& I, const Ideal& W);

// Deterministic search for a rational point on the curve V(P) avoiding the
// listed subvarieties. Returns nullopt if the search palette is exhausted.
std::optional<RationalPoint> find_curve_point(const Ideal& P, const std::vector<Ideal>& avoid);

// Multiplicity of I along the prime curve P, by transverse hyperplane slicing
// at a rational test point. Two independent slices must agree.
unsigned component_multiplicity(const Ideal& I, const Candidate& P, Rng& rng);

// Top-dimensional cycle of V(I) from a declared candidate list. Requires the
// accepted components to account for the whole top-dimensional part. With a
// germ point, unresolved components away from it are tolerated and the
// returned cycle keeps only components through it.
Cycle cycle_of_ideal(const Ideal& I, const CandidateSet& cands, Rng& rng,
                     const RationalPoint* germ_at = nullptr);

// (C . V(h))_p for a 1-dimensional cycle C properly met by V(h) at p.
unsigned intersection_number_at(const Cycle& C, const Polynomial& h, const RationalPoint& p);

}  // namespace polar

#endif
