#ifndef POLAR_ABELIAN_HPP
#define POLAR_ABELIAN_HPP

#include <string>
#include <vector>

#include "polar/rational.hpp"

namespace polar {

// Finitely generated abelian group Z^rank (+) Z/d1 (+) ... with the torsion
// orders kept in invariant-factor form (each divides the next).
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;
    FGAbelianGroup(unsigned rank, std::vector<Integer> torsion_orders);

    static FGAbelianGroup zero() { return {}; }
    static FGAbelianGroup free(unsigned rank) { return FGAbelianGroup(rank, {}); }
    static FGAbelianGroup cyclic(const Integer& d) { return FGAbelianGroup(0, {d}); }

    unsigned rank() const { return rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_zero() const { return rank_ == 0 && torsion_.empty(); }

    bool operator==(const FGAbelianGroup& o) const = default;

    std::string str() const;

private:
    unsigned rank_ = 0;
    std::vector<Integer> torsion_;  // invariant factors, ascending divisibility chain
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);
FGAbelianGroup tensor(const FGAbelianGroup& a, const FGAbelianGroup& b);

// Whether a is a direct summand of b (equivalently a + p = b is solvable).
bool summand_leq(const FGAbelianGroup& a, const FGAbelianGroup& b);

}  // namespace polar

#endif
