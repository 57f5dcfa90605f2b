#ifndef POLAR_ORDER_HPP
#define POLAR_ORDER_HPP

#include <cstddef>
#include <vector>

#include "polar/polynomial.hpp"

namespace polar {

// Term order used by the Groebner engine. Elimination orders compare the
// block of eliminated variables first (grevlex within each block), so a
// basis element free of the block generates the elimination ideal.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Elim };

    Kind kind = Kind::Grevlex;
    std::vector<std::size_t> elim;  // variable indices in the leading block (Elim only)

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder elim_block(std::vector<std::size_t> vars) {
        return {Kind::Elim, std::move(vars)};
    }

    // <0, 0, >0 as a <, =, > b.
    int compare(const Exponents& a, const Exponents& b) const;

    bool operator==(const MonomialOrder& o) const = default;
    bool operator<(const MonomialOrder& o) const {
        if (kind != o.kind) return kind < o.kind;
        return elim < o.elim;
    }
};

}  // namespace polar

#endif
