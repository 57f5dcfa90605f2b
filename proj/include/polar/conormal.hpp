#ifndef POLAR_CONORMAL_HPP
#define POLAR_CONORMAL_HPP

#include <optional>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

// Conormal variety in the doubled context, presented by an ideal that has
// already been gap-sheafed along the degenerate locus of its presentation.
struct ConormalIdeal {
    enum class Tag { Absolute, Relative };

    Ideal ideal;  // doubled context
    Tag tag;
    int base_dim;       // dimension of the underlying stratum closure
    int sat_index = 0;  // stabilizing exponent of the gap-sheaf saturation
};

// Rank-drop locus of the complete-intersection presentation (Jacobian
// criterion); generators live in the ambient context.
Ideal presentation_singular_ideal(const CtxPtr& ambient,
                                  const std::vector<Polynomial>& closure_gens);

// Conormal ideal of the closure: covectors annihilating the tangent spaces of
// the smooth part, cut out by the (c+1)-minors of the rows [w; grad h_1; ...]
// and gap-sheafed along sing_ideal.
ConormalIdeal conormal_ideal(const CtxPtr& doubled, const std::vector<Polynomial>& closure_gens,
                             const Ideal& sing_ideal);

// Relative conormal of f on the closure: (c+2)-minors of [w; grad h; grad f],
// gap-sheafed along sing_ideal and along the critical locus of f on the
// stratum. Throws when f is constant on the closure (checked at test_point,
// the origin by default).
ConormalIdeal relative_conormal_ideal(const CtxPtr& doubled,
                                      const std::vector<Polynomial>& closure_gens,
                                      const Ideal& sing_ideal, const Polynomial& ftilde,
                                      const std::optional<RationalPoint>& test_point = {});

// Graph of the differential: V(w_i - dg/dz_i) in the doubled context.
Ideal im_d(const CtxPtr& doubled, const Polynomial& gtilde);

// Substitutes w_i -> dg/dz_i into the conormal generators; the result
// generates the defining ideal of the projection of C meet im dg and lives
// in the ambient context.
Ideal intersect_im_d(const ConormalIdeal& C, const Polynomial& gtilde);

// Per visible stratum, intersects the absolute conormal with im df; the
// nonunit results cut out the stratified critical locus of f.
std::vector<Ideal> critical_locus(
    const std::vector<std::pair<ConormalIdeal, bool>>& strata_conormals,
    const Polynomial& ftilde);

}  // namespace polar

#endif
