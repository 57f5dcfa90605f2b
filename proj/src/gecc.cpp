#include "polar/gecc.hpp"

#include <algorithm>

#include "polar/errors.hpp"

namespace polar {

namespace {

// Kernel of the c x n Jacobian of the closure generators at q; the stratum
// must be a curve smooth at q, so the kernel is one line.
std::vector<Rational> tangent_line(const std::vector<Polynomial>& closure,
                                   const RationalPoint& q) {
    const std::size_t n = q.ctx->arity();
    std::vector<std::vector<Rational>> rows;
    for (const auto& h : closure) {
        std::vector<Rational> row;
        for (std::size_t i = 0; i < n; ++i) row.push_back(h.derivative(i).evaluate(q));
        rows.push_back(std::move(row));
    }
    // gaussian elimination
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational m = rows[r][col] / rows[rank][col];
            for (std::size_t cc = 0; cc < n; ++cc) rows[r][cc] -= m * rows[rank][cc];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != n - 1)
        throw GenericityError("test point " + q.str() + " is not a smooth curve point");
    std::vector<Rational> tangent(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    tangent[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
        // rows[r] has pivot at pivot_col[r]
        tangent[pivot_col[r]] = -rows[r][free_col] / rows[r][pivot_col[r]];
    }
    return tangent;
}

Rational det3(const std::vector<std::vector<Rational>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// f restricted to the affine plane q + u*v1 + v*v2, as a polynomial in (u, v).
Polynomial restrict_to_plane(const Polynomial& f, const RationalPoint& q,
                             const std::vector<Rational>& v1, const std::vector<Rational>& v2) {
    CtxPtr uv = VarContext::make({"u", "v"});
    Polynomial u = Polynomial::variable(uv, 0), v = Polynomial::variable(uv, 1);
    std::vector<Polynomial> coord;
    for (std::size_t i = 0; i < q.ctx->arity(); ++i)
        coord.push_back(u.scaled(v1[i]) + v.scaled(v2[i]) + Polynomial(uv, q.coords[i]));
    Polynomial out(uv);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term(uv, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * coord[i];
        out = out + term;
    }
    return out;
}

}  // namespace

GeccBuilder::GeccBuilder(const ProblemSpec& spec, Rng& rng) : spec_(spec), rng_(rng) {
    // conormals first: the point-stratum rule consults them
    for (const auto& st : spec_.strata) {
        Ideal sing = presentation_singular_ideal(spec_.ambient, st.closure);
        StratumInfo si{conormal_ideal(spec_.doubled, st.closure, sing), {}, "", {}, {}};
        info_.emplace(st.name, std::move(si));
    }
    for (const auto& st : spec_.strata) {
        auto& si = info_.at(st.name);
        si.morse = morse_module(st, si.morse_source, si.transverse_mult, si.link_form);
    }
}

const StratumInfo& GeccBuilder::info(const std::string& name) const {
    auto it = info_.find(name);
    if (it == info_.end()) throw Error("unknown stratum '" + name + "'");
    return it->second;
}

bool GeccBuilder::is_open_stratum(const StratumSpec& st) const {
    Ideal mine = spec_.closure_ideal(st);
    for (const auto& other : spec_.strata) {
        if (other.name == st.name || other.dim <= st.dim) continue;
        if (radical_contains(mine, spec_.closure_ideal(other))) return false;
    }
    return true;
}

bool GeccBuilder::degenerate_covector(const RationalPoint& p,
                                      const std::vector<Rational>& grad) const {
    RationalPoint lifted{spec_.doubled, p.coords};
    lifted.coords.insert(lifted.coords.end(), grad.begin(), grad.end());
    for (const auto& st : spec_.strata) {
        if (st.dim == 0) continue;
        if (!contains_point(spec_.closure_ideal(st), p)) continue;
        if (contains_point(info_.at(st.name).conormal.ideal, lifted)) return true;
    }
    return false;
}

std::optional<unsigned> GeccBuilder::link_count_for(const Polynomial& ell,
                                                    const RationalPoint& p) {
    const CtxPtr& amb = spec_.ambient;
    const std::size_t n = amb->arity();
    std::vector<Rational> grad;
    for (std::size_t i = 0; i < n; ++i) grad.push_back(ell.derivative(i).evaluate(p));
    bool nonzero = false;
    for (const auto& c : grad)
        if (c != 0) nonzero = true;
    if (!nonzero) return std::nullopt;
    if (degenerate_covector(p, grad)) return std::nullopt;

    Polynomial fX = spec_.space_product();
    std::vector<Polynomial> jac;
    for (std::size_t i = 0; i < n; ++i) jac.push_back(fX.derivative(i));
    // critical locus of (fX, ell): 2x2 minors of the two gradients
    std::vector<Polynomial> crit;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            crit.push_back(fX.derivative(i).scaled(grad[j]) - fX.derivative(j).scaled(grad[i]));
    Ideal gamma = gap_sheaf(Ideal(amb, crit), Ideal(amb, jac));
    Polynomial slice = ell - Polynomial(amb, ell.evaluate(p));
    try {
        return length_at(ideal_sum(gamma, slice), p);
    } catch (const DimensionError&) {
        return std::nullopt;  // polar curve meets V(ell) badly; not a generic form
    }
}

unsigned GeccBuilder::link_count(const RationalPoint& p, std::string* form_used) {
    const CtxPtr& amb = spec_.ambient;
    const std::size_t n = amb->arity();
    std::vector<Polynomial> candidates;
    candidates.push_back(Polynomial::variable(amb, n - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) candidates.push_back(Polynomial::variable(amb, i));
    for (int k = 0; k < 40; ++k) {
        Polynomial ell(amb);
        for (std::size_t i = 0; i < n; ++i)
            ell = ell + Polynomial::variable(amb, i).scaled(Rational(rng_.int_in(-5, 5)));
        if (!ell.is_zero()) candidates.push_back(ell);
    }
    std::optional<unsigned> first;
    std::string used;
    for (const auto& ell : candidates) {
        auto val = link_count_for(ell, p);
        if (!val) continue;
        if (!first) {
            first = val;
            used = ell.str();
            continue;
        }
        if (*val != *first)
            throw GenericityError("link counts disagree (" + std::to_string(*first) + " via " +
                                  used + ", " + std::to_string(*val) + " via " + ell.str() + ")");
        if (form_used) *form_used = used;
        return *first;
    }
    throw GenericityError("no valid linear form for the complex link at " + p.str());
}

unsigned GeccBuilder::transverse_multiplicity(const StratumSpec& st) {
    if (!st.test_point)
        throw NeedsTestPointError("stratum '" + st.name + "' has no test point");
    if (spec_.ambient->arity() != 3)
        throw UnautomatedStratumError("transverse multiplicity needs a threefold ambient");
    const RationalPoint& q = *st.test_point;
    Polynomial fX = spec_.space_product();
    std::vector<Rational> tangent = tangent_line(st.closure, q);

    auto order_via = [&](const std::vector<Rational>& v1,
                         const std::vector<Rational>& v2) -> std::optional<unsigned> {
        if (det3({v1, v2, tangent}) == 0) return std::nullopt;
        Polynomial rest = restrict_to_plane(fX, q, v1, v2);
        if (rest.is_zero()) return std::nullopt;
        return vanishing_order(rest, RationalPoint::origin(rest.ctx()));
    };

    std::optional<unsigned> first;
    static const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
        std::vector<Rational> v1(3, Rational(0)), v2(3, Rational(0));
        v1[pr[0]] = 1;
        v2[pr[1]] = 1;
        first = order_via(v1, v2);
        if (first) break;
    }
    std::optional<unsigned> second;
    for (int attempt = 0; attempt < 20 && !second; ++attempt) {
        std::vector<Rational> v1, v2;
        for (int i = 0; i < 3; ++i) v1.push_back(Rational(rng_.int_in(-3, 3)));
        for (int i = 0; i < 3; ++i) v2.push_back(Rational(rng_.int_in(-3, 3)));
        second = order_via(v1, v2);
    }
    if (!first) first = second, second.reset();
    if (!second)
        for (int attempt = 0; attempt < 20 && !second; ++attempt) {
            std::vector<Rational> v1, v2;
            for (int i = 0; i < 3; ++i) v1.push_back(Rational(rng_.int_in(-3, 3)));
            for (int i = 0; i < 3; ++i) v2.push_back(Rational(rng_.int_in(-3, 3)));
            second = order_via(v1, v2);
        }
    if (!first || !second)
        throw GenericityError("no transverse plane found at " + q.str());
    if (*first != *second)
        throw GenericityError("transverse multiplicities disagree (" + std::to_string(*first) +
                              " vs " + std::to_string(*second) + ") for stratum '" + st.name + "'");
    return *first;
}

std::vector<MorseEntry> GeccBuilder::morse_module(const StratumSpec& st, std::string& source,
                                                  std::optional<unsigned>& tmult,
                                                  std::optional<std::string>& lform) {
    if (st.morse_override) {
        source = "override";
        std::vector<MorseEntry> out;
        for (const auto& e : *st.morse_override)
            if (!e.group.is_zero()) out.push_back(e);
        return out;
    }
    if (is_open_stratum(st)) {
        source = "open-stratum";
        return {{st.dim - spec_.shift, FGAbelianGroup::free(1)}};
    }
    if (st.dim == 1 && spec_.ambient->arity() == 3 && !spec_.space_components.empty()) {
        source = "curve-on-surface";
        unsigned r = transverse_multiplicity(st);
        tmult = r;
        if (r == 1) return {};
        return {{st.dim - spec_.shift + 1, FGAbelianGroup::free(r - 1)}};
    }
    if (st.dim == 0 && spec_.ambient->arity() <= 3 && !spec_.space_components.empty()) {
        Ideal closure = spec_.closure_ideal(st);
        auto pts = rational_points(closure);
        if (pts.size() == 1) {
            source = "point-link";
            std::string used;
            unsigned lambda = link_count(pts.front(), &used);
            lform = used;
            if (lambda == 0) return {};
            return {{spec_.space_dim() - spec_.shift, FGAbelianGroup::free(lambda)}};
        }
    }
    throw UnautomatedStratumError("no Morse rule applies to stratum '" + st.name +
                                  "'; supply a morse override");
}

GradedEnrichedCycle GeccBuilder::gecc() const {
    GradedEnrichedCycle out;
    for (const auto& st : spec_.strata) {
        const StratumInfo& si = info_.at(st.name);
        for (const auto& entry : si.morse)
            out.add(entry.degree, si.conormal.ideal, entry.group);
    }
    return out;
}

GradedEnrichedCycle build_gecc(const ProblemSpec& spec, Rng& rng) {
    return GeccBuilder(spec, rng).gecc();
}

}  // namespace polar
