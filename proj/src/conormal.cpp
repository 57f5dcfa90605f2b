#include "polar/conormal.hpp"

#include <algorithm>

#include "polar/cycle.hpp"
#include "polar/errors.hpp"

namespace polar {

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial det(const Matrix& m, const CtxPtr& ctx) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial acc(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det(minor, ctx);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// All maximal minors of a k x n matrix (k <= n): one per k-subset of columns.
std::vector<Polynomial> maximal_minors(const Matrix& rows, const CtxPtr& ctx) {
    std::vector<Polynomial> out;
    const std::size_t k = rows.size(), n = rows[0].size();
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    for (;;) {
        Matrix sq(k, std::vector<Polynomial>(k, Polynomial(ctx)));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sq[r][c] = rows[r][cols[c]];
        out.push_back(det(sq, ctx));
        // next column subset
        std::size_t i = k;
        while (i-- > 0) {
            if (cols[i] + (k - i) < n) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

Matrix gradient_rows(const CtxPtr& doubled, const std::vector<Polynomial>& polys) {
    const CtxPtr ambient = doubled->ambient_part();
    const std::size_t n1 = doubled->ambient_arity();
    Matrix rows;
    for (const auto& p : polys) {
        std::vector<Polynomial> row;
        for (std::size_t i = 0; i < n1; ++i) row.push_back(p.derivative(i).embedded(doubled));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Polynomial> cotangent_row(const CtxPtr& doubled) {
    std::vector<Polynomial> row;
    const std::size_t n1 = doubled->ambient_arity();
    for (std::size_t i = 0; i < n1; ++i)
        row.push_back(Polynomial::variable(doubled, n1 + i));
    return row;
}

Saturation gap_by(const Ideal& I, const Ideal& W) {
    if (W.is_unit() || W.is_zero_ideal()) return Saturation{I, 0};
    return saturate(I, W);
}

}  // namespace

Ideal presentation_singular_ideal(const CtxPtr& ambient,
                                  const std::vector<Polynomial>& closure_gens) {
    if (closure_gens.empty()) return Ideal::unit(ambient);  // smooth ambient stratum
    const std::size_t c = closure_gens.size(), n1 = ambient->arity();
    std::vector<Polynomial> gens = closure_gens;
    if (c <= n1) {
        Matrix rows;
        for (const auto& p : closure_gens) {
            std::vector<Polynomial> row;
            for (std::size_t i = 0; i < n1; ++i) row.push_back(p.derivative(i));
            rows.push_back(std::move(row));
        }
        for (auto& m : maximal_minors(rows, ambient)) gens.push_back(std::move(m));
    }
    return Ideal(ambient, std::move(gens));
}

ConormalIdeal conormal_ideal(const CtxPtr& doubled, const std::vector<Polynomial>& closure_gens,
                             const Ideal& sing_ideal) {
    const std::size_t c = closure_gens.size(), n1 = doubled->ambient_arity();
    std::vector<Polynomial> gens;
    for (const auto& h : closure_gens) gens.push_back(h.embedded(doubled));
    int base_dim = static_cast<int>(n1 - c);
    if (c + 1 <= n1) {
        Matrix rows;
        rows.push_back(cotangent_row(doubled));
        for (auto& r : gradient_rows(doubled, closure_gens)) rows.push_back(std::move(r));
        bool all_zero = true;
        for (auto& m : maximal_minors(rows, doubled)) {
            if (!m.is_zero()) all_zero = false;
            gens.push_back(std::move(m));
        }
        if (all_zero)
            throw PresentationError("degenerate presentation: all conormal minors vanish");
    }
    Ideal raw(doubled, std::move(gens));
    Ideal sing = Ideal(doubled, {});
    {
        std::vector<Polynomial> sg;
        for (const auto& p : sing_ideal.gens()) sg.push_back(p.embedded(doubled));
        sing = Ideal(doubled, std::move(sg));
    }
    Saturation sat = gap_by(raw, sing);
    return ConormalIdeal{sat.ideal, ConormalIdeal::Tag::Absolute, base_dim, sat.index};
}

ConormalIdeal relative_conormal_ideal(const CtxPtr& doubled,
                                      const std::vector<Polynomial>& closure_gens,
                                      const Ideal& sing_ideal, const Polynomial& ftilde,
                                      const std::optional<RationalPoint>& test_point) {
    const CtxPtr ambient = doubled->ambient_part();
    const std::size_t c = closure_gens.size(), n1 = doubled->ambient_arity();
    Ideal closure(ambient, closure_gens);

    RationalPoint q = test_point ? *test_point : RationalPoint::origin(ambient);
    Polynomial shifted = ftilde - Polynomial(ambient, ftilde.evaluate(q));
    if (membership(shifted, closure, MembershipMode::Radical))
        throw Error("function is constant on the stratum closure");

    std::vector<Polynomial> gens;
    for (const auto& h : closure_gens) gens.push_back(h.embedded(doubled));
    if (c + 2 <= n1) {
        Matrix rows;
        rows.push_back(cotangent_row(doubled));
        std::vector<Polynomial> grads = closure_gens;
        grads.push_back(ftilde);
        for (auto& r : gradient_rows(doubled, grads)) rows.push_back(std::move(r));
        bool all_zero = true;
        for (auto& m : maximal_minors(rows, doubled)) {
            if (!m.is_zero()) all_zero = false;
            gens.push_back(std::move(m));
        }
        if (all_zero)
            throw PresentationError("degenerate presentation: all relative conormal minors vanish");
    }
    Ideal raw(doubled, std::move(gens));

    std::vector<Polynomial> sg;
    for (const auto& p : sing_ideal.gens()) sg.push_back(p.embedded(doubled));
    Saturation gap1 = gap_by(raw, Ideal(doubled, std::move(sg)));
    Ideal step1 = gap1.ideal;

    // critical locus of f restricted to the stratum closure
    std::vector<Polynomial> crit = closure_gens;
    if (c + 1 <= n1) {
        Matrix rows;
        std::vector<Polynomial> grads = closure_gens;
        grads.push_back(ftilde);
        for (const auto& p : grads) {
            std::vector<Polynomial> row;
            for (std::size_t i = 0; i < n1; ++i) row.push_back(p.derivative(i));
            rows.push_back(std::move(row));
        }
        for (auto& m : maximal_minors(rows, ambient)) crit.push_back(std::move(m));
    }
    std::vector<Polynomial> critd;
    for (const auto& p : crit) critd.push_back(p.embedded(doubled));
    Saturation gap2 = gap_by(step1, Ideal(doubled, std::move(critd)));

    return ConormalIdeal{gap2.ideal, ConormalIdeal::Tag::Relative, static_cast<int>(n1 - c),
                         gap1.index + gap2.index};
}

Ideal im_d(const CtxPtr& doubled, const Polynomial& gtilde) {
    const std::size_t n1 = doubled->ambient_arity();
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n1; ++i)
        gens.push_back(Polynomial::variable(doubled, n1 + i) -
                       gtilde.derivative(i).embedded(doubled));
    return Ideal(doubled, std::move(gens));
}

Ideal intersect_im_d(const ConormalIdeal& C, const Polynomial& gtilde) {
    const CtxPtr doubled = C.ideal.ctx();
    const CtxPtr ambient = doubled->ambient_part();
    const std::size_t n1 = doubled->ambient_arity();
    std::map<std::size_t, Polynomial> bind;
    for (std::size_t i = 0; i < n1; ++i)
        bind.emplace(n1 + i, gtilde.derivative(i).embedded(doubled));
    std::vector<Polynomial> gens;
    for (const auto& g : C.ideal.gens()) gens.push_back(g.substituted(bind).embedded(ambient));
    return Ideal(ambient, std::move(gens));
}

std::vector<Ideal> critical_locus(
    const std::vector<std::pair<ConormalIdeal, bool>>& strata_conormals,
    const Polynomial& ftilde) {
    std::vector<Ideal> out;
    for (const auto& [conormal, visible] : strata_conormals) {
        if (!visible) continue;
        Ideal A = intersect_im_d(conormal, ftilde);
        if (!A.is_unit()) out.push_back(std::move(A));
    }
    return out;
}

}  // namespace polar
