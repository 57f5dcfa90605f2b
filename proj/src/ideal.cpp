#include "polar/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

namespace {

std::atomic<long> g_budget{200000};

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
    Exponents e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
    return e;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
    Exponents e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
    return e;
}

// Terms sorted descending under the active order.
using OPoly = std::vector<std::pair<Exponents, Rational>>;

OPoly to_op(const Polynomial& p, const MonomialOrder& ord) {
    OPoly t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
        return ord.compare(a.first, b.first) > 0;
    });
    return t;
}

Polynomial from_op(const CtxPtr& ctx, const OPoly& t) {
    return Polynomial::from_terms(ctx, t);
}

// a + c * x^m * b, both descending under ord.
OPoly op_add_scaled(const OPoly& a, const OPoly& b, const Exponents& m, const Rational& c,
                    const MonomialOrder& ord) {
    OPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Exponents be = add_exp(b[j].first, m);
        int cmp = ord.compare(a[i].first, be);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.emplace_back(std::move(be), c * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + c * b[j].second;
            if (s != 0) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(add_exp(b[j].first, m), c * b[j].second);
    return out;
}

struct Basis {
    std::vector<OPoly> g;
    std::vector<unsigned> sugar;

    const Exponents& lm(std::size_t i) const { return g[i].front().first; }
    const Rational& lc(std::size_t i) const { return g[i].front().second; }
};

// Full normal form; every term of the result is reducible by no basis lead.
OPoly reduce_full(OPoly h, const Basis& B, const MonomialOrder& ord) {
    OPoly rem;
    while (!h.empty()) {
        bool hit = false;
        for (std::size_t k = 0; k < B.g.size(); ++k) {
            if (divides(B.lm(k), h.front().first)) {
                Rational c = -h.front().second / B.lc(k);
                h = op_add_scaled(h, B.g[k], sub_exp(h.front().first, B.lm(k)), c, ord);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.push_back(h.front());
            h.erase(h.begin());
        }
    }
    return rem;
}

OPoly spoly(const Basis& B, std::size_t i, std::size_t j, const MonomialOrder& ord) {
    Exponents l = lcm_exp(B.lm(i), B.lm(j));
    OPoly s = op_add_scaled(OPoly{}, B.g[i], sub_exp(l, B.lm(i)), Rational(1) / B.lc(i), ord);
    return op_add_scaled(s, B.g[j], sub_exp(l, B.lm(j)), Rational(-1) / B.lc(j), ord);
}

struct Pair {
    unsigned sugar;
    Exponents lcm;
    std::size_t i, j;
};

struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

void make_monic(OPoly& p) {
    if (p.empty()) return;
    Rational c = p.front().second;
    if (c == 1) return;
    for (auto& t : p) t.second /= c;
}

std::vector<Polynomial> buchberger(const CtxPtr& ctx, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord, long budget) {
    Basis B;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        OPoly t = to_op(p, ord);
        make_monic(t);
        B.g.push_back(std::move(t));
        B.sugar.push_back(p.degree());
    }

    std::set<Pair, PairCmp> queue{PairCmp{&ord}};
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto enqueue = [&](std::size_t i, std::size_t j) {
        Exponents l = lcm_exp(B.lm(i), B.lm(j));
        unsigned s = std::max(B.sugar[i] + total_degree(sub_exp(l, B.lm(i))),
                              B.sugar[j] + total_degree(sub_exp(l, B.lm(j))));
        queue.insert(Pair{s, std::move(l), i, j});
    };
    for (std::size_t j = 1; j < B.g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) enqueue(i, j);

    long used = 0;
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({p.i, p.j});
        if (++used > budget) throw BudgetError(budget);

        // coprime-lead criterion
        if (p.lcm == add_exp(B.lm(p.i), B.lm(p.j))) continue;

        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < B.g.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(B.lm(k), p.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        OPoly r = reduce_full(spoly(B, p.i, p.j, ord), B, ord);
        if (r.empty()) continue;
        make_monic(r);
        if (total_degree(r.front().first) == 0) {
            // unit ideal
            return {Polynomial(ctx, Rational(1))};
        }
        std::size_t t = B.g.size();
        unsigned sug = std::max<unsigned>(p.sugar, total_degree(r.front().first));
        B.g.push_back(std::move(r));
        B.sugar.push_back(sug);
        for (std::size_t i = 0; i < t; ++i) enqueue(i, t);
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < B.g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < B.g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(B.lm(j), B.lm(i)) && (B.lm(j) != B.lm(i) || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    Basis M;
    for (std::size_t i : keep) {
        M.g.push_back(B.g[i]);
        M.sugar.push_back(B.sugar[i]);
    }

    // interreduce tails
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < M.g.size(); ++i) {
            Basis others;
            for (std::size_t j = 0; j < M.g.size(); ++j)
                if (j != i) others.g.push_back(M.g[j]);
            OPoly r = reduce_full(M.g[i], others, ord);
            make_monic(r);
            if (r != M.g[i]) {
                M.g[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(M.g.begin(), M.g.end(), [&](const OPoly& a, const OPoly& b) {
        return ord.compare(a.front().first, b.front().first) < 0;
    });
    std::vector<Polynomial> out;
    out.reserve(M.g.size());
    for (const auto& t : M.g) out.push_back(from_op(ctx, t));
    return out;
}

// Fresh variable name not present in ctx.
std::string fresh_name(const CtxPtr& ctx, const std::string& stem) {
    std::string name = stem;
    int n = 0;
    while (ctx->index_of(name)) name = stem + std::to_string(n++);
    return name;
}

// Exact division by a single polynomial; p must lie in (f).
Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    OPoly h = to_op(p, ord), d = to_op(f, ord), q;
    while (!h.empty()) {
        if (!divides(d.front().first, h.front().first))
            throw Error("exact division failed: '" + p.str() + "' not divisible by '" + f.str() + "'");
        Exponents m = sub_exp(h.front().first, d.front().first);
        Rational c = h.front().second / d.front().second;
        q.emplace_back(m, c);
        h = op_add_scaled(h, d, m, -c, ord);
    }
    return Polynomial::from_terms(p.ctx(), q);
}

}  // namespace

long groebner_budget() { return g_budget.load(); }
void set_groebner_budget(long max_spairs) { g_budget.store(max_spairs); }

Ideal::Ideal(CtxPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    for (auto& p : gens) {
        if (!same_context(p.ctx(), ctx_)) throw DimensionError("generator context mismatch");
        if (!p.is_zero()) gens_.push_back(std::move(p));
    }
}

Ideal Ideal::zero(const CtxPtr& ctx) { return Ideal(ctx, {}); }

Ideal Ideal::unit(const CtxPtr& ctx) { return Ideal(ctx, {Polynomial(ctx, Rational(1))}); }

Ideal Ideal::point(const RationalPoint& pt) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < pt.ctx->arity(); ++i)
        gens.push_back(Polynomial::variable(pt.ctx, i) - Polynomial(pt.ctx, pt.coords[i]));
    return Ideal(pt.ctx, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return it->second;
    auto basis = buchberger(ctx_, gens_, ord, g_budget.load());
    return cache_->bases.emplace(ord, std::move(basis)).first->second;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

std::string Ideal::str() const {
    const auto& gb = groebner();
    if (gb.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gb.size(); ++i) {
        if (i) os << ", ";
        os << gb[i].str();
    }
    os << ")";
    return os.str();
}

Polynomial normal_form(const Polynomial& p, const Ideal& I, const MonomialOrder& ord) {
    const auto& gb = I.groebner(ord);
    Basis B;
    for (const auto& g : gb) B.g.push_back(to_op(g, ord));
    return from_op(p.ctx(), reduce_full(to_op(p, ord), B, ord));
}

bool membership(const Polynomial& p, const Ideal& I, MembershipMode mode) {
    if (p.is_zero()) return true;
    if (mode == MembershipMode::Exact) return normal_form(p, I).is_zero();
    // Rabinowitsch: 1 in I + (1 - y*p)
    std::vector<std::string> names = I.ctx()->names();
    names.push_back(fresh_name(I.ctx(), "_r"));
    CtxPtr ext = VarContext::make(std::move(names));
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.embedded(ext));
    Polynomial y = Polynomial::variable(ext, ext->arity() - 1);
    gens.push_back(Polynomial(ext, Rational(1)) - y * p.embedded(ext));
    return Ideal(ext, std::move(gens)).is_unit();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return I.groebner() == J.groebner();
}

bool radical_contains(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.gens())
        if (!membership(g, I, MembershipMode::Radical)) return false;
    return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const Polynomial& p) {
    std::vector<Polynomial> gens = I.gens();
    gens.push_back(p);
    return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ctx());
    std::vector<std::string> names = I.ctx()->names();
    names.push_back(fresh_name(I.ctx(), "_t"));
    CtxPtr ext = VarContext::make(std::move(names));
    const std::size_t ti = ext->arity() - 1;
    Polynomial t = Polynomial::variable(ext, ti);
    Polynomial one_minus_t = Polynomial(ext, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(t * g.embedded(ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.embedded(ext));
    Ideal K(ext, std::move(gens));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < ti; ++i) keep.push_back(i);
    Ideal E = eliminate(K, keep);
    std::vector<Polynomial> back;
    for (const auto& g : E.gens()) back.push_back(g.embedded(I.ctx()));
    return Ideal(I.ctx(), std::move(back));
}

namespace {

Ideal quotient_by_poly(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) return Ideal::unit(I.ctx());
    if (f.is_constant()) return I;
    Ideal K = ideal_intersect(I, Ideal(I.ctx(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : K.groebner()) gens.push_back(exact_divide(g, f));
    return Ideal(I.ctx(), std::move(gens));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    if (J.is_zero_ideal()) return Ideal::unit(I.ctx());
    bool first = true;
    Ideal acc = Ideal::unit(I.ctx());
    for (const auto& f : J.gens()) {
        Ideal q = quotient_by_poly(I, f);
        acc = first ? q : ideal_intersect(acc, q);
        first = false;
    }
    return acc;
}

Saturation saturate(const Ideal& I, const Ideal& J) {
    Ideal prev = I;
    for (int k = 0;; ++k) {
        Ideal next = ideal_quotient(prev, J);
        if (ideal_equal(next, prev)) return Saturation{prev, k};
        prev = next;
    }
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& keep) {
    std::vector<bool> kept(I.ctx()->arity(), false);
    for (std::size_t i : keep) kept.at(i) = true;
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < I.ctx()->arity(); ++i)
        if (!kept[i]) block.push_back(i);
    if (block.empty()) return I;
    const auto& gb = I.groebner(MonomialOrder::elim_block(block));
    std::vector<Polynomial> gens;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [e, c] : g.terms()) {
            for (std::size_t i : block)
                if (e[i] != 0) {
                    pure = false;
                    break;
                }
            if (!pure) break;
        }
        if (pure) gens.push_back(g);
    }
    return Ideal(I.ctx(), std::move(gens));
}

std::optional<int> krull_dim(const Ideal& I) {
    if (I.is_unit()) return std::nullopt;
    const auto& gb = I.groebner();
    const std::size_t n = I.ctx()->arity();
    if (n > 24) throw Error("krull_dim: too many variables for subset enumeration");
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb) {
        std::uint32_t m = 0;
        const Exponents& lm = g.terms().front().first;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i]) m |= (1u << i);
        supports.push_back(m);
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (std::uint32_t m : supports)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

std::optional<unsigned> vspace_dim(const Ideal& I) {
    const auto& gb = I.groebner();
    const std::size_t n = I.ctx()->arity();
    std::vector<Exponents> leads;
    for (const auto& g : gb) {
        if (total_degree(g.terms().front().first) == 0) return 0;  // unit ideal
        leads.push_back(g.terms().front().first);
    }
    std::vector<unsigned> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& lm : leads) {
            bool pure = lm[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && lm[j] != 0) pure = false;
            if (pure) {
                bound[i] = found ? std::min(bound[i], lm[i]) : lm[i];
                found = true;
            }
        }
        if (!found) return std::nullopt;  // not zero-dimensional
    }
    unsigned long total = 1;
    for (unsigned b : bound) {
        total *= b;
        if (total > 10000000ul) throw Error("vspace_dim: quotient too large");
    }
    // count standard monomials below the pure-power bounds
    unsigned count = 0;
    Exponents e(n, 0);
    for (;;) {
        bool standard = true;
        for (const auto& lm : leads)
            if (divides(lm, e)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

Ideal away_part(const Ideal& I, const RationalPoint& pt) {
    return saturate(I, Ideal::point(pt)).ideal;
}

Ideal isolated_part_at(const Ideal& I, const RationalPoint& pt) {
    return saturate(I, away_part(I, pt)).ideal;
}

bool contains_point(const Ideal& I, const RationalPoint& pt) {
    for (const auto& g : I.gens())
        if (g.evaluate(pt) != 0) return false;
    return true;
}

bool isolated_or_absent_at(const Ideal& I, const RationalPoint& pt) {
    return !contains_point(away_part(I, pt), pt);
}

unsigned length_at(const Ideal& I, const RationalPoint& pt) {
    Ideal away = away_part(I, pt);
    if (contains_point(away, pt))
        throw DimensionError("point " + pt.str() +
                             " lies on a positive-dimensional component of " + I.str());
    Ideal loc = saturate(I, away).ideal;
    auto d = vspace_dim(loc);
    if (!d) throw DimensionError("local part at " + pt.str() + " is not finite");
    return *d;
}

unsigned local_multiplicity(const Ideal& I, const RationalPoint& pt) {
    auto d = krull_dim(I);
    if (d && *d > 0)
        throw DimensionError("local_multiplicity requires a zero-dimensional ideal, got dim " +
                             std::to_string(*d));
    return length_at(I, pt);
}

std::vector<Rational> rational_roots_univariate(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) throw DimensionError("rational roots of the zero polynomial");
    // collect coefficients by degree in var; polynomial must be univariate
    std::map<unsigned, Rational> coeff;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw DimensionError("polynomial is not univariate in the requested variable");
        coeff[e[var]] += c;
    }
    Integer den(1);
    for (const auto& [d, c] : coeff) den = lcm(den, c.get_den());
    std::map<unsigned, Integer> ic;
    for (const auto& [d, c] : coeff) {
        Rational scaled = c * Rational(den);
        ic[d] = scaled.get_num();
    }
    std::vector<Rational> roots;
    unsigned low = ic.begin()->first;
    if (low > 0) roots.push_back(Rational(0));
    Integer a0 = ic.begin()->second;
    Integer an = ic.rbegin()->second;
    std::set<Rational> seen(roots.begin(), roots.end());
    auto eval = [&](const Rational& x) {
        Rational v(0);
        for (const auto& [d, c] : ic) {
            Rational t(c);
            for (unsigned k = low; k < d; ++k) t *= x;
            v += t;
        }
        return v;
    };
    for (const Integer& num : divisors(a0)) {
        for (const Integer& d : divisors(an)) {
            for (int sign : {1, -1}) {
                Rational cand(sign * num, d);
                cand.canonicalize();
                if (seen.count(cand)) continue;
                if (eval(cand) == 0) {
                    seen.insert(cand);
                    roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<RationalPoint> rational_points(const Ideal& I) {
    if (I.is_unit()) return {};
    auto vd = vspace_dim(I);
    if (!vd) throw DimensionError("rational_points requires a zero-dimensional ideal");
    const std::size_t n = I.ctx()->arity();
    std::vector<std::vector<Rational>> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        Ideal E = eliminate(I, {i});
        if (E.gens().empty())
            throw DimensionError("zero-dimensional ideal with no univariate eliminant");
        values[i] = rational_roots_univariate(E.gens().front(), i);
        if (values[i].empty()) return {};
    }
    std::vector<RationalPoint> out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        RationalPoint pt{I.ctx(), {}};
        pt.coords.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pt.coords.push_back(values[i][idx[i]]);
        if (contains_point(I, pt)) out.push_back(std::move(pt));
        std::size_t i = 0;
        while (i < n) {
            if (++idx[i] < values[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace polar
