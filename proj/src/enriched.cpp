#include "polar/enriched.hpp"

#include <algorithm>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

void EnrichedCycle::add(const Ideal& support, const FGAbelianGroup& group) {
    if (group.is_zero()) return;
    for (auto& c : comps_) {
        if (ideal_equal(c.support, support)) {
            c.group = direct_sum(c.group, group);
            return;
        }
    }
    comps_.push_back({support, group});
    std::sort(comps_.begin(), comps_.end(), [](const Component& a, const Component& b) {
        return a.support.str() < b.support.str();
    });
}

const FGAbelianGroup* EnrichedCycle::coefficient(const Ideal& support) const {
    for (const auto& c : comps_)
        if (ideal_equal(c.support, support)) return &c.group;
    return nullptr;
}

std::string EnrichedCycle::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << " + ";
        os << comps_[i].group.str() << "[V" << comps_[i].support.str() << "]";
    }
    return os.str();
}

bool enriched_equal(const EnrichedCycle& a, const EnrichedCycle& b) {
    if (a.components().size() != b.components().size()) return false;
    for (std::size_t i = 0; i < a.components().size(); ++i) {
        if (!(a.components()[i].group == b.components()[i].group)) return false;
        if (!ideal_equal(a.components()[i].support, b.components()[i].support)) return false;
    }
    return true;
}

void GradedEnrichedCycle::add(int degree, const Ideal& support, const FGAbelianGroup& group) {
    if (group.is_zero()) return;
    deg_[degree].add(support, group);
}

const EnrichedCycle* GradedEnrichedCycle::degree(int k) const {
    auto it = deg_.find(k);
    return it == deg_.end() ? nullptr : &it->second;
}

std::string GradedEnrichedCycle::str() const {
    if (deg_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : deg_) {
        if (!first) os << "\n";
        os << "degree " << k << ": " << e.str();
        first = false;
    }
    return os.str();
}

bool ge_equal(const GradedEnrichedCycle& a, const GradedEnrichedCycle& b) {
    if (a.by_degree().size() != b.by_degree().size()) return false;
    auto it = b.by_degree().begin();
    for (const auto& [k, e] : a.by_degree()) {
        if (it->first != k || !enriched_equal(it->second, e)) return false;
        ++it;
    }
    return true;
}

GradedEnrichedCycle ge_sum(const GradedEnrichedCycle& a, const GradedEnrichedCycle& b) {
    GradedEnrichedCycle out = a;
    for (const auto& [k, e] : b.by_degree())
        for (const auto& c : e.components()) out.add(k, c.support, c.group);
    return out;
}

GradedEnrichedCycle ge_shift(const GradedEnrichedCycle& e, int k) {
    GradedEnrichedCycle out;
    for (const auto& [i, cyc] : e.by_degree())
        for (const auto& c : cyc.components()) out.add(i - k, c.support, c.group);
    return out;
}

GradedEnrichedCycle ge_scale(const FGAbelianGroup& q, const GradedEnrichedCycle& e) {
    GradedEnrichedCycle out;
    for (const auto& [i, cyc] : e.by_degree())
        for (const auto& c : cyc.components()) out.add(i, c.support, tensor(q, c.group));
    return out;
}

bool ge_leq(const GradedEnrichedCycle& d, const GradedEnrichedCycle& e) {
    for (const auto& [k, cyc] : d.by_degree()) {
        const EnrichedCycle* other = e.degree(k);
        for (const auto& c : cyc.components()) {
            if (!other) return false;
            const FGAbelianGroup* g = other->coefficient(c.support);
            if (!g || !summand_leq(c.group, *g)) return false;
        }
    }
    return true;
}

std::string SignedCycle::str() const {
    if (components.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) os << " + ";
        os << components[i].second << "*[V" << components[i].first.str() << "]";
    }
    return os.str();
}

bool signed_cycle_equal(const SignedCycle& a, const SignedCycle& b) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i].second != b.components[i].second) return false;
        if (!ideal_equal(a.components[i].first, b.components[i].first)) return false;
    }
    return true;
}

SignedCycle ordinary_of(const GradedEnrichedCycle& e) {
    std::vector<std::pair<Ideal, long>> acc;
    for (const auto& [k, cyc] : e.by_degree()) {
        long sign = (k % 2 == 0) ? 1 : -1;
        for (const auto& c : cyc.components()) {
            if (c.group.rank() == 0) continue;
            long contrib = sign * static_cast<long>(c.group.rank());
            bool found = false;
            for (auto& [supp, n] : acc)
                if (ideal_equal(supp, c.support)) {
                    n += contrib;
                    found = true;
                    break;
                }
            if (!found) acc.emplace_back(c.support, contrib);
        }
    }
    SignedCycle out;
    for (auto& [supp, n] : acc)
        if (n != 0) out.components.emplace_back(supp, n);
    std::sort(out.components.begin(), out.components.end(),
              [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
    return out;
}

IntersectionOracle point_intersection_oracle() {
    return [](const Ideal& V, const Ideal& W) -> Cycle {
        Cycle out;
        Ideal I = ideal_sum(V, W);
        if (I.is_unit()) return out;
        auto dv = krull_dim(V), dw = krull_dim(W), di = krull_dim(I);
        if (!dv || !dw) return out;
        const int n = static_cast<int>(V.ctx()->arity());
        if (*dv + *dw - n != 0)
            throw Error("point intersection oracle expects complementary dimensions, got " +
                        std::to_string(*dv) + " + " + std::to_string(*dw) + " in " +
                        std::to_string(n) + " variables");
        if (di && *di != 0)
            throw NonProperError("components V" + V.str() + " and V" + W.str() +
                                 " meet in dimension " + std::to_string(*di));
        auto points = rational_points(I);
        unsigned counted = 0;
        for (const auto& p : points) {
            unsigned m = length_at(I, p);
            out.add(Ideal::point(p), m);
            counted += m;
        }
        auto total = vspace_dim(I);
        if (!total || *total != counted)
            throw Error("intersection has irrational points; cannot name its components");
        return out;
    };
}

GradedEnrichedCycle ge_intersect(const GradedEnrichedCycle& d, const GradedEnrichedCycle& e,
                                 const IntersectionOracle& oracle) {
    GradedEnrichedCycle out;
    for (const auto& [i, dc] : d.by_degree()) {
        for (const auto& [j, ec] : e.by_degree()) {
            for (const auto& a : dc.components()) {
                for (const auto& b : ec.components()) {
                    Cycle cyc = oracle(a.support, b.support);
                    FGAbelianGroup coeff = tensor(a.group, b.group);
                    for (const auto& comp : cyc.components)
                        out.add(i + j, comp.prime,
                                tensor(coeff, FGAbelianGroup::free(comp.mult)));
                }
            }
        }
    }
    return out;
}

GradedEnrichedCycle ge_pushforward(const GradedEnrichedCycle& e,
                                   const std::function<Ideal(const Ideal&)>& image) {
    GradedEnrichedCycle out;
    for (const auto& [k, cyc] : e.by_degree())
        for (const auto& c : cyc.components()) out.add(k, image(c.support), c.group);
    return out;
}

}  // namespace polar
