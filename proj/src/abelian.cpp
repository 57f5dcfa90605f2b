#include "polar/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

namespace {

// Renormalizes a multiset of cyclic orders (>= 2 after dropping units) into
// the invariant-factor chain: group the prime powers, then recombine the
// largest exponents of every prime into the largest factor, and so on.
std::vector<Integer> invariant_factors(const std::vector<Integer>& orders) {
    std::map<Integer, std::vector<unsigned>> by_prime;
    for (const Integer& d : orders) {
        if (d <= 1) {
            if (d == 1) continue;
            throw Error("torsion order must be >= 2, got " + d.get_str());
        }
        for (const auto& [p, e] : factorize(d)) by_prime[p].push_back(e);
    }
    std::size_t levels = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.rbegin(), es.rend());
        levels = std::max(levels, es.size());
    }
    std::vector<Integer> factors(levels, Integer(1));
    for (const auto& [p, es] : by_prime) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), es[i]);
            factors[i] *= pk;  // factors[0] is the largest invariant factor
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

}  // namespace

FGAbelianGroup::FGAbelianGroup(unsigned rank, std::vector<Integer> torsion_orders)
    : rank_(rank), torsion_(invariant_factors(torsion_orders)) {}

std::string FGAbelianGroup::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << "Z";
        if (rank_ > 1) os << "^" << rank_;
        first = false;
    }
    for (const auto& d : torsion_) {
        if (!first) os << " (+) ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<Integer> t = a.torsion();
    t.insert(t.end(), b.torsion().begin(), b.torsion().end());
    return FGAbelianGroup(a.rank() + b.rank(), std::move(t));
}

FGAbelianGroup tensor(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<Integer> t;
    for (const auto& d : a.torsion())
        for (unsigned i = 0; i < b.rank(); ++i) t.push_back(d);
    for (const auto& e : b.torsion())
        for (unsigned i = 0; i < a.rank(); ++i) t.push_back(e);
    for (const auto& d : a.torsion())
        for (const auto& e : b.torsion()) {
            Integer g = gcd(d, e);
            if (g > 1) t.push_back(g);
        }
    return FGAbelianGroup(a.rank() * b.rank(), std::move(t));
}

bool summand_leq(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    if (a.rank() > b.rank()) return false;
    // prime by prime, the multiset of exponents of a must embed into b's
    std::map<Integer, std::vector<unsigned>> pa, pb;
    for (const auto& d : a.torsion())
        for (const auto& [p, e] : factorize(d)) pa[p].push_back(e);
    for (const auto& d : b.torsion())
        for (const auto& [p, e] : factorize(d)) pb[p].push_back(e);
    for (auto& [p, es] : pa) {
        auto it = pb.find(p);
        if (it == pb.end()) return false;
        std::vector<unsigned> have = it->second;
        std::sort(es.begin(), es.end());
        std::sort(have.begin(), have.end());
        // greedy multiset containment
        std::size_t j = 0;
        for (unsigned e : es) {
            while (j < have.size() && have[j] != e) ++j;
            if (j == have.size()) return false;
            ++j;
        }
    }
    return true;
}

}  // namespace polar
