#include "polar/rational.hpp"

#include <algorithm>

#include "polar/errors.hpp"

namespace polar {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal", 0);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("malformed rational literal '" + s + "'", 0);
    q.canonicalize();
    return q;
}

std::vector<Integer> divisors(const Integer& n) {
    Integer m = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    std::vector<std::pair<Integer, unsigned>> out;
    Integer m = n;
    for (Integer p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

}  // namespace polar
