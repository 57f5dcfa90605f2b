#include "polar/order.hpp"

namespace polar {

namespace {

int grevlex_on(const Exponents& a, const Exponents& b, const std::vector<std::size_t>& vars) {
    unsigned da = 0, db = 0;
    for (std::size_t i : vars) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = vars.size(); k-- > 0;) {
        std::size_t i = vars[k];
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    switch (kind) {
        case Kind::Grevlex:
            return grevlex_cmp(a, b);
        case Kind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case Kind::Elim: {
            std::vector<bool> in_block(a.size(), false);
            for (std::size_t i : elim) in_block[i] = true;
            int c = grevlex_on(a, b, elim);
            if (c != 0) return c;
            std::vector<std::size_t> rest;
            rest.reserve(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                if (!in_block[i]) rest.push_back(i);
            return grevlex_on(a, b, rest);
        }
    }
    return 0;
}

}  // namespace polar
