#include "polar/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

int grevlex_cmp(const Exponents& a, const Exponents& b) {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

struct GrevlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return grevlex_cmp(a, b) < 0;
    }
};

}  // namespace

Polynomial collect(CtxPtr ctx, const std::vector<std::pair<Exponents, Rational>>& terms) {
    std::map<Exponents, Rational, GrevlexLess> acc;
    for (const auto& [e, c] : terms) acc[e] += c;
    Polynomial p(std::move(ctx));
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.insert_term(it->first, it->second);
    return p;
}

void Polynomial::insert_term(const Exponents& e, const Rational& c) {
    terms_.emplace_back(e, c);
}

Polynomial::Polynomial(CtxPtr ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (c != 0) terms_.emplace_back(Exponents(ctx_->arity(), 0), c);
}

Polynomial Polynomial::variable(const CtxPtr& ctx, std::size_t index) {
    Exponents e(ctx->arity(), 0);
    e.at(index) = 1;
    return monomial(ctx, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(const CtxPtr& ctx, Exponents e, const Rational& c) {
    if (e.size() != ctx->arity()) throw DimensionError("exponent vector arity mismatch");
    Polynomial p(ctx);
    if (c != 0) p.terms_.emplace_back(std::move(e), c);
    return p;
}

Polynomial Polynomial::from_terms(CtxPtr ctx, std::vector<std::pair<Exponents, Rational>> terms) {
    return collect(std::move(ctx), terms);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
}

unsigned Polynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.front().first);
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ctx_);
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) p.terms_.emplace_back(e, -c);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!same_context(ctx_, o.ctx_)) throw DimensionError("polynomial context mismatch");
    Polynomial p(ctx_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grevlex_cmp(terms_[i].first, o.terms_[j].first);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].second + o.terms_[j].second;
            if (s != 0) p.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!same_context(ctx_, o.ctx_)) throw DimensionError("polynomial context mismatch");
    std::map<Exponents, Rational, GrevlexLess> acc;
    Exponents e(ctx_->arity());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            acc[e] += ca * cb;
        }
    }
    Polynomial p(ctx_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.emplace_back(it->first, it->second);
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(ctx_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, k] : terms_) p.terms_.emplace_back(e, k * c);
    return p;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(ctx_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    std::size_t i = 0;
    for (; i < a.terms_.size() && i < b.terms_.size(); ++i) {
        int c = grevlex_cmp(a.terms_[i].first, b.terms_[i].first);
        if (c != 0) return c;
        if (a.terms_[i].second != b.terms_[i].second)
            return a.terms_[i].second < b.terms_[i].second ? -1 : 1;
    }
    if (i < a.terms_.size()) return 1;
    if (i < b.terms_.size()) return -1;
    return 0;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ctx_->arity()) throw DimensionError("unknown variable index");
    Polynomial p(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        p.terms_.emplace_back(std::move(d), c * e[var]);
    }
    // dropping the same variable from every term keeps them sorted and distinct
    return p;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    auto idx = ctx_->index_of(var);
    if (!idx) throw DimensionError("unknown variable '" + var + "'");
    return derivative(*idx);
}

Polynomial Polynomial::substituted(const std::map<std::size_t, Polynomial>& bindings) const {
    for (const auto& [i, b] : bindings) {
        if (i >= ctx_->arity()) throw DimensionError("binding for unknown variable index");
        if (!same_context(b.ctx(), ctx_)) throw DimensionError("binding context mismatch");
    }
    Polynomial out(ctx_);
    for (const auto& [e, c] : terms_) {
        Exponents fixed(ctx_->arity(), 0);
        Polynomial part(ctx_, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(i);
            if (it == bindings.end())
                fixed[i] = e[i];
            else
                part = part * it->second.pow(e[i]);
        }
        out = out + part * monomial(ctx_, std::move(fixed), Rational(1));
    }
    return out;
}

Rational Polynomial::evaluate(const RationalPoint& pt) const {
    if (!same_context(pt.ctx, ctx_)) throw DimensionError("point context mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= pt.coords[i];
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::translated(const RationalPoint& pt) const {
    if (!same_context(pt.ctx, ctx_)) throw DimensionError("point context mismatch");
    std::map<std::size_t, Polynomial> bind;
    for (std::size_t i = 0; i < pt.coords.size(); ++i) {
        if (pt.coords[i] != 0)
            bind.emplace(i, variable(ctx_, i) + Polynomial(ctx_, pt.coords[i]));
    }
    return bind.empty() ? *this : substituted(bind);
}

Polynomial Polynomial::embedded(const CtxPtr& target) const {
    if (same_context(ctx_, target)) return *this;
    // only variables that actually occur need a slot in the target context
    std::vector<std::optional<std::size_t>> where(ctx_->arity());
    for (std::size_t i = 0; i < ctx_->arity(); ++i) where[i] = target->index_of(ctx_->name(i));
    std::vector<std::pair<Exponents, Rational>> terms;
    terms.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        Exponents out(target->arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!where[i])
                throw DimensionError("variable '" + ctx_->name(i) +
                                     "' missing from target context");
            out[*where[i]] = e[i];
        }
        terms.emplace_back(std::move(out), c);
    }
    return collect(target, terms);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono;
        }
    }
    return os.str();
}

unsigned vanishing_order(const Polynomial& p, const RationalPoint& pt) {
    if (p.is_zero()) throw DimensionError("vanishing order of the zero polynomial");
    Polynomial q = pt.is_origin() ? p : p.translated(pt);
    unsigned best = 0;
    bool have = false;
    for (const auto& [e, c] : q.terms()) {
        unsigned d = total_degree(e);
        if (!have || d < best) {
            best = d;
            have = true;
        }
    }
    return best;
}

// --- parser ------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& src, CtxPtr ctx) : src_(src), ctx_(std::move(ctx)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& src_;
    CtxPtr ctx_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        skip_ws();
        if (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                throw ParseError("missing operator (use explicit '*')", pos_);
        }
        return acc;
    }

    Polynomial factor() {
        skip_ws();
        if (eat('-')) return -factor();
        Polynomial base = atom();
        if (eat('^')) {
            unsigned k = natural();
            return base.pow(k);
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            auto idx = ctx_->index_of(name);
            if (!idx) throw ParseError("unknown identifier '" + name + "'", start);
            return Polynomial::variable(ctx_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    unsigned natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        unsigned long v = std::stoul(src_.substr(start, pos_ - start));
        return static_cast<unsigned>(v);
    }

    Polynomial number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string digits = src_.substr(start, pos_ - start);
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (dstart == pos_) throw ParseError("expected denominator", pos_);
            digits += "/" + src_.substr(dstart, pos_ - dstart);
        }
        return Polynomial(ctx_, rational_from_string(digits));
    }
};

}  // namespace

Polynomial parse_poly(const std::string& src, const CtxPtr& ctx) {
    return Parser(src, ctx).run();
}

}  // namespace polar
