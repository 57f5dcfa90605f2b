#include "polar/context.hpp"

#include <set>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

CtxPtr VarContext::make(std::vector<std::string> names) {
    if (names.empty()) throw ValidationError("variable context must be nonempty", "/variables");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw ValidationError("empty variable name", "/variables");
        if (!seen.insert(n).second)
            throw ValidationError("duplicate variable name '" + n + "'", "/variables");
    }
    auto ctx = std::make_shared<VarContext>();
    ctx->names_ = std::move(names);
    ctx->ambient_ = ctx->names_.size();
    return ctx;
}

CtxPtr VarContext::make_doubled(const CtxPtr& ambient) {
    if (ambient->doubled()) throw Error("context is already doubled");
    std::vector<std::string> names = ambient->names();
    const std::size_t n = names.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::string w = "w" + std::to_string(i);
        if (ambient->index_of(w))
            throw ValidationError("ambient variable '" + w + "' collides with a cotangent name",
                                  "/variables");
        names.push_back(std::move(w));
    }
    auto ctx = std::make_shared<VarContext>();
    ctx->names_ = std::move(names);
    ctx->ambient_ = n;
    return ctx;
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

CtxPtr VarContext::ambient_part() const {
    if (!doubled()) throw Error("context has no cotangent block");
    return make(std::vector<std::string>(names_.begin(), names_.begin() + ambient_));
}

bool same_context(const CtxPtr& a, const CtxPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

RationalPoint RationalPoint::origin(const CtxPtr& ctx) {
    return RationalPoint{ctx, std::vector<Rational>(ctx->arity(), Rational(0))};
}

bool RationalPoint::is_origin() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

std::string RationalPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace polar
