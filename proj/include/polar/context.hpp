#ifndef POLAR_CONTEXT_HPP
#define POLAR_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polar/rational.hpp"

namespace polar {

class VarContext;
using CtxPtr = std::shared_ptr<const VarContext>;

// An ordered list of variable names. The ambient coordinates come first; a
// doubled context appends one cotangent coordinate per ambient one.
class VarContext {
public:
    static CtxPtr make(std::vector<std::string> names);

    // Appends cotangent coordinates w0..wn to an ambient context.
    static CtxPtr make_doubled(const CtxPtr& ambient);

    std::size_t arity() const { return names_.size(); }
    std::size_t ambient_arity() const { return ambient_; }
    bool doubled() const { return ambient_ != names_.size(); }

    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const;

    // The ambient context a doubled context was built from.
    CtxPtr ambient_part() const;

    bool same_as(const VarContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::size_t ambient_;
};

bool same_context(const CtxPtr& a, const CtxPtr& b);

// A point with one rational coordinate per context variable.
struct RationalPoint {
    CtxPtr ctx;
    std::vector<Rational> coords;

    static RationalPoint origin(const CtxPtr& ctx);
    bool is_origin() const;
    std::string str() const;
};

}  // namespace polar

#endif
