#ifndef POLAR_POLYNOMIAL_HPP
#define POLAR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polar/context.hpp"
#include "polar/rational.hpp"

namespace polar {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Graded reverse-lexicographic comparison; returns <0, 0, >0 as a <, =, > b.
int grevlex_cmp(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over the rationals. Terms are stored
// grevlex-descending with no zero coefficients, so equal polynomials have
// identical representations.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)) {}
    Polynomial(CtxPtr ctx, const Rational& c);

    static Polynomial variable(const CtxPtr& ctx, std::size_t index);
    static Polynomial monomial(const CtxPtr& ctx, Exponents e, const Rational& c);
    // Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
    static Polynomial from_terms(CtxPtr ctx, std::vector<std::pair<Exponents, Rational>> terms);

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Exponents, Rational>>& terms() const { return terms_; }

    unsigned degree() const;  // total degree; 0 for the zero polynomial

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Total order compatible with equality, for canonical sorting.
    static int cmp(const Polynomial& a, const Polynomial& b);

    Polynomial derivative(std::size_t var) const;
    Polynomial derivative(const std::string& var) const;

    // Simultaneous substitution of polynomials for variables (by index).
    Polynomial substituted(const std::map<std::size_t, Polynomial>& bindings) const;

    Rational evaluate(const RationalPoint& pt) const;

    // The same polynomial with pt moved to the origin (z -> z + pt).
    Polynomial translated(const RationalPoint& pt) const;

    // Reinterprets the polynomial in a context whose variables include this
    // one's (matched by name); used to move between ambient and doubled rings.
    Polynomial embedded(const CtxPtr& bigger) const;

    std::string str() const;

private:
    CtxPtr ctx_;
    std::vector<std::pair<Exponents, Rational>> terms_;

    void insert_term(const Exponents& e, const Rational& c);
    friend Polynomial collect(CtxPtr, const std::vector<std::pair<Exponents, Rational>>&);
};

// Minimal total degree among terms of p translated so pt is the origin.
// Throws DimensionError on the zero polynomial.
unsigned vanishing_order(const Polynomial& p, const RationalPoint& pt);

// Parses the +,-,*,^ grammar with integer/rational literals and the
// context's variable names. Throws ParseError with a byte position.
Polynomial parse_poly(const std::string& src, const CtxPtr& ctx);

}  // namespace polar

#endif
