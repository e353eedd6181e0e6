#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "derham/errors.hpp"

namespace derham {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial. Its length is the arity of the owning ring.
class Monomial {
public:
    /// Inline storage up to six variables; larger arities spill to the heap.
    using Exponents = boost::container::small_vector<std::uint32_t, 6>;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(const std::vector<std::uint32_t>& exps) : exps_(exps.begin(), exps.end()) {}

    static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

    std::size_t arity() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const Exponents& exponents() const noexcept { return exps_; }

    std::uint64_t total_degree() const noexcept;
    bool is_one() const noexcept;
    bool divides(const Monomial& other) const noexcept;

    Monomial operator*(const Monomial& other) const;
    // Caller guarantees divides(other) is false only when it checked beforehand.
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Exponents exps_;
};

/// Graded reverse lexicographic order with x1 > x2 > ... > xn.
/// Returns <0, 0, >0 like a three-way comparison.
int degrevlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Strict "greater than" under degrevlex; sorts term maps in descending order.
struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return degrevlex_compare(a, b) > 0;
    }
};

/// Per-variable degree bounds; -1 in slot i means "no term may involve anything in slot i",
/// which for a polynomial's own multidegree only happens for the zero polynomial.
struct MultiDegree {
    std::vector<int> bounds;

    std::size_t arity() const noexcept { return bounds.size(); }
    int operator[](std::size_t i) const { return bounds[i]; }

    /// Componentwise partial order.
    bool leq(const MultiDegree& other) const;
    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients in canonical form:
/// no zero coefficient is ever stored, and terms are kept in descending degrevlex order.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, DegRevLexGreater>;

    explicit Polynomial(std::size_t arity = 1);

    static Polynomial constant(std::size_t arity, const Rational& c);
    static Polynomial variable(std::size_t arity, std::size_t index);
    static Polynomial term(const Monomial& m, const Rational& c);

    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// Leading term under degrevlex; precondition: nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Rational coefficient(const Monomial& m) const;
    /// Value of the constant term.
    Rational constant_term() const;

    /// Adds c*m, removing the entry if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    std::uint64_t total_degree() const;
    /// Degree in variable i, -1 for the zero polynomial.
    int degree_in(std::size_t i) const;
    bool involves(std::size_t i) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    /// Multiplies every term by the monomial m.
    Polynomial shifted(const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    void require_same_arity(const Polynomial& other) const;

    std::size_t arity_;
    Terms terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t i);

MultiDegree multideg(const Polynomial& p);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Multivariate division by a single polynomial under degrevlex. The remainder
/// has no term divisible by the divisor's leading monomial.
DivisionResult divide(const Polynomial& p, const Polynomial& divisor);

/// Canonical representative of p modulo the principal ideal (modulus).
Polynomial normal_form(const Polynomial& p, const Polynomial& modulus);

/// Quotient when divisor divides p exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor);

/// Substitutes the given constants for a subset of variables; arity is preserved.
Polynomial evaluate_partial(const Polynomial& p, const std::map<std::size_t, Rational>& assignments);

/// Full evaluation at a point of length arity().
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Replaces variable i by images[i]. All images share one arity, which becomes the
/// arity of the result.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const Polynomial& p);

/// p scaled to integer coefficients with content 1 and positive leading coefficient.
/// The zero polynomial maps to itself.
Polynomial primitive_normalized(const Polynomial& p);

/// The rational c with p = c * primitive_normalized(p); zero for p = 0.
Rational normalization_unit(const Polynomial& p);

}  // namespace derham
