#pragma once

#include <vector>

#include "derham/polynomial.hpp"

namespace derham {

/// Dense univariate polynomial over Q, coefficient k multiplies t^k. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Univariate {
public:
    Univariate() = default;
    explicit Univariate(std::vector<Rational> coefficients);

    static Univariate from_polynomial(const Polynomial& p);
    Polynomial to_polynomial() const;

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& t) const;
    Univariate derivative() const;
    Univariate monic() const;

    friend Univariate operator-(const Univariate& a, const Univariate& b);
    friend Univariate operator*(const Univariate& a, const Univariate& b);
    /// Remainder of Euclidean division; b nonzero.
    friend Univariate operator%(const Univariate& a, const Univariate& b);
    friend bool operator==(const Univariate&, const Univariate&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd over Q.
Univariate gcd(const Univariate& a, const Univariate& b);

/// gcd(f, f') is constant.
bool is_squarefree(const Univariate& f);

/// All distinct rational roots of f in ascending order. f nonzero.
///
/// On the primitive integer form a_d t^d + ... + a_0 every rational root is k / a_d
/// for an integer k (its reduced denominator divides a_d), so the search runs over
/// integers: Sturm-sequence bisection isolates each real root of the squarefree part
/// to an interval holding a single candidate k / a_d, which is then tested exactly.
std::vector<Rational> rational_roots(const Univariate& f);

}  // namespace derham
