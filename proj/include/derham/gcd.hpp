#pragma once

#include <vector>

#include "derham/polynomial.hpp"

namespace derham {

/// Greatest common divisor in Q[x1..xn], normalized with primitive_normalized
/// (integer content 1, positive leading coefficient). A constant gcd is returned as 1.
///
/// Works recursively: contents with respect to the smallest-index variable present
/// are split off and handled one variable down, and the primitive parts go through
/// a subresultant polynomial remainder sequence over Q[remaining variables].
///
/// Throws BothZero when p = q = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// True iff d divides p exactly in Q[x1..xn]. d must be nonzero.
bool divides(const Polynomial& d, const Polynomial& p);

/// Coefficients of p viewed as a univariate polynomial in variable `var`:
/// result[k] is the coefficient of var^k, a polynomial of the same arity free of var.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

/// Inverse of coefficients_in.
Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var);

}  // namespace derham
