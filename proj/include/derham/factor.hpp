#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "derham/genericity.hpp"
#include "derham/linalg.hpp"
#include "derham/polynomial.hpp"
#include "derham/ruppert.hpp"
#include "derham/univariate.hpp"

namespace derham {

/// Raised when no sampled v gave a squarefree characteristic polynomial.
class RetriesExhausted : public Error {
public:
    RetriesExhausted(const std::string& what, Univariate char_poly, std::uint64_t seed)
        : Error(what), char_poly_(std::move(char_poly)), seed_(seed) {}

    const Univariate& char_poly() const noexcept { return char_poly_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    Univariate char_poly_;
    std::uint64_t seed_;
};

/// Arithmetic in Q[x]/(P) restricted to the two s-dimensional subspaces spanned by
/// the first components of the closed forms (ebar) and by those times dP/dx_var (etilde).
struct QuotientContext {
    Polynomial modulus;
    std::size_t variable = 0;
    Polynomial derivative;
    std::vector<Polynomial> ebar_basis;
    std::vector<Polynomial> etilde_basis;
};

/// Matrix of v -> (multiply by v, then undo multiplication by dP/dx_var) on ebar_basis.
struct EndoMatrix {
    RationalMatrix entries;
    Polynomial v_rep;
};

/// ebar_basis[k] = normal_form(A_k[var], P) for the kernel tuples A_k,
/// etilde_basis[k] = normal_form(ebar_basis[k] * dP/dx_var, P). Both must be
/// independent of dimension s, otherwise DimensionMismatch.
QuotientContext build_quotient(const Polynomial& P, const RuppertBasis& basis, std::size_t variable = 0);

/// Uses v = sum_k coefficients[k] * ebar_basis[k].
EndoMatrix build_endo(const QuotientContext& ctx, const std::vector<Rational>& coefficients);

/// Monic characteristic polynomial det(t I - M) by the Faddeev-LeVerrier recurrence.
Univariate char_poly(const RationalMatrix& m);

struct FactorizationResult {
    /// Primitive factors with rational coefficients, ordered by ascending eigenvalue.
    std::vector<Polynomial> factors;
    std::vector<Rational> eigenvalues;
    Univariate char_poly;
    /// Cofactor not split over Q; 1 when every absolute factor is rational.
    Polynomial residual;
    /// P = unit * prod(factors) * residual.
    Rational unit;
    bool certificate_ok = false;
    std::size_t count = 0;
    /// Coefficients used for v on the final attempt and the attempt count.
    std::vector<Rational> v_coefficients;
    unsigned attempts = 0;
    std::size_t variable = 0;
    bool sheared = false;
};

struct SplitOptions {
    std::uint64_t seed = 1;
    unsigned max_retries = 8;
};

/// Full pipeline: genericity selection or shear, reducedness check, kernel of the
/// Ruppert system, endomorphism eigenvalues, and one gcd per rational eigenvalue.
/// Factors are returned in the caller's coordinates.
FactorizationResult split(const Polynomial& P, const SplitOptions& options = {});

bool is_absolutely_irreducible(const Polynomial& P);

}  // namespace derham
