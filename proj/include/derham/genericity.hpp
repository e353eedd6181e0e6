#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "derham/linear_change.hpp"
#include "derham/polynomial.hpp"

namespace derham {

inline constexpr unsigned kDefaultDegreeCap = 40;

/// Raised when the input has a repeated factor; carries gcd(P, dP/dx_k) in the
/// caller's coordinates.
class NotReduced : public Error {
public:
    NotReduced(const std::string& what, Polynomial witness) : Error(what), witness_(std::move(witness)) {}

    const Polynomial& witness() const noexcept { return witness_; }

private:
    Polynomial witness_;
};

/// Reduced Groebner basis under degrevlex, monic, sorted by descending leading monomial.
/// Buchberger with the normal selection strategy and the coprime-leading-monomial
/// criterion. Pairs whose lcm exceeds degree_cap raise DegreeCapExceeded.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, unsigned degree_cap = kDefaultDegreeCap);

/// Fully reduces p by the set g (no term of the result is divisible by a leading monomial of g).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g);

struct GenericityReport {
    std::size_t variable = 0;
    bool is_generic = false;
    /// {1} when generic; otherwise the reduced Groebner basis of the coefficient ideal.
    std::vector<Polynomial> witness;
    std::optional<LinearChange> shear_applied;
};

/// Coefficients a_0..a_m of P as a polynomial in `var`, leading first; zero
/// coefficients are kept so that P = sum a_k var^(m-k).
std::vector<Polynomial> coefficient_ideal(const Polynomial& P, std::size_t var);

/// Finite-fiber test for the projection forgetting `var`: the coefficients of P in
/// `var` must generate the unit ideal. A nonzero constant coefficient answers at once.
/// Throws VariableAbsent if P does not involve var, ConstantInput for constant P.
GenericityReport is_generic(const Polynomial& P, std::size_t var, unsigned degree_cap = kDefaultDegreeCap);

struct GenericForm {
    Polynomial poly;      // apply_change(P, change)
    LinearChange change;  // shear x_j -> x_j + c_j x_var
    std::size_t variable = 0;
};

/// Shears P until x_var^d (d = total degree) has a nonzero coefficient. Shift
/// coefficients are drawn from [-B, B], B = 2 doubling per attempt, at most 64 attempts.
GenericForm make_generic(const Polynomial& P, std::uint64_t seed, std::size_t var = 0);

struct ReducedCheck {
    bool reduced = false;
    /// gcd(P, dP/dx_var); 1 when reduced.
    Polynomial witness;
};

/// Squarefreeness via gcd(P, dP/dx_var). P must be generic in var (NotGeneric otherwise).
ReducedCheck check_reduced(const Polynomial& P, std::size_t var = 0);

/// Input ready for factor extraction: working = apply_change(original, change) is
/// generic in `variable` and reduced.
struct PreparedInput {
    Polynomial original;
    Polynomial working;
    std::size_t variable = 0;
    LinearChange change = LinearChange::identity(1);
    GenericityReport report;

    bool sheared() const { return !change.is_identity(); }
};

/// Tries x_1, x_2, ... in order and shears only if no coordinate direction is generic;
/// then checks reducedness and throws NotReduced with the pulled-back witness.
PreparedInput prepare(const Polynomial& P, std::uint64_t seed);

}  // namespace derham
