#pragma once

#include <vector>

#include "derham/linalg.hpp"
#include "derham/polynomial.hpp"

namespace derham {

/// Polynomial tuple (A_1, ..., A_n) standing for the 1-form sum_i (A_i / P) dx_i.
struct FormTuple {
    std::vector<Polynomial> parts;

    friend bool operator==(const FormTuple&, const FormTuple&) = default;
};

/// Degree box for slot i: multideg(P) with the i-th entry lowered by one.
MultiDegree slot_bound(const MultiDegree& degrees, std::size_t slot);

/// All monomials with exponents componentwise <= bound, in a fixed enumeration order.
/// Empty if some bound is negative.
std::vector<Monomial> box_monomials(const MultiDegree& bound);

/// P * d_i A_j - A_j * d_i P - P * d_j A_i + A_i * d_j P, i.e. P^2 times
/// d_i(A_j / P) - d_j(A_i / P).
Polynomial closedness_residual(const Polynomial& P, const FormTuple& a, std::size_t i, std::size_t j);

/// Every pairwise residual vanishes identically.
bool is_closed(const Polynomial& P, const FormTuple& a);

/// multideg(A_i) <= slot_bound(multideg(P), i) for every slot.
bool within_bounds(const Polynomial& P, const FormTuple& a);

/// Linear system in the coefficients of A_1..A_n whose kernel is the space of
/// closed forms with bounded multidegree.
struct RuppertSystem {
    Polynomial base;
    MultiDegree degrees;
    /// unknown_layout[i] lists the admissible monomials of A_i; columns are numbered
    /// slot by slot in this order.
    std::vector<std::vector<Monomial>> unknown_layout;
    std::vector<std::size_t> slot_offset;
    std::size_t columns = 0;
    /// One row per (pair i<j, output monomial) with a nonzero constraint.
    std::vector<SparseRow> rows;

    FormTuple assemble(const RationalVector& coefficients) const;
    /// Column coordinates of a tuple; throws DimensionMismatch if it leaves the boxes.
    RationalVector coordinates(const FormTuple& a) const;
};

struct RuppertBasis {
    std::vector<FormTuple> tuples;
    /// Kernel vectors in reduced row echelon form, parallel to tuples.
    std::vector<RationalVector> vectors;
    std::vector<std::size_t> pivot_columns;
    EliminationStats stats;

    std::size_t dimension() const noexcept { return tuples.size(); }
};

/// Throws ConstantInput for constant P.
RuppertSystem build_system(const Polynomial& P);

/// Exact kernel of the system. Every returned tuple is checked against the
/// cleared closedness identity; a failure raises InternalError.
RuppertBasis nullspace(const RuppertSystem& system);

/// True iff the tuple lies in the span of the basis.
bool contains(const RuppertSystem& system, const RuppertBasis& basis, const FormTuple& a);

/// dim F(P) without the reducedness precheck.
std::size_t solution_dimension(const Polynomial& P);

/// Number of absolutely irreducible factors of a reduced nonconstant P.
/// Runs the reducedness check first (NotReduced on failure).
std::size_t count_factors(const Polynomial& P);

}  // namespace derham
