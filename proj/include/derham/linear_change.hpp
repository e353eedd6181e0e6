#pragma once

#include <vector>

#include "derham/polynomial.hpp"

namespace derham {

/// Affine automorphism x -> M x + b of Q^n. Construction rejects singular M.
class LinearChange {
public:
    using Matrix = std::vector<std::vector<Rational>>;

    LinearChange(Matrix matrix, std::vector<Rational> translation);

    static LinearChange identity(std::size_t n);
    /// x_j -> x_j + shifts[j] * x_lead for j != lead; shifts[lead] is ignored.
    static LinearChange shear(std::size_t lead, const std::vector<Rational>& shifts);

    std::size_t dimension() const noexcept { return matrix_.size(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    const std::vector<Rational>& translation() const noexcept { return translation_; }
    bool is_identity() const;

    LinearChange inverse() const;
    /// The change x -> this(inner(x)), so that
    /// apply_change(apply_change(p, s), t) == apply_change(p, s.after(t)).
    LinearChange after(const LinearChange& inner) const;

    friend bool operator==(const LinearChange&, const LinearChange&) = default;

private:
    Matrix matrix_;
    std::vector<Rational> translation_;
};

/// p(M x + b): each variable x_i is replaced by sum_j M[i][j] x_j + b[i].
Polynomial apply_change(const Polynomial& p, const LinearChange& t);

/// Exact determinant by fraction-based elimination.
Rational determinant(LinearChange::Matrix m);

}  // namespace derham
