#include "derham/linear_change.hpp"

#include <utility>

namespace derham {

Rational determinant(LinearChange::Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

LinearChange::LinearChange(Matrix matrix, std::vector<Rational> translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
    const std::size_t n = matrix_.size();
    if (n == 0) throw SingularChange("empty linear change");
    for (const auto& row : matrix_)
        if (row.size() != n) throw ArityMismatch("linear change matrix must be square");
    if (translation_.size() != n) throw ArityMismatch("translation length must match the matrix");
    if (sgn(determinant(matrix_)) == 0) throw SingularChange("linear change matrix is singular");
}

LinearChange LinearChange::identity(std::size_t n) {
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return LinearChange(std::move(m), std::vector<Rational>(n, Rational(0)));
}

LinearChange LinearChange::shear(std::size_t lead, const std::vector<Rational>& shifts) {
    const std::size_t n = shifts.size();
    if (lead >= n) throw IndexOutOfRange("shear lead variable out of range");
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
        if (i != lead) m[i][lead] = shifts[i];
    }
    return LinearChange(std::move(m), std::vector<Rational>(n, Rational(0)));
}

bool LinearChange::is_identity() const { return *this == identity(dimension()); }

LinearChange LinearChange::inverse() const {
    const std::size_t n = dimension();
    Matrix a = matrix_;
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (sgn(a[pivot][col]) == 0) ++pivot;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    // x = M^-1 (y - b)
    std::vector<Rational> shift(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shift[i] -= inv[i][j] * translation_[j];
    return LinearChange(std::move(inv), std::move(shift));
}

LinearChange LinearChange::after(const LinearChange& inner) const {
    const std::size_t n = dimension();
    if (inner.dimension() != n) throw ArityMismatch("composing linear changes of different dimension");
    // this(inner(x)) = M (N x + c) + b
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> shift = translation_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(matrix_[i][k]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m[i][j] += matrix_[i][k] * inner.matrix_[k][j];
            shift[i] += matrix_[i][k] * inner.translation_[k];
        }
    }
    return LinearChange(std::move(m), std::move(shift));
}

Polynomial apply_change(const Polynomial& p, const LinearChange& t) {
    const std::size_t n = p.arity();
    if (t.dimension() != n) throw ArityMismatch("linear change dimension does not match polynomial arity");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img = Polynomial::constant(n, t.translation()[i]);
        for (std::size_t j = 0; j < n; ++j) img.add_term(Monomial::variable(n, j), t.matrix()[i][j]);
        images.push_back(std::move(img));
    }
    return substitute(p, images);
}

}  // namespace derham
