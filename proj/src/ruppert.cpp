#include "derham/ruppert.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

#include "derham/genericity.hpp"

namespace derham {

MultiDegree slot_bound(const MultiDegree& degrees, std::size_t slot) {
    if (slot >= degrees.arity()) throw IndexOutOfRange("slot index out of range");
    MultiDegree b = degrees;
    b.bounds[slot] -= 1;
    return b;
}

std::vector<Monomial> box_monomials(const MultiDegree& bound) {
    std::vector<Monomial> out;
    const std::size_t n = bound.arity();
    for (int b : bound.bounds)
        if (b < 0) return out;
    Monomial m(n);
    for (;;) {
        out.push_back(m);
        std::size_t i = 0;
        while (i < n && static_cast<int>(m[i]) == bound[i]) {
            m[i] = 0;
            ++i;
        }
        if (i == n) break;
        m[i] += 1;
    }
    return out;
}

Polynomial closedness_residual(const Polynomial& P, const FormTuple& a, std::size_t i, std::size_t j) {
    const Polynomial& ai = a.parts.at(i);
    const Polynomial& aj = a.parts.at(j);
    return P * partial_derivative(aj, i) - aj * partial_derivative(P, i) - P * partial_derivative(ai, j) +
           ai * partial_derivative(P, j);
}

bool is_closed(const Polynomial& P, const FormTuple& a) {
    if (a.parts.size() != P.arity()) throw ArityMismatch("form tuple length must equal the arity");
    for (std::size_t i = 0; i < P.arity(); ++i)
        for (std::size_t j = i + 1; j < P.arity(); ++j)
            if (!closedness_residual(P, a, i, j).is_zero()) return false;
    return true;
}

bool within_bounds(const Polynomial& P, const FormTuple& a) {
    if (a.parts.size() != P.arity()) throw ArityMismatch("form tuple length must equal the arity");
    const MultiDegree m = multideg(P);
    for (std::size_t i = 0; i < P.arity(); ++i)
        if (!multideg(a.parts[i]).leq(slot_bound(m, i))) return false;
    return true;
}

FormTuple RuppertSystem::assemble(const RationalVector& coefficients) const {
    if (coefficients.size() != columns) throw DimensionMismatch("coefficient vector has the wrong length");
    FormTuple a;
    for (std::size_t slot = 0; slot < unknown_layout.size(); ++slot) {
        Polynomial part(base.arity());
        for (std::size_t k = 0; k < unknown_layout[slot].size(); ++k)
            part.add_term(unknown_layout[slot][k], coefficients[slot_offset[slot] + k]);
        a.parts.push_back(std::move(part));
    }
    return a;
}

RationalVector RuppertSystem::coordinates(const FormTuple& a) const {
    if (a.parts.size() != unknown_layout.size()) throw DimensionMismatch("form tuple has the wrong length");
    RationalVector v(columns, Rational(0));
    for (std::size_t slot = 0; slot < unknown_layout.size(); ++slot) {
        const auto& layout = unknown_layout[slot];
        for (const auto& [m, c] : a.parts[slot].terms()) {
            // The layout is a box, so the position is a mixed-radix number.
            const MultiDegree bound = slot_bound(degrees, slot);
            std::size_t index = 0;
            std::size_t radix = 1;
            for (std::size_t i = 0; i < m.arity(); ++i) {
                if (static_cast<int>(m[i]) > bound[i]) throw DimensionMismatch("form tuple leaves the degree box");
                index += m[i] * radix;
                radix *= static_cast<std::size_t>(bound[i] + 1);
            }
            if (index >= layout.size() || !(layout[index] == m)) throw InternalError("degree box layout mismatch");
            v[slot_offset[slot] + index] = c;
        }
    }
    return v;
}

RuppertSystem build_system(const Polynomial& P) {
    if (P.is_constant()) throw ConstantInput("the Ruppert system needs a nonconstant polynomial");
    const std::size_t n = P.arity();
    RuppertSystem sys;
    sys.base = P;
    sys.degrees = multideg(P);
    for (std::size_t i = 0; i < n; ++i) {
        sys.slot_offset.push_back(sys.columns);
        sys.unknown_layout.push_back(box_monomials(slot_bound(sys.degrees, i)));
        sys.columns += sys.unknown_layout.back().size();
    }

    // Scaling P does not change the kernel; an integral P keeps every row integral.
    const Polynomial Q = primitive_normalized(P);
    struct QTerm {
        Monomial m;
        Integer c;
    };
    std::vector<QTerm> qterms;
    for (const auto& [m, c] : Q.terms()) qterms.push_back({m, c.get_num()});

    // Output monomials stay below 2 * multideg(P) componentwise; key them by a
    // mixed-radix index.
    std::vector<std::uint64_t> radix(n);
    std::uint64_t span = 1;
    for (std::size_t k = 0; k < n; ++k) {
        radix[k] = span;
        span *= 2 * static_cast<std::uint64_t>(sys.degrees[k]) + 1;
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::unordered_map<std::uint64_t, SparseRow> rows;
            // A column x^v of slot s, differentiated along w, contributes
            // v_w * Q * x^(v - e_w) - x^v * d_w Q, i.e. (v_w - m_w) c x^(m + v - e_w)
            // for every term c x^m of Q. A_i enters with sign -1 along x_j, A_j with +1 along x_i.
            struct Part {
                std::size_t slot;
                std::size_t wrt;
                int sign;
            };
            for (const Part part : {Part{i, j, -1}, Part{j, i, 1}}) {
                const auto& layout = sys.unknown_layout[part.slot];
                for (std::size_t k = 0; k < layout.size(); ++k) {
                    const auto col = static_cast<std::uint32_t>(sys.slot_offset[part.slot] + k);
                    const Monomial& v = layout[k];
                    for (const auto& t : qterms) {
                        const long factor = static_cast<long>(v[part.wrt]) - static_cast<long>(t.m[part.wrt]);
                        if (factor == 0) continue;
                        std::uint64_t key = 0;
                        for (std::size_t q = 0; q < n; ++q) key += (t.m[q] + v[q]) * radix[q];
                        key -= radix[part.wrt];
                        rows[key].push_back({col, t.c * (factor * part.sign)});
                    }
                }
            }
            std::vector<std::pair<std::uint64_t, SparseRow>> ordered(std::make_move_iterator(rows.begin()),
                                                                     std::make_move_iterator(rows.end()));
            std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [key, row] : ordered) sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

RuppertBasis nullspace(const RuppertSystem& system) {
    RuppertBasis basis;
    basis.vectors = integer_nullspace(system.rows, system.columns, &basis.stats);
    // The identity is homogeneous in P and in the tuple, so it is checked on
    // integral multiples, which keeps the products in integer arithmetic.
    const Polynomial base = primitive_normalized(system.base);
    for (const auto& v : basis.vectors) {
        std::size_t pivot = 0;
        while (sgn(v[pivot]) == 0) ++pivot;
        basis.pivot_columns.push_back(pivot);
        FormTuple a = system.assemble(v);
        Integer den = 1;
        for (const auto& x : v)
            if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        FormTuple scaled = a;
        for (auto& part : scaled.parts) part *= Rational(den);
        if (!is_closed(base, scaled)) throw InternalError("kernel vector fails the closedness identity");
        basis.tuples.push_back(std::move(a));
    }
    return basis;
}

bool contains(const RuppertSystem& system, const RuppertBasis& basis, const FormTuple& a) {
    RationalVector v;
    try {
        v = system.coordinates(a);
    } catch (const DimensionMismatch&) {
        return false;
    }
    // The basis is in reduced echelon form: subtract along its pivots.
    for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
        const Rational f = v[basis.pivot_columns[k]];
        if (sgn(f) == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (sgn(basis.vectors[k][c]) != 0) v[c] -= f * basis.vectors[k][c];
    }
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

std::size_t solution_dimension(const Polynomial& P) { return nullspace(build_system(P)).dimension(); }

std::size_t count_factors(const Polynomial& P) {
    if (P.is_constant()) throw ConstantInput("cannot count the factors of a constant");
    prepare(P, 0);
    return solution_dimension(P);
}

}  // namespace derham
