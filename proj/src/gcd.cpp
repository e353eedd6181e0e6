#include "derham/gcd.hpp"

#include <utility>

namespace derham {

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
    const int d = p.degree_in(var);
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d + 1, 0)), Polynomial(p.arity()));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest(m);
        rest[var] = 0;
        out[m[var]].add_term(rest, c);
    }
    return out;
}

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var) {
    if (coeffs.empty()) return Polynomial(1);
    Polynomial r(coeffs.front().arity());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        r += coeffs[k].shifted(Monomial::variable(r.arity(), var, static_cast<std::uint32_t>(k)));
    return r;
}

namespace {

// Univariate view over Q[other variables]; the last entry is the nonzero leading coefficient.
using Upoly = std::vector<Polynomial>;

int degree(const Upoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Upoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& d) {
    auto q = divide_exact(p, d);
    if (!q) throw InternalError("inexact division inside the subresultant sequence");
    return std::move(*q);
}

// lc(b)^(deg a - deg b + 1) * a mod b
Upoly pseudo_remainder(Upoly a, const Upoly& b) {
    const int db = degree(b);
    const Polynomial& lcb = b.back();
    int pending = degree(a) - db + 1;
    while (!a.empty() && degree(a) >= db) {
        const Polynomial lca = a.back();
        const int shift = degree(a) - db;
        for (auto& c : a) c *= lcb;
        for (int k = 0; k <= db; ++k) a[k + shift] -= lca * b[k];
        a.pop_back();
        trim(a);
        --pending;
    }
    if (pending > 0 && !a.empty()) {
        const Polynomial f = lcb.pow(static_cast<unsigned>(pending));
        for (auto& c : a) c *= f;
    }
    return a;
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial acc(p.arity());
    for (const auto& c : coefficients_in(p, var)) {
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? primitive_normalized(c) : gcd_core(acc, c);
        if (acc.is_constant()) break;
    }
    return acc;
}

Polynomial subresultant_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
    Upoly A = coefficients_in(a, var);
    Upoly B = coefficients_in(b, var);
    if (degree(A) < degree(B)) std::swap(A, B);
    const std::size_t n = a.arity();
    Polynomial g = Polynomial::constant(n, Rational(1));
    Polynomial h = g;
    for (;;) {
        const int delta = degree(A) - degree(B);
        Upoly R = pseudo_remainder(A, B);
        if (R.empty()) break;
        if (degree(R) == 0) return Polynomial::constant(n, Rational(1));
        A = std::move(B);
        const Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : R) c = exact_quotient(c, divisor);
        B = std::move(R);
        g = A.back();
        if (delta > 0) h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    const Polynomial last = from_coefficients(B, var);
    return primitive_normalized(exact_quotient(last, content_in(last, var)));
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = a.arity();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, Rational(1));

    std::size_t var = 0;
    while (var < n && !a.involves(var) && !b.involves(var)) ++var;
    const bool in_a = a.involves(var);
    const bool in_b = b.involves(var);
    if (!in_a) return gcd_core(a, content_in(b, var));
    if (!in_b) return gcd_core(content_in(a, var), b);

    const Polynomial ca = content_in(a, var);
    const Polynomial cb = content_in(b, var);
    const Polynomial c = gcd_core(ca, cb);
    const Polynomial pa = exact_quotient(a, ca);
    const Polynomial pb = exact_quotient(b, cb);
    return primitive_normalized(c * subresultant_gcd(pa, pb, var));
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.arity() != q.arity()) throw ArityMismatch("gcd arity mismatch");
    if (p.is_zero() && q.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    if (p.is_zero()) return primitive_normalized(q);
    if (q.is_zero()) return primitive_normalized(p);
    const Polynomial a = primitive_normalized(p);
    const Polynomial b = primitive_normalized(q);
    if (a == b) return a;
    return primitive_normalized(gcd_core(a, b));
}

bool divides(const Polynomial& d, const Polynomial& p) { return divide_exact(p, d).has_value(); }

}  // namespace derham
