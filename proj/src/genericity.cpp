#include "derham/genericity.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "derham/gcd.hpp"

namespace derham {

namespace {

Polynomial monic(const Polynomial& p) { return p * Rational(1 / p.leading_coefficient()); }

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g) {
    Polynomial work = p;
    Polynomial result(p.arity());
    while (!work.is_zero()) {
        const Monomial m = work.leading_monomial();
        const Rational c = work.leading_coefficient();
        const Polynomial* divisor = nullptr;
        for (const auto& q : g) {
            if (!q.is_zero() && q.leading_monomial().divides(m)) {
                divisor = &q;
                break;
            }
        }
        if (!divisor) {
            result.add_term(m, c);
            work.add_term(m, -c);
            continue;
        }
        const Monomial shift = m / divisor->leading_monomial();
        const Rational f = c / divisor->leading_coefficient();
        for (const auto& [dm, dc] : divisor->terms()) work.add_term(dm * shift, -f * dc);
    }
    return result;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, unsigned degree_cap) {
    if (generators.empty()) throw Error("groebner_basis needs at least one generator");
    const std::size_t n = generators.front().arity();
    std::vector<Polynomial> g;
    for (const auto& p : generators) {
        if (p.arity() != n) throw ArityMismatch("generators must share one arity");
        if (p.is_zero()) continue;
        if (p.is_constant()) return {Polynomial::constant(n, Rational(1))};
        g.push_back(monic(p));
    }
    if (g.empty()) return {};

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        // Normal strategy: smallest lcm of leading monomials first.
        auto best = pairs.begin();
        Monomial best_lcm = Monomial::lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Monomial l = Monomial::lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
            if (degrevlex_compare(l, best_lcm) < 0) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pairs.erase(best);
        if (best_lcm.total_degree() > degree_cap)
            throw DegreeCapExceeded("Groebner computation exceeded degree cap " + std::to_string(degree_cap));

        const Monomial& li = g[i].leading_monomial();
        const Monomial& lj = g[j].leading_monomial();
        if (best_lcm == li * lj) continue;

        const Polynomial s = g[i].shifted(best_lcm / li) - g[j].shifted(best_lcm / lj);
        Polynomial r = reduce(s, g);
        if (r.is_zero()) continue;
        if (r.is_constant()) return {Polynomial::constant(n, Rational(1))};
        g.push_back(monic(r));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }

    // Minimalize, then interreduce.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = g[j].leading_monomial();
            const Monomial& li = g[i].leading_monomial();
            if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(monic(reduce(minimal[i], others)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return degrevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

std::vector<Polynomial> coefficient_ideal(const Polynomial& P, std::size_t var) {
    auto coeffs = coefficients_in(P, var);
    std::reverse(coeffs.begin(), coeffs.end());
    return coeffs;
}

GenericityReport is_generic(const Polynomial& P, std::size_t var, unsigned degree_cap) {
    if (var >= P.arity()) throw IndexOutOfRange("variable index out of range");
    if (P.is_constant()) throw ConstantInput("genericity of a constant polynomial");
    if (!P.involves(var)) throw VariableAbsent("polynomial does not involve variable " + std::to_string(var + 1));

    GenericityReport report;
    report.variable = var;
    const auto coeffs = coefficient_ideal(P, var);
    const Polynomial one = Polynomial::constant(P.arity(), Rational(1));
    for (const auto& a : coeffs) {
        if (!a.is_zero() && a.is_constant()) {
            report.is_generic = true;
            report.witness = {one};
            return report;
        }
    }
    report.witness = groebner_basis(coeffs, degree_cap);
    report.is_generic = report.witness.size() == 1 && report.witness.front() == one;
    return report;
}

GenericForm make_generic(const Polynomial& P, std::uint64_t seed, std::size_t var) {
    if (var >= P.arity()) throw IndexOutOfRange("variable index out of range");
    if (P.is_constant()) throw ConstantInput("cannot make a constant polynomial generic");
    const std::size_t n = P.arity();
    const auto d = P.total_degree();

    Polynomial top(n);
    for (const auto& [m, c] : P.terms())
        if (m.total_degree() == d) top.add_term(m, c);

    // After x_j -> x_j + c_j x_var the coefficient of x_var^d is top(c) with c_var = 1.
    std::vector<Rational> point(n, Rational(0));
    point[var] = 1;
    if (sgn(evaluate(top, point)) != 0) return {P, LinearChange::identity(n), var};

    std::mt19937_64 rng(seed);
    std::int64_t bound = 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
        for (std::size_t j = 0; j < n; ++j) point[j] = (j == var) ? Rational(1) : Rational(Integer(dist(rng)));
        if (sgn(evaluate(top, point)) != 0) {
            std::vector<Rational> shifts(point);
            shifts[var] = 0;
            LinearChange change = LinearChange::shear(var, shifts);
            return {apply_change(P, change), std::move(change), var};
        }
        if (bound < (std::int64_t{1} << 40)) bound *= 2;
    }
    throw InternalError("no generic shear found after 64 attempts");
}

ReducedCheck check_reduced(const Polynomial& P, std::size_t var) {
    const GenericityReport report = is_generic(P, var);
    if (!report.is_generic) throw NotGeneric("reducedness check requires a polynomial generic in the chosen variable");
    ReducedCheck out;
    out.witness = gcd(P, partial_derivative(P, var));
    out.reduced = out.witness.is_constant();
    return out;
}

PreparedInput prepare(const Polynomial& P, std::uint64_t seed) {
    if (P.is_constant()) throw ConstantInput("expected a nonconstant polynomial");
    PreparedInput out;
    out.original = P;
    out.working = P;
    out.change = LinearChange::identity(P.arity());

    bool found = false;
    for (std::size_t var = 0; var < P.arity() && !found; ++var) {
        if (!P.involves(var)) continue;
        try {
            GenericityReport report = is_generic(P, var);
            if (report.is_generic) {
                out.variable = var;
                out.report = std::move(report);
                found = true;
            }
        } catch (const DegreeCapExceeded&) {
            // undecided in this direction; the shear fallback still applies
        }
    }
    if (!found) {
        GenericForm g = make_generic(P, seed, 0);
        out.working = std::move(g.poly);
        out.change = g.change;
        out.variable = 0;
        out.report = is_generic(out.working, 0);
        if (!out.report.is_generic) throw InternalError("sheared polynomial is not generic");
        out.report.shear_applied = g.change;
    }

    const Polynomial witness = gcd(out.working, partial_derivative(out.working, out.variable));
    if (!witness.is_constant()) {
        const Polynomial pulled = out.sheared() ? primitive_normalized(apply_change(witness, out.change.inverse())) : witness;
        throw NotReduced("polynomial is not reduced (it has a repeated factor)", pulled);
    }
    return out;
}

}  // namespace derham
