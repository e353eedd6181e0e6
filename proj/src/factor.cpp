#include "derham/factor.hpp"

#include <map>
#include <random>

#include "derham/gcd.hpp"

namespace derham {

namespace {

// Rows of polynomials expressed over a shared monomial index.
class MonomialIndex {
public:
    std::size_t index(const Monomial& m) {
        auto [it, inserted] = pos_.try_emplace(m, pos_.size());
        return it->second;
    }
    std::size_t size() const { return pos_.size(); }

private:
    std::map<Monomial, std::size_t, DegRevLexGreater> pos_;
};

std::size_t rank_of(const std::vector<Polynomial>& polys) {
    MonomialIndex idx;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) idx.index(m);
    RationalMatrix rows(polys.size(), RationalVector(idx.size(), Rational(0)));
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [m, c] : polys[r].terms()) rows[r][idx.index(m)] = c;
    return rank(std::move(rows));
}

}  // namespace

QuotientContext build_quotient(const Polynomial& P, const RuppertBasis& basis, std::size_t variable) {
    if (variable >= P.arity()) throw IndexOutOfRange("variable index out of range");
    QuotientContext ctx;
    ctx.modulus = P;
    ctx.variable = variable;
    ctx.derivative = partial_derivative(P, variable);

    const std::size_t s = basis.dimension();
    for (const auto& tuple : basis.tuples) {
        Polynomial candidate = normal_form(tuple.parts.at(variable), P);
        if (candidate.is_zero()) continue;
        ctx.ebar_basis.push_back(std::move(candidate));
        if (rank_of(ctx.ebar_basis) < ctx.ebar_basis.size()) ctx.ebar_basis.pop_back();
    }
    if (ctx.ebar_basis.size() != s)
        throw DimensionMismatch("projected solution space has dimension " + std::to_string(ctx.ebar_basis.size()) +
                                " instead of " + std::to_string(s));
    for (const auto& e : ctx.ebar_basis) ctx.etilde_basis.push_back(normal_form(e * ctx.derivative, P));
    if (rank_of(ctx.etilde_basis) != s) throw DimensionMismatch("multiplication by the derivative is not injective");
    return ctx;
}

EndoMatrix build_endo(const QuotientContext& ctx, const std::vector<Rational>& coefficients) {
    const std::size_t s = ctx.ebar_basis.size();
    if (coefficients.size() != s) throw DimensionMismatch("one coefficient per basis element is required");
    EndoMatrix out;
    out.v_rep = Polynomial(ctx.modulus.arity());
    for (std::size_t k = 0; k < s; ++k) out.v_rep += ctx.ebar_basis[k] * coefficients[k];

    std::vector<Polynomial> images;
    for (const auto& e : ctx.ebar_basis) images.push_back(normal_form(out.v_rep * e, ctx.modulus));

    // Solve [etilde_0 .. etilde_{s-1}] * M = [images] over the monomial coordinates.
    MonomialIndex idx;
    for (const auto& p : ctx.etilde_basis)
        for (const auto& [m, c] : p.terms()) idx.index(m);
    for (const auto& p : images)
        for (const auto& [m, c] : p.terms()) idx.index(m);
    RationalMatrix aug(idx.size(), RationalVector(2 * s, Rational(0)));
    for (std::size_t l = 0; l < s; ++l)
        for (const auto& [m, c] : ctx.etilde_basis[l].terms()) aug[idx.index(m)][l] = c;
    for (std::size_t k = 0; k < s; ++k)
        for (const auto& [m, c] : images[k].terms()) aug[idx.index(m)][s + k] = c;

    const auto pivots = reduce_to_rref(aug);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= s) throw UnsolvableColumn("image of the endomorphism leaves the target space");
    }
    if (pivots.size() != s) throw UnsolvableColumn("target space basis is degenerate");
    out.entries.assign(s, RationalVector(s, Rational(0)));
    for (std::size_t l = 0; l < s; ++l)
        for (std::size_t k = 0; k < s; ++k) out.entries[l][k] = aug[l][s + k];
    return out;
}

Univariate char_poly(const RationalMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RationalMatrix m(n, RationalVector(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        RationalMatrix next(n, RationalVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (sgn(a[i][l]) == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
            }
            next[i][i] += c[n - k + 1];
        }
        m = std::move(next);
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    return Univariate(std::move(c));
}

FactorizationResult split(const Polynomial& P, const SplitOptions& options) {
    const PreparedInput prep = prepare(P, options.seed);
    const Polynomial& W = prep.working;
    const std::size_t var = prep.variable;

    const RuppertSystem sys = build_system(W);
    const RuppertBasis basis = nullspace(sys);
    const std::size_t s = basis.dimension();
    const QuotientContext ctx = build_quotient(W, basis, var);

    FactorizationResult result;
    result.count = s;
    result.variable = var;
    result.sheared = prep.sheared();

    std::mt19937_64 rng(options.seed);
    std::int64_t range = 10 * static_cast<std::int64_t>(s);
    std::optional<EndoMatrix> endo;
    Univariate chi;
    for (unsigned attempt = 0; attempt < std::max(1u, options.max_retries); ++attempt) {
        std::uniform_int_distribution<std::int64_t> dist(-range, range);
        std::vector<Rational> coeffs;
        for (std::size_t k = 0; k < s; ++k) coeffs.emplace_back(Integer(dist(rng)));
        EndoMatrix candidate = build_endo(ctx, coeffs);
        chi = char_poly(candidate.entries);
        result.attempts = attempt + 1;
        if (is_squarefree(chi)) {
            endo = std::move(candidate);
            result.v_coefficients = std::move(coeffs);
            break;
        }
        if (range < (std::int64_t{1} << 40)) range *= 2;
    }
    result.char_poly = chi;
    if (!endo) throw RetriesExhausted("characteristic polynomial never became squarefree", chi, options.seed);

    result.eigenvalues = rational_roots(chi);
    std::vector<Polynomial> local_factors;
    Polynomial product = Polynomial::constant(W.arity(), Rational(1));
    for (const auto& lambda : result.eigenvalues) {
        Polynomial g = gcd(W, endo->v_rep - ctx.derivative * lambda);
        if (g.is_constant()) throw CertificateFailure("eigenvalue produced a trivial gcd");
        product *= g;
        local_factors.push_back(std::move(g));
    }
    auto cofactor = divide_exact(W, product);
    if (!cofactor) throw CertificateFailure("product of the recovered factors does not divide the input");

    const LinearChange back = prep.change.inverse();
    for (const auto& g : local_factors)
        result.factors.push_back(prep.sheared() ? primitive_normalized(apply_change(g, back)) : g);
    Polynomial residual = prep.sheared() ? apply_change(*cofactor, back) : *cofactor;
    result.residual = residual.is_constant() ? Polynomial::constant(P.arity(), Rational(1)) : primitive_normalized(residual);

    Polynomial check = result.residual;
    for (const auto& f : result.factors) check *= f;
    result.unit = P.leading_coefficient() / check.leading_coefficient();
    result.certificate_ok = (check * result.unit == P);
    for (std::size_t i = 0; i < result.factors.size() && result.certificate_ok; ++i)
        for (std::size_t j = i + 1; j < result.factors.size(); ++j)
            if (result.factors[i] == result.factors[j]) result.certificate_ok = false;
    if (!result.certificate_ok) throw CertificateFailure("factor certificate failed: unit * product != input");
    return result;
}

bool is_absolutely_irreducible(const Polynomial& P) { return count_factors(P) == 1; }

}  // namespace derham
