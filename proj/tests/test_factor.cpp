#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derham/factor.hpp"
#include "derham/gcd.hpp"
#include "derham/parse.hpp"
#include "oracle.hpp"

using namespace derham;

namespace {

const VarTable xyz({"x", "y", "z"});
const VarTable xy({"x", "y"});

Polynomial P3(const char* s) { return parse(s, xyz); }
Polynomial P2(const char* s) { return parse(s, xy); }

Univariate U(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Univariate(std::move(c));
}

// Coordinates of NF(v) in the ebar basis, by exact linear algebra.
std::vector<Rational> coordinates_in(const QuotientContext& ctx, const Polynomial& v) {
    const Polynomial target = normal_form(v, ctx.modulus);
    std::map<Monomial, std::size_t, DegRevLexGreater> idx;
    auto at = [&](const Monomial& m) { return idx.try_emplace(m, idx.size()).first->second; };
    for (const auto& e : ctx.ebar_basis)
        for (const auto& [m, c] : e.terms()) at(m);
    for (const auto& [m, c] : target.terms()) at(m);
    const std::size_t s = ctx.ebar_basis.size();
    RationalMatrix aug(idx.size(), RationalVector(s + 1, Rational(0)));
    for (std::size_t k = 0; k < s; ++k)
        for (const auto& [m, c] : ctx.ebar_basis[k].terms()) aug[at(m)][k] = c;
    for (const auto& [m, c] : target.terms()) aug[at(m)][s] = c;
    const auto pivots = reduce_to_rref(aug);
    REQUIRE(pivots.size() == s);
    std::vector<Rational> out(s);
    for (std::size_t k = 0; k < s; ++k) out[k] = aug[k][s];
    return out;
}

QuotientContext quotient_of(const Polynomial& P, std::size_t var) {
    return build_quotient(P, nullspace(build_system(P)), var);
}

Polynomial span_of(const std::vector<Polynomial>& polys, std::size_t arity) {
    Polynomial sum(arity);
    for (const auto& p : polys) sum += p;
    return sum;
}

}  // namespace

TEST_CASE("univariate basics") {
    const Univariate f = U({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
    CHECK(f.degree() == 3);
    CHECK(f(Rational(2)) == 0);
    CHECK(f.derivative() == U({11, -12, 3}));
    CHECK(is_squarefree(f));
    CHECK_FALSE(is_squarefree(U({1, -2, 1})));
    CHECK(gcd(f, U({-2, 1}) * U({5, 1})) == U({-2, 1}));
    CHECK((f % U({-1, 1})).is_zero());
    CHECK(Univariate::from_polynomial(f.to_polynomial()) == f);
}

TEST_CASE("rational roots of constructed polynomials") {
    CHECK(rational_roots(U({-6, 11, -6, 1})) == std::vector<Rational>{1, 2, 3});
    CHECK(rational_roots(U({1, 0, 1})).empty());
    CHECK(rational_roots(U({-2, 0, 1})).empty());
    CHECK(rational_roots(U({0, 0, 1})) == std::vector<Rational>{0});
    CHECK(rational_roots(U({5})).empty());
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 9);
    for (int round = 0; round < 150; ++round) {
        std::vector<Rational> roots;
        Univariate f = U({3, 0, 1});  // t^2 + 3 has no rational roots
        for (int k = 0; k < 1 + round % 5; ++k) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            f = f * Univariate({-r, Rational(1)});
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        f = f * Univariate({Rational(round % 7 + 1, 3)});
        std::sort(roots.begin(), roots.end());
        CHECK(rational_roots(f) == roots);
    }
}

TEST_CASE("characteristic polynomials") {
    const RationalMatrix id{{1, 0}, {0, 1}};
    CHECK(char_poly(id) == U({1, -2, 1}));
    const RationalMatrix zero(3, RationalVector(3, Rational(0)));
    CHECK(char_poly(zero) == U({0, 0, 0, 1}));
    const RationalMatrix m{{2, 1, 0}, {0, 3, 4}, {1, 0, -1}};
    // det(tI - M) expanded by hand: t^3 - 4t^2 + t + 2
    CHECK(char_poly(m) == U({2, 1, -4, 1}));
    CHECK_THROWS_AS(char_poly(RationalMatrix{{1, 2}}), DimensionMismatch);
}

TEST_CASE("quotient for x^2 - y^2") {
    const Polynomial P = P2("x^2 - y^2");
    const QuotientContext ctx = quotient_of(P, 0);
    CHECK(ctx.ebar_basis.size() == 2);
    RationalMatrix rows;
    for (const auto& want : {P2("x + y"), P2("x - y")}) {
        std::vector<Rational> c = coordinates_in(ctx, want);
        CHECK(normal_form(span_of({ctx.ebar_basis[0] * c[0], ctx.ebar_basis[1] * c[1]}, 2), P) == want);
        rows.push_back(c);
    }
    CHECK(rank(rows) == 2);
    CHECK(quotient_of(P3("x^2 - z*y^2"), 0).ebar_basis.size() == 1);
}

TEST_CASE("endomorphisms for x^2 - y^2") {
    const Polynomial P = P2("x^2 - y^2");
    const QuotientContext ctx = quotient_of(P, 0);

    const EndoMatrix g1 = build_endo(ctx, coordinates_in(ctx, P2("x + y")));
    CHECK(char_poly(g1.entries) == U({0, -1, 1}));
    CHECK(rational_roots(char_poly(g1.entries)) == std::vector<Rational>{0, 1});

    const EndoMatrix px = build_endo(ctx, coordinates_in(ctx, partial_derivative(P, 0)));
    CHECK(px.entries == RationalMatrix{{1, 0}, {0, 1}});

    const EndoMatrix zero = build_endo(ctx, {0, 0});
    CHECK(zero.entries == RationalMatrix{{0, 0}, {0, 0}});
    CHECK_THROWS_AS(build_endo(ctx, {1}), DimensionMismatch);

    // gcd(P, v - lambda * P_x) for v = x + y
    CHECK(gcd(P, P2("x + y") - P2("2*x")) == P2("x - y"));
    CHECK(gcd(P, P2("x + y")) == P2("x + y"));
}

TEST_CASE("quotient identities on constructed products") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 12; ++round) {
        const oracle::Instance inst = oracle::make_instance(2 + round % 3, rng);
        const PreparedInput prep = prepare(inst.product, 1);
        std::vector<Polynomial> local;
        for (const auto& f : inst.factors) local.push_back(apply_change(f, prep.change));
        const Polynomial& W = prep.working;
        const std::size_t var = prep.variable;
        const Polynomial dW = partial_derivative(W, var);
        const auto tuples = oracle::basis_tuples(local);

        Polynomial sum(W.arity());
        for (const auto& t : tuples) sum += t.parts[var];
        CHECK(primitive_normalized(sum) == primitive_normalized(dW));
        const Rational scale = normalization_unit(dW) / normalization_unit(sum);
        CHECK(sum * scale == dW);
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            const Polynomial& bi = tuples[i].parts[var];
            CHECK(normal_form(bi * bi - bi * sum, W).is_zero());
            for (std::size_t j = 0; j < tuples.size(); ++j)
                if (i != j) CHECK(normal_form(bi * tuples[j].parts[var], W).is_zero());
        }
    }
}

TEST_CASE("eigen relation: v = sum lambda_j B^j has char poly prod (t - lambda_j)") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> lam(-9, 9);
    for (int round = 0; round < 12; ++round) {
        const oracle::Instance inst = oracle::make_instance(2 + round % 3, rng);
        const PreparedInput prep = prepare(inst.product, 1);
        std::vector<Polynomial> local;
        for (const auto& f : inst.factors) local.push_back(apply_change(f, prep.change));
        // B^j built from factors whose product is exactly W.
        const Rational ratio =
            normalization_unit(prep.working) / normalization_unit(oracle::product_of(local, prep.working.arity()));
        local.front() *= ratio;
        const auto tuples = oracle::basis_tuples(local);
        const QuotientContext ctx = quotient_of(prep.working, prep.variable);

        Polynomial v(prep.working.arity());
        Univariate expected = U({1});
        for (const auto& t : tuples) {
            const Rational l = lam(rng);
            v += t.parts[prep.variable] * l;
            expected = expected * Univariate({-l, Rational(1)});
        }
        const EndoMatrix e = build_endo(ctx, coordinates_in(ctx, v));
        CHECK(char_poly(e.entries) == expected);
    }
}

TEST_CASE("split worked examples") {
    const FactorizationResult a = split(P2("x^2 - y^2"));
    CHECK(a.count == 2);
    CHECK(a.factors == std::vector<Polynomial>{P2("x - y"), P2("x + y")});
    CHECK(a.residual == P2("1"));
    CHECK(a.certificate_ok);

    const FactorizationResult b = split(P2("x^2*y - x"));
    CHECK(oracle::same_up_to_associates(b.factors, {P2("x"), P2("x*y - 1")}));
    CHECK(b.residual == P2("1"));

    const FactorizationResult c = split(P2("x^2 + y^2"));
    CHECK(c.count == 2);
    CHECK(c.factors.empty());
    CHECK(c.residual == P2("x^2 + y^2"));
    CHECK(c.char_poly.degree() == 2);
    CHECK(rational_roots(c.char_poly).empty());
    CHECK(c.certificate_ok);

    const FactorizationResult d = split(P3("x^2 - z*y^2"));
    CHECK(d.count == 1);
    CHECK(d.factors == std::vector<Polynomial>{P3("y^2*z - x^2")});

    CHECK(split(P2("-6*x^2 + 6*y^2")).unit == -6);
}

TEST_CASE("is_absolutely_irreducible") {
    CHECK(is_absolutely_irreducible(P3("x^2 - z*y^2")));
    CHECK_FALSE(is_absolutely_irreducible(P2("x^2 - y^2")));
    CHECK_FALSE(is_absolutely_irreducible(P2("x^2 + y^2")));
}

TEST_CASE("split errors") {
    CHECK_THROWS_AS(split(P2("(x + y)^2")), NotReduced);
    CHECK_THROWS_AS(split(P2("7")), ConstantInput);
    // A zero retry budget still makes one attempt.
    const FactorizationResult r = split(P2("x*y"), SplitOptions{1, 0});
    CHECK(r.attempts == 1);
    CHECK(r.count == 2);
}

TEST_CASE("split round trip on random products") {
    std::mt19937_64 rng(73);
    oracle::CorpusLimits limits;
    limits.max_factors = 4;
    for (int round = 0; round < 24; ++round) {
        const oracle::Instance inst = oracle::make_instance(2 + round % 3, rng, limits);
        const FactorizationResult r = split(inst.product, SplitOptions{static_cast<std::uint64_t>(round + 1), 8});
        CAPTURE(round);
        CHECK(r.count == inst.factors.size());
        CHECK(oracle::same_up_to_associates(r.factors, inst.factors));
        CHECK(r.residual.is_constant());
        CHECK(r.certificate_ok);
        CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
        for (std::size_t i = 0; i < r.factors.size(); ++i)
            for (std::size_t j = i + 1; j < r.factors.size(); ++j) CHECK(gcd(r.factors[i], r.factors[j]).is_constant());

        const FactorizationResult other = split(inst.product, SplitOptions{static_cast<std::uint64_t>(round + 101), 8});
        CHECK(oracle::same_up_to_associates(other.factors, r.factors));
    }
}

TEST_CASE("recovered factors divide P and v - lambda * P_x") {
    std::mt19937_64 rng(79);
    int checked = 0;
    for (int round = 0; round < 12; ++round) {
        const oracle::Instance inst = oracle::make_instance(2 + round % 3, rng);
        const FactorizationResult r = split(inst.product);
        if (r.sheared) continue;
        const QuotientContext ctx = quotient_of(inst.product, r.variable);
        Polynomial v(inst.arity);
        for (std::size_t k = 0; k < ctx.ebar_basis.size(); ++k) v += ctx.ebar_basis[k] * r.v_coefficients[k];
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
            CHECK(divides(r.factors[i], inst.product));
            CHECK(divides(r.factors[i], v - ctx.derivative * r.eigenvalues[i]));
        }
        ++checked;
    }
    CHECK(checked > 6);
}

TEST_CASE("sheared inputs come back in the caller's coordinates") {
    const Polynomial P = P3("(x*y + y*z + z*x)*(x + y - z + 1)");
    const FactorizationResult r = split(P, SplitOptions{3, 8});
    CHECK(r.sheared);
    CHECK(oracle::same_up_to_associates(r.factors, {P3("x*y + y*z + z*x"), P3("x + y - z + 1")}));
    CHECK(r.certificate_ok);
}
