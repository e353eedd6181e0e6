#include "derham/univariate.hpp"

#include <algorithm>

namespace derham {

Univariate::Univariate(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Univariate::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Univariate Univariate::from_polynomial(const Polynomial& p) {
    if (p.arity() != 1) throw ArityMismatch("expected a univariate polynomial");
    std::vector<Rational> c(p.is_zero() ? 0 : p.total_degree() + 1, Rational(0));
    for (const auto& [m, v] : p.terms()) c[m[0]] = v;
    return Univariate(std::move(c));
}

Polynomial Univariate::to_polynomial() const {
    Polynomial p(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        p.add_term(Monomial::variable(1, 0, static_cast<std::uint32_t>(k)), coeffs_[k]);
    return p;
}

Rational Univariate::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Univariate Univariate::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
    return Univariate(std::move(d));
}

Univariate Univariate::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = coeffs_;
    const Rational lc = leading();
    for (auto& x : c) x /= lc;
    return Univariate(std::move(c));
}

Univariate operator-(const Univariate& a, const Univariate& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return Univariate(std::move(c));
}

Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Univariate(std::move(c));
}

namespace {

std::pair<Univariate, Univariate> long_division(const Univariate& a, const Univariate& b) {
    if (b.is_zero()) throw ZeroModulus("univariate division by zero");
    std::vector<Rational> r = a.coefficients();
    const int db = b.degree();
    std::vector<Rational> q(std::max<int>(a.degree() - db + 1, 0), Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        if (sgn(r[k]) == 0) continue;
        const Rational f = r[k] / b.leading();
        q[k - db] = f;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coefficients()[i];
    }
    return {Univariate(std::move(q)), Univariate(std::move(r))};
}

int sign_changes(const std::vector<Univariate>& chain, const Rational& t) {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sgn(p(t));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

Univariate operator%(const Univariate& a, const Univariate& b) { return long_division(a, b).second; }

Univariate gcd(const Univariate& a, const Univariate& b) {
    Univariate x = a;
    Univariate y = b;
    while (!y.is_zero()) {
        Univariate r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const Univariate& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<Rational> rational_roots(const Univariate& f) {
    if (f.is_zero()) throw Error("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    if (f.degree() == 0) return roots;

    // Squarefree part with integer coprime coefficients and positive leading term.
    Univariate g = long_division(f, gcd(f, f.derivative())).first;
    std::vector<Rational> c = g.coefficients();
    Integer den = 1;
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Integer content = 0;
    for (auto& x : c) {
        x *= den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
    }
    if (sgn(c.back()) < 0) content = -content;
    for (auto& x : c) x /= content;
    g = Univariate(c);
    const Integer lead = g.leading().get_num();

    // Every real root satisfies |t| <= 1 + max|a_i| / a_d, hence |t * a_d| <= a_d + max|a_i|.
    Integer max_coeff = 0;
    for (const auto& x : c)
        if (abs(x.get_num()) > max_coeff) max_coeff = abs(x.get_num());
    const Integer bound = lead + max_coeff;

    std::vector<Univariate> chain{g, g.derivative()};
    while (chain.back().degree() > 0) {
        Univariate r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(Univariate() - r);
    }
    auto at = [&](const Integer& k) {
        Rational t(k, lead);
        t.canonicalize();
        return t;
    };

    // Roots of g in (lo/a_d, hi/a_d]; the only candidate k/a_d in a unit interval is hi/a_d.
    auto search = [&](auto&& self, const Integer& lo, const Integer& hi, int v_lo, int v_hi) -> void {
        if (v_lo - v_hi == 0) return;
        if (hi - lo == 1) {
            const Rational t = at(hi);
            if (sgn(g(t)) == 0) roots.push_back(t);
            return;
        }
        Integer mid = lo + (hi - lo) / 2;
        const int v_mid = sign_changes(chain, at(mid));
        self(self, lo, mid, v_lo, v_mid);
        self(self, mid, hi, v_mid, v_hi);
    };
    const Integer lo = -bound - 1;
    search(search, lo, bound, sign_changes(chain, at(lo)), sign_changes(chain, at(bound)));
    return roots;
}

}  // namespace derham
