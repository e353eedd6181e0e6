#include "derham/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace derham {

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
    Monomial m(arity);
    m.exps_.at(index) = power;
    return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) noexcept {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

bool MultiDegree::leq(const MultiDegree& other) const {
    if (bounds.size() != other.bounds.size()) throw ArityMismatch("multidegree arity mismatch");
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (bounds[i] > other.bounds[i]) return false;
    return true;
}

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(Monomial(arity), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw IndexOutOfRange("variable index " + std::to_string(index) + " out of range");
    return term(Monomial::variable(arity, index), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.arity());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(arity_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_) throw ArityMismatch("monomial arity does not match polynomial arity");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::uint64_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

int Polynomial::degree_in(std::size_t i) const {
    if (i >= arity_) throw IndexOutOfRange("variable index " + std::to_string(i) + " out of range");
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m[i]));
    return d;
}

bool Polynomial::involves(std::size_t i) const { return degree_in(i) > 0; }

void Polynomial::require_same_arity(const Polynomial& other) const {
    if (arity_ != other.arity_)
        throw ArityMismatch("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_arity(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_arity(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

namespace {

using PackedKey = unsigned __int128;
constexpr unsigned kFieldBits = 16;
constexpr std::uint64_t kFieldLimit = std::uint64_t{1} << kFieldBits;
constexpr std::uint64_t kDegreeBias = kFieldLimit - 1;

// Fields (bias - deg, e_n, ..., e_1) from the top: ascending keys are descending
// degrevlex, and key(a * b) = key(a) + key(b) - bias.
bool packable(const Polynomial& a, const Polynomial& b) {
    if (a.arity() + 1 > 128 / kFieldBits) return false;
    return a.total_degree() + b.total_degree() < kDegreeBias;
}

PackedKey pack(const Monomial& m) {
    const std::size_t n = m.arity();
    PackedKey key = kDegreeBias - m.total_degree();
    for (std::size_t i = n; i-- > 0;) key = (key << kFieldBits) | m[i];
    return key;
}

Monomial unpack(PackedKey key, std::size_t n) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(key & (kFieldLimit - 1));
        key >>= kFieldBits;
    }
    return m;
}

bool integral(const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (c.get_den() != 1) return false;
    return true;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_arity(b);
    Polynomial r(a.arity_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1 && a.terms_.begin()->second == 1) return b.shifted(a.terms_.begin()->first);
    if (b.size() == 1 && b.terms_.begin()->second == 1) return a.shifted(b.terms_.begin()->first);

    if (packable(a, b)) {
        const std::size_t n = a.arity_;
        const PackedKey bias = static_cast<PackedKey>(kDegreeBias) << (kFieldBits * n);
        std::vector<PackedKey> kb;
        std::vector<const Rational*> cb;
        for (const auto& [m, c] : b.terms_) {
            kb.push_back(pack(m));
            cb.push_back(&c);
        }
        std::vector<std::pair<PackedKey, std::uint32_t>> prods;
        prods.reserve(a.size() * b.size());
        std::vector<const Rational*> ca;
        for (const auto& [m, c] : a.terms_) {
            const PackedKey k = pack(m) - bias;
            const auto ia = static_cast<std::uint32_t>(ca.size());
            ca.push_back(&c);
            for (std::uint32_t ib = 0; ib < kb.size(); ++ib)
                prods.emplace_back(k + kb[ib], ia * static_cast<std::uint32_t>(kb.size()) + ib);
        }
        std::sort(prods.begin(), prods.end());
        const bool ints = integral(a) && integral(b);
        Integer zsum;
        Rational qsum;
        const auto nb = static_cast<std::uint32_t>(kb.size());
        for (std::size_t i = 0; i < prods.size();) {
            std::size_t j = i;
            if (ints) {
                zsum = 0;
                for (; j < prods.size() && prods[j].first == prods[i].first; ++j) {
                    const auto [ia, ib] = std::pair{prods[j].second / nb, prods[j].second % nb};
                    mpz_addmul(zsum.get_mpz_t(), ca[ia]->get_num_mpz_t(), cb[ib]->get_num_mpz_t());
                }
                if (sgn(zsum) != 0) r.terms_.emplace_hint(r.terms_.end(), unpack(prods[i].first, n), Rational(zsum));
            } else {
                qsum = 0;
                for (; j < prods.size() && prods[j].first == prods[i].first; ++j) {
                    const auto [ia, ib] = std::pair{prods[j].second / nb, prods[j].second % nb};
                    qsum += *ca[ia] * *cb[ib];
                }
                if (sgn(qsum) != 0) r.terms_.emplace_hint(r.terms_.end(), unpack(prods[i].first, n), qsum);
            }
            i = j;
        }
        return r;
    }

    std::vector<std::pair<Monomial, Rational>> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
    const DegRevLexGreater greater;
    std::sort(prods.begin(), prods.end(), [&](const auto& x, const auto& y) { return greater(x.first, y.first); });
    for (std::size_t i = 0; i < prods.size();) {
        std::size_t j = i + 1;
        while (j < prods.size() && prods[j].first == prods[i].first) {
            prods[i].second += prods[j].second;
            ++j;
        }
        if (sgn(prods[i].second) != 0) r.terms_.emplace_hint(r.terms_.end(), std::move(prods[i].first), prods[i].second);
        i = j;
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
    if (m.arity() != arity_) throw ArityMismatch("monomial arity does not match polynomial arity");
    Polynomial r(arity_);
    // Multiplying by a monomial preserves the degrevlex order, so hinted insertion is linear.
    for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(arity_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
    if (i >= p.arity()) throw IndexOutOfRange("derivative index " + std::to_string(i) + " out of range");
    Polynomial r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        if (m[i] == 0) continue;
        Monomial d(m);
        d[i] -= 1;
        r.add_term(d, c * m[i]);
    }
    return r;
}

MultiDegree multideg(const Polynomial& p) {
    MultiDegree d{std::vector<int>(p.arity(), -1)};
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < p.arity(); ++i) d.bounds[i] = std::max<int>(d.bounds[i], static_cast<int>(m[i]));
    return d;
}

DivisionResult divide(const Polynomial& p, const Polynomial& divisor) {
    if (p.arity() != divisor.arity()) throw ArityMismatch("division arity mismatch");
    if (divisor.is_zero()) throw ZeroModulus("division by the zero polynomial");
    const Monomial& lead = divisor.leading_monomial();
    const Rational& lc = divisor.leading_coefficient();

    Polynomial work = p;
    DivisionResult out{Polynomial(p.arity()), Polynomial(p.arity())};
    while (!work.is_zero()) {
        const Monomial m = work.leading_monomial();
        const Rational c = work.leading_coefficient();
        if (lead.divides(m)) {
            const Monomial shift = m / lead;
            const Rational factor = c / lc;
            out.quotient.add_term(shift, factor);
            for (const auto& [dm, dc] : divisor.terms()) work.add_term(dm * shift, -factor * dc);
        } else {
            out.remainder.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return out;
}

Polynomial normal_form(const Polynomial& p, const Polynomial& modulus) {
    return divide(p, modulus).remainder;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor) {
    if (p.arity() != divisor.arity()) throw ArityMismatch("division arity mismatch");
    if (divisor.is_zero()) throw ZeroModulus("division by the zero polynomial");
    const Monomial& lead = divisor.leading_monomial();
    const Rational& lc = divisor.leading_coefficient();

    Polynomial work = p;
    Polynomial quotient(p.arity());
    while (!work.is_zero()) {
        const Monomial& m = work.leading_monomial();
        // If divisor * q = p then lead(p) = lead(divisor) * lead(q).
        if (!lead.divides(m)) return std::nullopt;
        const Monomial shift = m / lead;
        const Rational factor = work.leading_coefficient() / lc;
        quotient.add_term(shift, factor);
        for (const auto& [dm, dc] : divisor.terms()) work.add_term(dm * shift, -factor * dc);
    }
    return quotient;
}

Polynomial evaluate_partial(const Polynomial& p, const std::map<std::size_t, Rational>& assignments) {
    for (const auto& [i, v] : assignments)
        if (i >= p.arity()) throw IndexOutOfRange("assignment index " + std::to_string(i) + " out of range");
    if (assignments.empty()) return p;
    Polynomial r(p.arity());
    Rational scale;
    for (const auto& [m, c] : p.terms()) {
        Monomial kept(m);
        scale = c;
        for (const auto& [i, v] : assignments) {
            if (m[i] == 0) continue;
            mpq_class power;
            mpz_pow_ui(power.get_num_mpz_t(), v.get_num_mpz_t(), m[i]);
            mpz_pow_ui(power.get_den_mpz_t(), v.get_den_mpz_t(), m[i]);
            scale *= power;
            kept[i] = 0;
        }
        r.add_term(kept, scale);
    }
    return r;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.arity()) throw ArityMismatch("evaluation point has wrong length");
    std::map<std::size_t, Rational> all;
    for (std::size_t i = 0; i < point.size(); ++i) all.emplace(i, point[i]);
    return evaluate_partial(p, all).constant_term();
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.arity()) throw ArityMismatch("substitution needs one image per variable");
    if (images.empty()) throw ArityMismatch("empty substitution");
    const std::size_t target = images.front().arity();
    for (const auto& img : images)
        if (img.arity() != target) throw ArityMismatch("substitution images must share one arity");

    // powers[i][e] = images[i]^e, grown on demand
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Polynomial::constant(target, Rational(1)));
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.arity() && !t.is_zero(); ++i)
            if (m[i] > 0) t *= power(i, m[i]);
        r += t;
    }
    return r;
}

Integer denominator_lcm(const Polynomial& p) {
    Integer l = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Rational normalization_unit(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    const Integer den = denominator_lcm(p);
    Integer content = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer scaled = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational unit(content, den);
    unit.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) unit = -unit;
    return unit;
}

Polynomial primitive_normalized(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational unit = normalization_unit(p);
    return p * Rational(1 / unit);
}

}  // namespace derham
