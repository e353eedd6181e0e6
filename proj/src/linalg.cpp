#include "derham/linalg.hpp"

#include <algorithm>
#include <queue>

namespace derham {

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().value) < 0) g = -g;
    if (g != 1)
        for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

namespace {

bool row_less(const SparseRow& a, const SparseRow& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].col != b[i].col) return a[i].col < b[i].col;
        const int c = cmp(a[i].value, b[i].value);
        if (c != 0) return c < 0;
    }
    return false;
}

const Integer* find_entry(const SparseRow& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

// fa * a - fb * b, both sorted
SparseRow combine(const Integer& fa, const SparseRow& a, const Integer& fb, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Integer v;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back({a[i].col, fa * a[i].value});
            ++i;
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, -fb * b[j].value});
            ++j;
        } else {
            v = fa * a[i].value - fb * b[j].value;
            if (sgn(v) != 0) out.push_back({a[i].col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

namespace {

struct ExactElimination {
    std::vector<RationalVector> kernel;
    std::size_t rank = 0;
    std::size_t fill_peak = 0;
};

// Fraction-free sparse elimination on primitive, distinct rows.
ExactElimination exact_kernel(std::vector<SparseRow> rows, std::size_t ncols) {
    ExactElimination out;
    const std::size_t nrows = rows.size();
    std::vector<char> active(nrows, 1);
    std::vector<std::size_t> col_count(ncols, 0);
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::uint32_t r = 0; r < nrows; ++r)
        for (const auto& e : rows[r]) {
            ++col_count[e.col];
            col_rows[e.col].push_back(r);
        }

    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> shortest;
    for (std::uint32_t r = 0; r < nrows; ++r) shortest.push({rows[r].size(), r});

    struct Pivot {
        std::uint32_t row;
        std::uint32_t col;
    };
    std::vector<Pivot> pivots;
    std::vector<char> is_pivot_col(ncols, 0);
    std::vector<std::uint32_t> seen_mark(nrows, 0);
    std::uint32_t stamp = 0;
    std::size_t fill = 0;
    for (const auto& r : rows) fill += r.size();
    out.fill_peak = fill;

    while (!shortest.empty()) {
        const auto [len, r] = shortest.top();
        shortest.pop();
        if (!active[r] || rows[r].size() != len) continue;

        const SparseRow& prow = rows[r];
        std::uint32_t pcol = prow.front().col;
        for (const auto& e : prow)
            if (col_count[e.col] < col_count[pcol]) pcol = e.col;
        const Integer pval = *find_entry(prow, pcol);

        active[r] = 0;
        for (const auto& e : prow) --col_count[e.col];
        pivots.push_back({r, pcol});
        is_pivot_col[pcol] = 1;

        ++stamp;
        std::vector<std::uint32_t> targets;
        for (auto t : col_rows[pcol]) {
            if (!active[t] || seen_mark[t] == stamp) continue;
            seen_mark[t] = stamp;
            if (find_entry(rows[t], pcol)) targets.push_back(t);
        }
        col_rows[pcol].clear();
        col_rows[pcol].shrink_to_fit();

        Integer g;
        Integer fa;
        Integer fb;
        for (auto t : targets) {
            SparseRow& trow = rows[t];
            const Integer a = *find_entry(trow, pcol);
            mpz_gcd(g.get_mpz_t(), pval.get_mpz_t(), a.get_mpz_t());
            fa = pval / g;
            fb = a / g;
            SparseRow next = combine(fa, trow, fb, prow);
            make_primitive(next);
            for (const auto& e : trow) --col_count[e.col];
            for (const auto& e : next) {
                ++col_count[e.col];
                if (!find_entry(trow, e.col)) col_rows[e.col].push_back(t);
            }
            fill = fill - trow.size() + next.size();
            trow = std::move(next);
            if (trow.empty()) active[t] = 0;
            else shortest.push({trow.size(), t});
        }
        out.fill_peak = std::max(out.fill_peak, fill);
    }
    out.rank = pivots.size();

    // Back substitution: each free column seeds one kernel vector.
    Rational acc;
    for (std::uint32_t f = 0; f < ncols; ++f) {
        if (is_pivot_col[f]) continue;
        RationalVector x(ncols, Rational(0));
        x[f] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            acc = 0;
            Integer diag;
            for (const auto& e : rows[it->row]) {
                if (e.col == it->col) diag = e.value;
                else if (sgn(x[e.col]) != 0) acc += Rational(e.value) * x[e.col];
            }
            if (sgn(acc) != 0) x[it->col] = -acc / Rational(diag);
        }
        out.kernel.push_back(std::move(x));
    }
    reduce_to_rref(out.kernel);
    return out;
}

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1, products fit in 64 bits

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return a * b % kPrime;
}

std::uint64_t inv_mod(std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t e = kPrime - 2;
    while (e) {
        if (e & 1) result = mul_mod(result, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return result;
}

// Indices of rows forming a basis of the row space modulo kPrime. Each pivot
// row is its original row plus multiples of earlier pivots, so the original
// rows picked as pivots span the same space.
std::vector<std::uint32_t> modular_row_basis(const std::vector<SparseRow>& rows, std::size_t ncols) {
    struct Entry {
        std::uint32_t col;
        std::uint64_t value;
    };
    using ModRow = std::vector<Entry>;
    std::vector<ModRow> m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& e : rows[r]) {
            const std::uint64_t v = mpz_fdiv_ui(e.value.get_mpz_t(), kPrime);
            if (v) m[r].push_back({e.col, v});
        }

    // pivot_of[c] is the reduced pivot row owning column c (leading entry 1);
    // pivot rows vanish on every column that was already a pivot when they were made.
    std::vector<std::int64_t> pivot_of(ncols, -1);
    std::vector<ModRow> pivot_rows;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint64_t> dense(ncols, 0);
    // Shorter rows first keeps the pivots sparse.
    std::vector<std::uint32_t> order(rows.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) order[r] = r;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return m[a].size() < m[b].size(); });

    for (auto r : order) {
        if (chosen.size() == ncols) break;
        if (m[r].empty()) continue;
        for (const auto& e : m[r]) dense[e.col] = e.value;
        // Fill-in only moves right, so one left-to-right sweep reduces the row.
        std::int64_t lead = -1;
        for (std::size_t c = m[r].front().col; c < ncols; ++c) {
            const std::uint64_t f = dense[c];
            if (f == 0) continue;
            if (pivot_of[c] < 0) {
                if (lead < 0) lead = static_cast<std::int64_t>(c);
                continue;
            }
            for (const auto& e : pivot_rows[pivot_of[c]]) {
                const std::uint64_t sub = mul_mod(f, e.value);
                std::uint64_t& d = dense[e.col];
                d = d >= sub ? d - sub : d + kPrime - sub;
            }
        }
        if (lead >= 0) {
            const std::uint64_t inv = inv_mod(dense[lead]);
            ModRow p;
            for (std::size_t c = lead; c < ncols; ++c)
                if (dense[c]) p.push_back({static_cast<std::uint32_t>(c), mul_mod(dense[c], inv)});
            pivot_of[lead] = static_cast<std::int64_t>(pivot_rows.size());
            pivot_rows.push_back(std::move(p));
            chosen.push_back(r);
        }
        std::fill(dense.begin() + m[r].front().col, dense.end(), 0);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

bool annihilates(const std::vector<SparseRow>& rows, const std::vector<RationalVector>& kernel) {
    Integer acc;
    for (const auto& x : kernel) {
        Integer den = 1;
        for (const auto& v : x)
            if (sgn(v) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> y(x.size());
        for (std::size_t c = 0; c < x.size(); ++c)
            if (sgn(x[c]) != 0) y[c] = x[c].get_num() * (den / x[c].get_den());
        for (const auto& row : rows) {
            acc = 0;
            for (const auto& e : row)
                if (sgn(y[e.col]) != 0) mpz_addmul(acc.get_mpz_t(), e.value.get_mpz_t(), y[e.col].get_mpz_t());
            if (sgn(acc) != 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<RationalVector> integer_nullspace(std::vector<SparseRow> rows, std::size_t ncols, EliminationStats* stats) {
    EliminationStats local;
    local.rows_in = rows.size();

    for (auto& r : rows) {
        for (const auto& e : r)
            if (e.col >= ncols) throw IndexOutOfRange("sparse row column out of range");
        make_primitive(r);
    }
    std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    local.rows_distinct = rows.size();

    // A row basis modulo a prime is also independent over Q. If the rank over Q
    // is larger, some kernel vector fails the exact check below and the full
    // system is eliminated instead.
    ExactElimination result;
    bool done = false;
    if (rows.size() > ncols) {
        std::vector<SparseRow> subset;
        for (auto r : modular_row_basis(rows, ncols)) subset.push_back(rows[r]);
        local.rows_used = subset.size();
        result = exact_kernel(std::move(subset), ncols);
        done = annihilates(rows, result.kernel);
    }
    if (!done) {
        local.rows_used = rows.size();
        result = exact_kernel(std::move(rows), ncols);
    }
    local.rank = result.rank;
    local.fill_peak = result.fill_peak;
    if (stats) *stats = local;
    return std::move(result.kernel);
}

std::vector<std::size_t> reduce_to_rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t ncols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && sgn(m[p][col]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row])
            if (sgn(v) != 0) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::size_t rank(RationalMatrix m) { return reduce_to_rref(m).size(); }

}  // namespace derham
