// Acceptance run: one PASS/FAIL line per criterion on stdout, mismatch logs on stderr.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "derham/commands.hpp"
#include "derham/factor.hpp"
#include "derham/gcd.hpp"
#include "derham/genericity.hpp"
#include "derham/parse.hpp"
#include "derham/ruppert.hpp"
#include "derham/section.hpp"
#include "oracle.hpp"

using namespace derham;

namespace {

constexpr std::uint64_t kCorpusSeed = 2024;
constexpr std::size_t kCorpusSize = 100;

struct Outcome {
    bool pass = false;
    std::string detail;
};

const VarTable xyz({"x", "y", "z"});
const VarTable st({"s", "t"});

Polynomial P3(const char* s) { return parse(s, xyz); }

std::optional<std::size_t> section_count(const Polynomial& P, const char* plane) {
    return compare_section(P, 0, parse_plane(plane, 3)).section_count;
}

std::string ratio(std::size_t good, std::size_t total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

// Factors moved into the working coordinates and rescaled so their product equals W.
std::vector<Polynomial> local_factors(const oracle::Instance& inst, const PreparedInput& prep) {
    std::vector<Polynomial> local;
    for (const auto& f : inst.factors) local.push_back(apply_change(f, prep.change));
    const Polynomial prod = oracle::product_of(local, inst.arity);
    local.front() *= normalization_unit(prep.working) / normalization_unit(prod);
    return local;
}

Outcome whitney_umbrella() {
    const Polynomial P = P3("x^2 - z*y^2");
    const std::size_t s = count_factors(P);
    const auto z1 = section_count(P, "0,0,1;1,0,0;0,1,0");
    const auto y1 = section_count(P, "0,1,0;1,0,0;0,0,1");
    const bool ok = s == 1 && z1 == 2u && y1 == 1u;
    return {ok, "count " + std::to_string(s) + ", z=1 section " + (z1 ? std::to_string(*z1) : "degenerate") +
                    ", y=1 section " + (y1 ? std::to_string(*y1) : "degenerate")};
}

Outcome cubic_surface() {
    const Polynomial P = P3("x^2*y - x - z");
    const std::size_t s = count_factors(P);
    const SectionComparison z0 = compare_section(P, s, parse_plane("0,0,0;1,0,0;0,1,0", 3));
    const auto z1 = section_count(P, "0,0,1;1,0,0;0,1,0");
    bool split_ok = false;
    if (z0.section_count == 2u) {
        const FactorizationResult r = split(z0.section);
        split_ok = oracle::same_up_to_associates(r.factors, {parse("s", st), parse("s*t - 1", st)}) &&
                   r.residual.is_constant() && r.certificate_ok;
    }
    const bool ok = s == 1 && z0.section_count == 2u && split_ok && z1 == 1u;
    return {ok, "count " + std::to_string(s) + ", z=0 section " +
                    (z0.section_count ? std::to_string(*z0.section_count) : "degenerate") +
                    (split_ok ? " {s, s*t - 1}" : " (split mismatch)") + ", z=1 section " +
                    (z1 ? std::to_string(*z1) : "degenerate")};
}

Outcome genericity_example() {
    const Polynomial P = P3("x^2*y^2*z^2 + x");
    const bool gx = is_generic(P, 0).is_generic;
    const bool gy = is_generic(P, 1).is_generic;
    return {gx && !gy, std::string("in x ") + (gx ? "generic" : "not generic") + ", in y " +
                           (gy ? "generic" : "not generic")};
}

Outcome oracle_dimensions(const std::vector<oracle::Instance>& corpus) {
    std::size_t good = 0;
    for (const auto& inst : corpus) {
        const RuppertSystem sys = build_system(inst.product);
        const RuppertBasis basis = nullspace(sys);
        bool ok = basis.dimension() == inst.factors.size();
        for (const auto& b : oracle::basis_tuples(inst.factors)) ok = ok && contains(sys, basis, b);
        if (ok) ++good;
        else std::cerr << "  [4] seed " << inst.seed << ": dimension " << basis.dimension() << ", expected "
                       << inst.factors.size() << '\n';
    }
    return {good == corpus.size(), ratio(good, corpus.size()) + " instances"};
}

Outcome generic_quotient(const std::vector<oracle::Instance>& corpus) {
    std::size_t good = 0;
    for (const auto& inst : corpus) {
        const PreparedInput prep = prepare(inst.product, inst.seed);
        const Polynomial dW = partial_derivative(prep.working, prep.variable);
        bool ok = gcd(prep.working, dW).is_constant();
        try {
            const QuotientContext ctx = build_quotient(prep.working, nullspace(build_system(prep.working)), prep.variable);
            ok = ok && ctx.ebar_basis.size() == inst.factors.size();
        } catch (const Error& e) {
            ok = false;
        }
        if (ok) ++good;
        else std::cerr << "  [5] seed " << inst.seed << " failed\n";
    }
    return {good == corpus.size(), ratio(good, corpus.size()) + " instances"};
}

Outcome quotient_identities(const std::vector<oracle::Instance>& corpus) {
    std::size_t good = 0;
    for (const auto& inst : corpus) {
        const PreparedInput prep = prepare(inst.product, inst.seed);
        const Polynomial& W = prep.working;
        const std::size_t var = prep.variable;
        const auto tuples = oracle::basis_tuples(local_factors(inst, prep));
        const Polynomial dW = partial_derivative(W, var);
        Polynomial sum(W.arity());
        for (const auto& t : tuples) sum += t.parts[var];
        bool ok = sum == dW;
        for (std::size_t i = 0; i < tuples.size() && ok; ++i) {
            const Polynomial& bi = tuples[i].parts[var];
            ok = normal_form(bi * bi - dW * bi, W).is_zero();
            for (std::size_t j = 0; j < tuples.size() && ok; ++j)
                if (i != j) ok = normal_form(bi * tuples[j].parts[var], W).is_zero();
        }
        if (ok) ++good;
        else std::cerr << "  [6] seed " << inst.seed << " failed\n";
    }
    return {good == corpus.size(), ratio(good, corpus.size()) + " instances"};
}

Outcome round_trip(const std::vector<oracle::Instance>& corpus) {
    std::size_t good = 0, runs = 0;
    for (const auto& inst : corpus)
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            ++runs;
            bool ok = false;
            try {
                const FactorizationResult r = split(inst.product, SplitOptions{seed, 8});
                ok = oracle::same_up_to_associates(r.factors, inst.factors) &&
                     r.residual == Polynomial::constant(inst.arity, 1) && r.certificate_ok;
            } catch (const Error& e) {
                std::cerr << "  [7] seed " << inst.seed << "/" << seed << ": " << e.what() << '\n';
            }
            if (ok) ++good;
            else std::cerr << "  [7] seed " << inst.seed << "/" << seed << " did not round-trip\n";
        }
    const Polynomial sq = parse("x^2 + y^2", VarTable({"x", "y"}));
    const FactorizationResult r = split(sq);
    const bool partial = r.count == 2 && r.factors.empty() && r.residual == sq && rational_roots(r.char_poly).empty() &&
                         r.certificate_ok;
    return {good == runs && partial,
            ratio(good, runs) + " splits, x^2 + y^2 " + (partial ? "partial as expected" : "wrong")};
}

Outcome invariance(const std::vector<oracle::Instance>& corpus) {
    std::size_t good = 0, runs = 0;
    for (const auto& inst : corpus) {
        std::mt19937_64 rng(inst.seed ^ 0x5eed);
        for (int k = 0; k < 20; ++k) {
            ++runs;
            const LinearChange t = oracle::random_change(inst.arity, 2, rng);
            const std::size_t s = count_factors(apply_change(inst.product, t));
            if (s == inst.factors.size()) ++good;
            else std::cerr << "  [8] seed " << inst.seed << " change " << k << ": count " << s << '\n';
        }
    }
    return {good == runs, ratio(good, runs) + " changed counts"};
}

Outcome parser_and_determinism() {
    std::mt19937_64 rng(9);
    const std::vector<VarTable> tables{VarTable({"x"}), VarTable({"x", "y"}), VarTable({"x", "y", "z"}),
                                       VarTable({"u", "v", "w", "q"})};
    std::size_t good = 0;
    for (int round = 0; round < 1000; ++round) {
        const VarTable& vars = tables[round % tables.size()];
        const Polynomial p = oracle::random_polynomial(vars.size(), 6, 1 + round % 9, rng);
        if (parse(print(p, vars), vars) == p) ++good;
    }
    bool same = true;
    for (const char* op : {"count", "factor", "section"})
        for (const char* expr : {"x^2 - z*y^2", "(x - y)*(x + y)*(x + 2*y + z)", "x^2 + y^2 + z^2"}) {
            CommandOptions o;
            o.op = op;
            o.expr = expr;
            o.seed = 42;
            o.random_planes = 3;
            same = same && render(run_command(o), "json") == render(run_command(o), "json");
        }
    return {good == 1000 && same, ratio(good, 1000) + " round trips, json " + (same ? "byte-identical" : "differs")};
}

Outcome sections(const std::vector<oracle::Instance>& corpus) {
    std::size_t batches = 0, passing = 0, total = 0, matches = 0;
    for (const auto& inst : corpus) {
        if (inst.arity != 3) continue;
        ++batches;
        std::mt19937_64 rng(inst.seed);
        std::size_t hit = 0;
        for (int k = 0; k < 50; ++k) {
            const SectionComparison cmp = compare_section(inst.product, inst.factors.size(), random_plane(3, rng));
            if (cmp.equal()) {
                ++hit;
                continue;
            }
            std::cerr << "  [10] seed " << inst.seed << " plane " << format_plane(cmp.plane) << ": section "
                      << (cmp.section_count ? std::to_string(*cmp.section_count) : cmp.degenerate_reason)
                      << ", ambient " << cmp.ambient_count << '\n';
        }
        total += 50;
        matches += hit;
        // 98% of a 50-plane batch is 49 planes.
        if (hit * 100 >= 98 * 50) ++passing;
    }
    return {batches > 0 && passing == batches,
            ratio(passing, batches) + " batches at >= 98%, " + ratio(matches, total) + " planes match"};
}

}  // namespace

int main() {
    const auto corpus = oracle::corpus(kCorpusSize, kCorpusSeed);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"Whitney umbrella sections", whitney_umbrella},
        {"x^2*y - x - z sections", cubic_surface},
        {"genericity of x^2*y^2*z^2 + x", genericity_example},
        {"closed-form dimension equals factor count", [&] { return oracle_dimensions(corpus); }},
        {"generic position: gcd(P, P_x) = 1 and quotient rank", [&] { return generic_quotient(corpus); }},
        {"quotient identities", [&] { return quotient_identities(corpus); }},
        {"split round trip", [&] { return round_trip(corpus); }},
        {"count invariant under linear changes", [&] { return invariance(corpus); }},
        {"parser round trip and json determinism", parser_and_determinism},
        {"random plane sections", [&] { return sections(corpus); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << ": " << o.detail << " (" << timing << ")" << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
