#include "derham/commands.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "derham/factor.hpp"
#include "derham/genericity.hpp"
#include "derham/parse.hpp"
#include "derham/ruppert.hpp"
#include "derham/section.hpp"

namespace derham {

namespace {

using json = nlohmann::ordered_json;

const VarTable& plane_vars() {
    static const VarTable vars({"s", "t"});
    return vars;
}

json section_json(const SectionComparison& cmp) {
    json j;
    j["plane"] = format_plane(cmp.plane);
    j["polynomial"] = print(cmp.section, plane_vars());
    j["section_count"] = cmp.section_count ? json(*cmp.section_count) : json(nullptr);
    j["equal"] = cmp.equal();
    j["degenerate"] = cmp.degenerate_reason.empty() ? json(nullptr) : json(cmp.degenerate_reason);
    return j;
}

void run_count(const Polynomial& P, RunReport& report) {
    const std::size_t s = count_factors(P);
    report.payload["count"] = s;
    report.payload["irreducible"] = (s == 1);
}

void run_factor(const Polynomial& P, const VarTable& vars, const CommandOptions& options, RunReport& report) {
    const FactorizationResult r = split(P, SplitOptions{options.seed, options.retries});
    auto& out = report.payload;
    out["count"] = r.count;
    json factors = json::array();
    for (const auto& f : r.factors) factors.push_back(print(f, vars));
    out["factors"] = factors;
    out["residual"] = print(r.residual, vars);
    json eig = json::array();
    for (const auto& e : r.eigenvalues) eig.push_back(format_rational(e));
    out["eigenvalues"] = eig;
    out["char_poly"] = print(r.char_poly.to_polynomial(), VarTable({"t"}));
    out["certificate"] = r.certificate_ok;
    out["unit"] = format_rational(r.unit);
    out["complete"] = r.residual.is_constant();
    if (!r.residual.is_constant()) report.exit_code = ExitCode::PartialSplit;
}

void run_generic(const Polynomial& P, const VarTable& vars, const CommandOptions& options, RunReport& report) {
    if (!options.var) throw Error("the generic command needs --var");
    const auto idx = vars.index_of(*options.var);
    if (!idx) throw Error("unknown variable '" + *options.var + "'");
    const GenericityReport g = is_generic(P, *idx);
    json witness = json::array();
    for (const auto& w : g.witness) witness.push_back(print(w, vars));
    report.payload["generic"] = {{"variable", *options.var}, {"is_generic", g.is_generic}, {"witness", witness}};
}

void run_section(const Polynomial& P, const CommandOptions& options, RunReport& report) {
    const std::size_t ambient = count_factors(P);
    report.payload["count"] = ambient;
    if (options.plane) {
        const Plane2 plane = parse_plane(*options.plane, P.arity());
        const SectionComparison cmp = compare_section(P, ambient, plane);
        report.payload["section"] = section_json(cmp);
        if (!cmp.section_count) {
            report.exit_code = ExitCode::Failure;
            report.diagnostic = "degenerate plane: " + cmp.degenerate_reason;
        }
        return;
    }
    if (options.random_planes == 0) throw Error("the section command needs --plane or --random-planes");
    std::mt19937_64 rng(options.seed);
    json planes = json::array();
    std::size_t matches = 0;
    std::ostringstream log;
    for (unsigned k = 0; k < options.random_planes; ++k) {
        const Plane2 plane = random_plane(P.arity(), rng);
        const SectionComparison cmp = compare_section(P, ambient, plane);
        if (cmp.equal()) {
            ++matches;
        } else {
            log << "mismatch on plane " << format_plane(plane) << ": section count "
                << (cmp.section_count ? std::to_string(*cmp.section_count) : cmp.degenerate_reason) << " vs " << ambient
                << '\n';
        }
        planes.push_back(section_json(cmp));
    }
    report.payload["sections"] = {{"total", options.random_planes}, {"matches", matches}, {"planes", planes}};
    report.diagnostic = log.str();
    if (!report.diagnostic.empty() && report.diagnostic.back() == '\n') report.diagnostic.pop_back();
}

void set_error(RunReport& report, ExitCode code, const std::string& kind, const std::string& message) {
    report.exit_code = code;
    report.payload["error"] = {{"kind", kind}, {"message", message}};
    report.diagnostic = kind + ": " + message;
}

}  // namespace

RunReport run_command(const CommandOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    auto& out = report.payload;
    out["input"] = options.expr;
    out["vars"] = json::array();
    out["op"] = options.op;
    for (const char* key : {"count", "factors", "residual", "eigenvalues", "char_poly", "certificate"}) out[key] = nullptr;
    out["seed"] = options.seed;
    out["ms"] = nullptr;

    VarTable vars;
    try {
        Polynomial P;
        if (options.vars) {
            vars = VarTable::from_list(*options.vars);
            P = parse(options.expr, vars);
        } else {
            auto parsed = parse_infer(options.expr);
            vars = std::move(parsed.vars);
            P = std::move(parsed.poly);
        }
        out["vars"] = vars.names();

        if (options.op == "count") run_count(P, report);
        else if (options.op == "factor") run_factor(P, vars, options, report);
        else if (options.op == "generic") run_generic(P, vars, options, report);
        else if (options.op == "section") run_section(P, options, report);
        else throw Error("unknown command '" + options.op + "'");
    } catch (const ParseError& e) {
        set_error(report, ExitCode::ParseFailure, "parse error", e.what());
    } catch (const NotReduced& e) {
        set_error(report, ExitCode::NotReduced, "not reduced", e.what());
        const std::string witness = vars.size() == e.witness().arity() ? print(e.witness(), vars) : "";
        out["error"]["witness"] = witness;
        report.diagnostic += "; repeated factor divides " + witness;
    } catch (const RetriesExhausted& e) {
        set_error(report, ExitCode::RetriesExhausted, "retries exhausted", e.what());
        out["error"]["char_poly"] = print(e.char_poly().to_polynomial(), VarTable({"t"}));
    } catch (const Error& e) {
        set_error(report, ExitCode::Failure, "error", e.what());
    }

    if (options.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        out["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return report;
}

std::string render(const RunReport& report, const std::string& format) {
    if (format == "json") return report.payload.dump(2) + "\n";
    if (format != "text") throw Error("unknown output format '" + format + "'");

    std::ostringstream os;
    auto scalar = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s = "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ", ";
                s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
            }
            return s + "]";
        }
        return v.dump();
    };
    auto emit = [&](auto&& self, const std::string& prefix, const json& obj) -> void {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (it.value().is_null()) continue;
            const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it.value().is_object()) {
                self(self, key, it.value());
            } else if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
                for (std::size_t i = 0; i < it.value().size(); ++i)
                    self(self, key + "[" + std::to_string(i) + "]", it.value()[i]);
            } else {
                os << key << ": " << scalar(it.value()) << '\n';
            }
        }
    };
    emit(emit, "", report.payload);
    return os.str();
}

}  // namespace derham
