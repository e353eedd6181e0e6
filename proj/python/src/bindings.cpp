#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "derham/commands.hpp"
#include "derham/parse.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::string& op, const std::string& expr, std::optional<std::string> vars,
              std::optional<std::string> var, std::uint64_t seed, unsigned retries, std::optional<std::string> plane,
              unsigned random_planes) {
    derham::CommandOptions o;
    o.op = op;
    o.expr = expr;
    o.vars = std::move(vars);
    o.var = std::move(var);
    o.seed = seed;
    o.retries = retries;
    o.plane = std::move(plane);
    o.random_planes = random_planes;
    derham::RunReport r;
    {
        // Large inputs can take seconds; other Python threads may run meanwhile.
        py::gil_scoped_release release;
        r = derham::run_command(o);
    }
    return py::make_tuple(r.payload.dump(), static_cast<int>(r.exit_code), r.diagnostic);
}

std::string normalize(const std::string& expr, std::optional<std::string> vars) {
    if (vars) {
        const auto table = derham::VarTable::from_list(*vars);
        return derham::print(derham::parse(expr, table), table);
    }
    const auto parsed = derham::parse_infer(expr);
    return derham::print(parsed.poly, parsed.vars);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    // Translators are tried newest first, so the subclass goes last.
    const auto& error = py::register_exception<derham::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<derham::ParseError>(m, "ParseError", error.ptr());
    m.def("run", &run, py::arg("op"), py::arg("expr"), py::arg("vars") = py::none(), py::arg("var") = py::none(),
          py::arg("seed") = 1, py::arg("retries") = 8, py::arg("plane") = py::none(), py::arg("random_planes") = 0,
          "Run one command; returns (json payload, exit code, diagnostic).");
    m.def("normalize", &normalize, py::arg("expr"), py::arg("vars") = py::none(),
          "Parse and print in canonical degrevlex form.");
}
