// Python bindings for the main operations: frames, expansions, partials,
// and the problem-level commands. Structured results cross the boundary as
// JSON strings so the schemas match the CLI exactly.

#include "gwci/io.hpp"
#include "gwci/selftest.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gwci;

namespace {

struct PyFrame {
    GFrame F;

    PyFrame(const std::vector<std::string>& vars, const std::string& order,
            const std::vector<std::string>& g) {
        MonomialOrder ord(MonomialOrder::kind_from_name(order), vars.size());
        std::vector<Poly> gs;
        for (const std::string& s : g) gs.push_back(parse_poly(s, vars));
        F = make_frame(vars, ord, gs);
    }

    std::vector<std::string> std_monomials() const {
        std::vector<std::string> out;
        for (const Monomial& m : F.std_basis)
            out.push_back(format_poly(Poly::monomial(m), F.vars, F.order));
        return out;
    }

    std::vector<std::pair<std::vector<int>, std::string>> expand(const std::string& q) const {
        GExpansion E = g_expand(parse_poly(q, F.vars), F);
        std::vector<std::pair<std::vector<int>, std::string>> out;
        for (const auto& [N, c] : E.coeffs) out.emplace_back(N, format_poly(c, F.vars, F.order));
        return out;
    }

    std::string reconstruct(
        const std::vector<std::pair<std::vector<int>, std::string>>& terms) const {
        GExpansion E;
        E.s = F.s();
        for (const auto& [N, s] : terms) E.coeffs.emplace(N, parse_poly(s, F.vars));
        return format_poly(g_reconstruct(E, F), F.vars, F.order);
    }

    std::string partial_str(const std::string& q, int j, bool hatted) const {
        if (j < 1 || j > static_cast<int>(F.s()))
            fail(errc::schema_violation, "index out of range");
        Poly p = parse_poly(q, F.vars);
        Poly r = hatted ? hatted_partial(p, j - 1, F) : partial(p, j - 1, F);
        return format_poly(r, F.vars, F.order);
    }

    std::optional<int> gdeg(const std::string& q) const {
        return g_degree(parse_poly(q, F.vars), F);
    }

    std::string normal_form_str(const std::string& q) const {
        return format_poly(F.sigma(parse_poly(q, F.vars)), F.vars, F.order);
    }
};

std::string generators_json(const std::string& problem_json, int degree,
                            const std::string& method, bool verify) {
    ProblemFile P = problem_from_json(json::parse(problem_json));
    GFrame F = P.frame();
    if (!P.resolution || P.ideal.empty())
        fail(errc::schema_violation, "problem needs an ideal and a resolution");
    GroebnerBasis gbI = buchberger(P.ideal, F.order);
    GeneratorSet S;
    if (method == "main") S = generators_main(*P.resolution, F, degree, &gbI);
    else if (method == "retract") S = generators_via_retract(*P.resolution, F, degree, &gbI);
    else if (method == "g-homogeneous")
        S = generators_g_homogeneous(*P.resolution, F, degree, &gbI);
    else if (method == "k-coefficient")
        S = generators_k_coeff(*P.resolution, F, degree, &gbI);
    else fail(errc::schema_violation, "unknown method " + method);
    if (verify) verify_generators(S, *P.resolution, F, &gbI);
    return generator_set_to_json(S, F).dump();
}

py::dict check_prop_py(const std::string& problem_json) {
    ProblemFile P = problem_from_json(json::parse(problem_json));
    GFrame F = P.frame();
    PropCheck pc = check_prop_sufficient(P.ideal, F);
    py::dict out;
    out["holds"] = pc.holds;
    if (pc.witness) out["witness"] = format_poly(*pc.witness, F.vars, F.order);
    py::list basis;
    for (const Poly& b : pc.derived.basis) basis.append(format_poly(b, F.vars, F.order));
    out["derived_basis"] = basis;
    return out;
}

std::vector<std::string> partial_ideal_py(const std::string& problem_json) {
    ProblemFile P = problem_from_json(json::parse(problem_json));
    GFrame F = P.frame();
    GroebnerBasis D = partial_ideal(P.ideal, F);
    std::vector<std::string> out;
    for (const Poly& b : D.basis) out.push_back(format_poly(b, F.vars, F.order));
    return out;
}

bool massey_verify_py(const std::string& problem_json, int max_p) {
    ProblemFile P = problem_from_json(json::parse(problem_json));
    GFrame F = P.frame();
    if (!P.massey) fail(errc::schema_violation, "problem has no massey table");
    GroebnerBasis gbI = buchberger(P.ideal, F.order);
    MasseyTable T = massey_from_json(*P.massey, F);
    if (max_p <= 0) max_p = static_cast<int>(F.s()) + 1;
    return verify_massey(T, F, gbI, max_p).ok();
}

py::list selftest_py(int samples) {
    selftest::Report rep = selftest::run_all(samples);
    py::list out;
    for (const selftest::Check& c : rep.checks) {
        py::dict e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["note"] = c.note;
        out.append(e);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(gwci, m) {
    m.doc() = "exact Koszul homology kernel for g-weak complete intersections";

    py::register_exception<error>(m, "KernelError");

    py::class_<PyFrame>(m, "Frame")
        .def(py::init<const std::vector<std::string>&, const std::string&,
                      const std::vector<std::string>&>(),
             py::arg("vars"), py::arg("order"), py::arg("g"))
        .def_property_readonly("dim",
                               [](const PyFrame& f) { return f.F.std_basis.size(); })
        .def("std_monomials", &PyFrame::std_monomials)
        .def("expand", &PyFrame::expand, py::arg("poly"))
        .def("reconstruct", &PyFrame::reconstruct, py::arg("expansion"))
        .def("partial", &PyFrame::partial_str, py::arg("poly"), py::arg("index"),
             py::arg("hatted") = false)
        .def("g_degree", &PyFrame::gdeg, py::arg("poly"))
        .def("normal_form", &PyFrame::normal_form_str, py::arg("poly"));

    m.def("generators", &generators_json, py::arg("problem_json"), py::arg("degree"),
          py::arg("method") = "main", py::arg("verify") = true,
          "Koszul homology generators as a JSON report");
    m.def("check_prop", &check_prop_py, py::arg("problem_json"));
    m.def("partial_ideal", &partial_ideal_py, py::arg("problem_json"));
    m.def("massey_verify", &massey_verify_py, py::arg("problem_json"), py::arg("max_p") = 0);
    m.def("selftest", &selftest_py, py::arg("samples") = 25);
}
