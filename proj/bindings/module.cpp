#include <pybind11/pybind11.h>

#include "qha/dsl.hpp"
#include "qha/pipeline.hpp"

namespace py = pybind11;
using namespace qha;

namespace {

Field field_of(const std::string& s) {
    if (s == "Q") return Field(FieldSpec{});
    if (s.size() > 1 && s[0] == 'F') {
        std::uint64_t p = 0;
        for (size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail(ErrKind::Validation, "bad field spec: " + s);
            p = p * 10 + (std::uint64_t)(s[i] - '0');
        }
        return Field(FieldSpec{FieldKind::Prime, p});
    }
    fail(ErrKind::Validation, "bad field spec: " + s + " (expected Q or F<p>)");
}

std::string compute_json(const std::string& dsl, int cap, const std::string& cache_dir) {
    PipelineOptions opt{cap, cache_dir};
    ComputeResult r = compute_all(parse_presentation(dsl), opt);
    return report_compute(r).json;
}

std::string dims_json(const std::string& dsl, int cap) {
    Presentation pres = parse_presentation(dsl);
    GBOptions gopt;
    gopt.cap = cap;
    Groebner gb = buchberger(pres, gopt);
    return report_dims(pres, enumerate_basis(gb)).json;
}

std::string oracle_json(const std::string& dsl, int cap, int bound) {
    PipelineOptions opt{cap, ""};
    ComputeResult r = compute_all(parse_presentation(dsl), opt);
    return report_oracle(r, bound).report.json;
}

std::string lambda_dsl(int p, int q, int k, int s, const std::string& lam,
                       const std::string& field) {
    Field f = field_of(field);
    return print_presentation(build_lambda_family(f, p, q, k, s, f.parse(lam)).pres);
}

std::string gamma_star_dsl(int n, const std::string& field) {
    return print_presentation(build_gamma_star(field_of(field), n).pres);
}

std::string lambda_eta_dsl(int p, int q, int k, int s, const std::string& lam,
                           const std::string& t, const std::string& field) {
    Field f = field_of(field);
    return print_presentation(
        build_lambda_eta(f, p, q, k, s, f.parse(lam), f.parse(t)).pres);
}

std::string gamma_eta2_dsl(int n, const std::string& t, const std::string& field) {
    Field f = field_of(field);
    return print_presentation(build_gamma_eta2(f, n, f.parse(t)).pres);
}

std::string canonical(const std::string& dsl) {
    return print_presentation(parse_presentation(dsl));
}

} // namespace

PYBIND11_MODULE(_qha, m) {
    m.doc() = "exact Hochschild cohomology for bound quiver algebras";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.kind == ErrKind::Parse || e.kind == ErrKind::Validation)
                PyErr_SetString(PyExc_ValueError, e.what());
            else
                PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("compute_json", &compute_json, py::arg("dsl"), py::arg("cap") = 0,
          py::arg("cache_dir") = "",
          "full pipeline on DSL text; returns the report JSON document");
    m.def("dims_json", &dims_json, py::arg("dsl"), py::arg("cap") = 0,
          "per-vertex dimension report JSON");
    m.def("oracle_json", &oracle_json, py::arg("dsl"), py::arg("cap") = 0,
          py::arg("bound") = 12, "pipeline vs bar-complex comparison JSON");
    m.def("lambda_dsl", &lambda_dsl, py::arg("p"), py::arg("q"), py::arg("k"), py::arg("s"),
          py::arg("lam") = "1", py::arg("field") = "Q",
          "canonical DSL of the self-injective family");
    m.def("gamma_star_dsl", &gamma_star_dsl, py::arg("n"), py::arg("field") = "Q",
          "canonical DSL of the beta-cycle family");
    m.def("lambda_eta_dsl", &lambda_eta_dsl, py::arg("p"), py::arg("q"), py::arg("k"),
          py::arg("s"), py::arg("lam") = "1", py::arg("t") = "1", py::arg("field") = "Q");
    m.def("gamma_eta2_dsl", &gamma_eta2_dsl, py::arg("n"), py::arg("t") = "1",
          py::arg("field") = "Q");
    m.def("canonical", &canonical, py::arg("dsl"),
          "parse + reprint a presentation in canonical form");
}
