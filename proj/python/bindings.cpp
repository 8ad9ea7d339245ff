#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sepstar/cli.hpp>
#include <sepstar/errors.hpp>
#include <sepstar/expression.hpp>
#include <sepstar/potentials.hpp>
#include <sepstar/serialize.hpp>
#include <sepstar/star_product.hpp>
#include <sepstar/verify.hpp>

namespace py = pybind11;
using namespace sepstar;

namespace
{

// JSON crosses the boundary as text; the Python side decodes it.
std::string dump(const Json &j) { return j.dump(); }

Variable parse_variable(const std::string &name, int n)
{
    const ExprPtr e = parse_expression(name, n);
    if (e->kind != Expr::Kind::variable) {
        throw std::invalid_argument("expected a coordinate such as z1 or zbar1, got '" + name + "'");
    }
    return e->var;
}

Jet potential(const std::string &name, int n, int order)
{
    return is_builtin_potential(name) ? builtin_potential(name, n, order) : evaluate_expression(name, n, order);
}

// Functions handed to the geometry are expanded to its metric order.
Jet as_function(const GeometryCache &geom, const py::object &f)
{
    if (py::isinstance<py::str>(f)) {
        return evaluate_expression(f.cast<std::string>(), geom.dim(), geom.metric_order());
    }
    return f.cast<Jet>();
}

std::string series_text_json(const NuSeries<Jet> &s) { return dump(series_text(s)); }

} // namespace

PYBIND11_MODULE(_sepstar, m)
{
    m.doc() = "Exact star products with separation of variables on a pseudo-Kaehler chart";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<degenerate_metric>(m, "DegenerateMetric", PyExc_ArithmeticError);
    py::register_exception<order_exhausted>(m, "OrderExhausted", PyExc_ArithmeticError);
    py::register_exception<not_in_image>(m, "NotInImage", PyExc_ArithmeticError);

    py::class_<Jet>(m, "Jet")
        .def(py::init<int, int>(), py::arg("n"), py::arg("order"))
        .def_static("parse", [](const std::string &text, int n, int order) { return evaluate_expression(text, n, order); },
                    py::arg("text"), py::arg("n"), py::arg("order"))
        .def_property_readonly("n", &Jet::dim)
        .def_property_readonly("order", &Jet::order)
        .def("partial", [](const Jet &j, const std::string &var) { return j.partial(parse_variable(var, j.dim())); })
        .def("reciprocal", &Jet::reciprocal)
        .def("truncated", &Jet::truncated)
        .def("at_origin", &Jet::at_origin)
        .def("is_zero", &Jet::is_zero)
        .def("_coefficients_json", [](const Jet &j) { return dump(jet_json(j)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Jet::to_string)
        .def("__repr__", [](const Jet &j) {
            return "Jet(" + j.to_string() + ", n=" + std::to_string(j.dim()) + ", order=" + std::to_string(j.order()) + ")";
        });

    py::class_<GeometryCache>(m, "Geometry")
        .def(py::init([](const std::string &name, int n, int phi_order) { return new GeometryCache(potential(name, n, phi_order)); }),
             py::arg("potential"), py::arg("n"), py::arg("phi_order"))
        .def_property_readonly("n", &GeometryCache::dim)
        .def_property_readonly("phi_order", &GeometryCache::phi_order)
        .def_property_readonly("metric_order", &GeometryCache::metric_order)
        .def("g_low", &GeometryCache::g_low)
        .def("g_up", &GeometryCache::g_up)
        .def("curvature", &GeometryCache::curvature_low)
        .def("star",
             [](const GeometryCache &g, const py::object &f, const py::object &h, int nu_order, std::optional<int> jet_order) {
                 return star(g, as_function(g, f), as_function(g, h), nu_order, jet_order).series.components;
             },
             py::arg("f"), py::arg("g"), py::arg("nu_order"), py::arg("jet_order") = std::nullopt)
        .def("_tensor_t_json",
             [](const GeometryCache &g, int nu_order, std::optional<int> jet_order) {
                 return dump(series_json(tensor_T(g, nu_order, jet_order).series));
             },
             py::arg("nu_order"), py::arg("jet_order") = std::nullopt)
        .def("_closed_form_t_json",
             [](const GeometryCache &g, std::optional<int> jet_order) {
                 return dump(series_json(closed_form_T_reference(g, jet_order).series));
             },
             py::arg("jet_order") = std::nullopt)
        .def("_left_symbol_json",
             [](const GeometryCache &g, const py::object &f, int nu_order, std::optional<int> jet_order) {
                 return dump(series_json(left_mult_symbol(g, NuSeries<Jet>({as_function(g, f)}), nu_order, jet_order)));
             },
             py::arg("f"), py::arg("nu_order"), py::arg("jet_order") = std::nullopt)
        .def("_verify_json",
             [](const GeometryCache &g, int nu_order, std::uint64_t seed, int samples, int jet_order) {
                 VerifyOptions options;
                 options.seed = seed;
                 options.samples = samples;
                 options.jet_order = jet_order;
                 py::gil_scoped_release release;
                 return dump(report_json(verify_all(g, nu_order, options)));
             },
             py::arg("nu_order"), py::arg("seed") = 1, py::arg("samples") = 3, py::arg("jet_order") = 2);

    m.def("builtin_potential", &builtin_potential, py::arg("name"), py::arg("n"), py::arg("order"));
    m.def("random_potential", &random_potential, py::arg("n"), py::arg("order"), py::arg("seed"));
    m.def("conservative_phi_order", &conservative_phi_order, py::arg("jet_order"), py::arg("nu_order"));
    m.def("series_text", &series_text_json);
    m.def(
        "run_command",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
