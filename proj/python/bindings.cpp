// vertexkernel._core: thin wrappers over the C++ engine. Values cross the
// boundary as text (elements, states, modes) or JSON strings (reports,
// structured results); the Python package decodes the JSON.

#include <memory>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vertexkernel/coalgebra.hpp>
#include <vertexkernel/constructions.hpp>
#include <vertexkernel/current.hpp>
#include <vertexkernel/enveloping.hpp>
#include <vertexkernel/json_io.hpp>
#include <vertexkernel/suites.hpp>
#include <vertexkernel/vla.hpp>

namespace py = pybind11;

namespace
{

using namespace vk;

// EnvelopingAlgebra is not copyable; keep it on the heap next to its presentation.
struct Algebra {
    std::shared_ptr<const EnvelopingAlgebra> V;
};

SuiteOptions make_options(int max_weight, int mode_window, int torsion_bound, int alpha_bound, std::size_t sample,
                          std::uint64_t seed, unsigned threads)
{
    SuiteOptions opt;
    opt.max_weight = max_weight;
    opt.mode_window = mode_window;
    opt.torsion_bound = torsion_bound;
    opt.alpha_bound = alpha_bound;
    opt.sample = sample;
    opt.seed = seed;
    opt.threads = threads == 0 ? threads_from_env() : threads;
    return opt;
}

std::string run_check(const std::string &input, const std::string &suite, const SuiteOptions &opt)
{
    if (input.rfind("builtin:", 0) == 0) {
        return to_json(run_presentation_suite(load_presentation(input), suite, opt)).dump();
    }
    const std::filesystem::path path(input);
    const Json j = read_json_file(path);
    if (is_construction(j)) {
        const auto s = construction_from_json(j, path.parent_path());
        return to_json(run_construction_suite(s.presentation, s.semigroup, s.phi, s.morphism, suite, opt)).dump();
    }
    return to_json(run_presentation_suite(presentation_from_json(j), suite, opt)).dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact vertex Lie algebra and vertex bialgebra computations";

    py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<MalformedPresentation>(m, "MalformedPresentation", PyExc_ValueError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_ValueError);

    py::class_<VlaPresentation>(m, "Presentation")
        .def_static(
            "builtin", [](const std::string &name) { return load_presentation("builtin:" + name); }, py::arg("name"))
        .def_static(
            "load", [](const std::string &path) { return load_presentation(path); }, py::arg("path"))
        .def_static(
            "from_json", [](const std::string &text) { return presentation_from_json(parse_json(text)); },
            py::arg("text"))
        .def("to_json", [](const VlaPresentation &p) { return to_json(p).dump(); })
        .def_property_readonly("generators",
                               [](const VlaPresentation &p) {
                                   py::list out;
                                   for (const auto &g : p.generators()) {
                                       out.append(py::make_tuple(g.name, g.weight, g.torsion));
                                   }
                                   return out;
                               })
        .def(
            "set_product",
            [](VlaPresentation &p, const std::string &l, const std::string &r, int n, const std::string &result) {
                p.set_product(l, r, n, p.parse_element(result));
            },
            py::arg("left"), py::arg("right"), py::arg("n"), py::arg("result"))
        .def(
            "validate",
            [](const VlaPresentation &p, int extra) { return to_json(validate_presentation(p, extra)).dump(); },
            py::arg("extra") = 2)
        .def(
            "product",
            [](const VlaPresentation &p, const std::string &u, int n, const std::string &v) {
                if (n < 0) {
                    throw py::value_error("n must be nonnegative");
                }
                return p.format(nth_product(p, p.parse_element(u), n, p.parse_element(v)));
            },
            py::arg("u"), py::arg("n"), py::arg("v"))
        .def(
            "apply_D", [](const VlaPresentation &p, const std::string &u) { return p.format(apply_D(p, p.parse_element(u))); },
            py::arg("u"))
        .def(
            "bracket",
            [](const VlaPresentation &p, const std::string &a, const std::string &b) {
                return format_modes(p, bracket(p, parse_mode(p, a), parse_mode(p, b)));
            },
            py::arg("a"), py::arg("b"))
        .def(
            "check_lie_axioms",
            [](const VlaPresentation &p, int window) { return to_json(check_lie_axioms(p, window)).dump(); },
            py::arg("window") = 4);

    py::class_<Algebra>(m, "Algebra")
        .def(py::init([](const VlaPresentation &p) { return Algebra{std::make_shared<const EnvelopingAlgebra>(p)}; }),
             py::arg("presentation"))
        .def(
            "normalize", [](const Algebra &a, const std::string &v) { return a.V->format(a.V->parse(v)); },
            py::arg("state"))
        .def(
            "mode",
            [](const Algebra &a, const std::string &u, int n, const std::string &v) {
                return a.V->format(a.V->mode(a.V->parse(u), n, a.V->parse(v)));
            },
            py::arg("u"), py::arg("n"), py::arg("v"))
        .def(
            "derivative", [](const Algebra &a, const std::string &v) { return a.V->format(a.V->derivative(a.V->parse(v))); },
            py::arg("state"))
        .def(
            "delta", [](const Algebra &a, const std::string &v) { return format_tensor(*a.V, delta(*a.V, a.V->parse(v))); },
            py::arg("state"))
        .def(
            "counit", [](const Algebra &a, const std::string &v) { return to_string(counit(*a.V, a.V->parse(v))); },
            py::arg("state"))
        .def(
            "graded_dimension",
            [](const Algebra &a, int weight, int k) { return a.V->graded_dimension(weight, k); }, py::arg("weight"),
            py::arg("torsion_bound") = 0)
        .def(
            "primitives",
            [](const Algebra &a, int weight, int k) {
                py::list out;
                for (const auto &x : primitive_subspace(*a.V, a.V->graded_basis(weight, k), a.V->vacuum())) {
                    out.append(a.V->format(x));
                }
                return out;
            },
            py::arg("weight"), py::arg("torsion_bound") = 0)
        .def(
            "is_group_like", [](const Algebra &a, const std::string &v) { return is_group_like(*a.V, a.V->parse(v)); },
            py::arg("state"))
        .def(
            "dims",
            [](const Algebra &a, int max_weight, int k) {
                py::list out;
                for (const auto &r : dims_table(*a.V, max_weight, k)) {
                    out.append(py::make_tuple(r.weight, r.dim, r.primitive_dim));
                }
                return out;
            },
            py::arg("max_weight"), py::arg("torsion_bound") = 0);

    m.def(
        "check",
        [](const std::string &input, const std::string &suite, int max_weight, int mode_window, int torsion_bound,
           int alpha_bound, std::size_t sample, std::uint64_t seed, unsigned threads) {
            const auto opt = make_options(max_weight, mode_window, torsion_bound, alpha_bound, sample, seed, threads);
            py::gil_scoped_release release;
            return run_check(input, suite, opt);
        },
        py::arg("input"), py::arg("suite") = "all", py::arg("max_weight") = 5, py::arg("mode_window") = 4,
        py::arg("torsion_bound") = 0, py::arg("alpha_bound") = 2, py::arg("sample") = 0, py::arg("seed") = 0,
        py::arg("threads") = 0);
}
