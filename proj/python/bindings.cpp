// Thin bindings: scenes go in as JSON text and reports come back as JSON
// text; the Python package decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbertvd/commands.hpp"
#include "hilbertvd/error.hpp"
#include "hilbertvd/session.hpp"

namespace py = pybind11;
using namespace hilbertvd;

namespace {

Point point(const std::pair<double, double>& p) { return {p.first, p.second}; }

std::string report(const CommandOutput& out) { return out.json.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hilbert-metric Voronoi engine (JSON in, JSON out)";

    static py::exception<Error> error(m, "HilbertError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            error((std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    using Release = py::call_guard<py::gil_scoped_release>;

    m.def("distance", [](const std::string& scene, std::pair<double, double> p, std::pair<double, double> q) {
        return report(run_distance(parse_scene(scene), point(p), point(q)));
    }, py::arg("scene"), py::arg("p"), py::arg("q"), Release());
    m.def("ball", [](const std::string& scene, std::pair<double, double> c, double r) {
        return report(run_ball(parse_scene(scene), point(c), r));
    }, py::arg("scene"), py::arg("center"), py::arg("radius"), Release());
    m.def("bisector", [](const std::string& scene, int i, int j) {
        return report(run_bisector(parse_scene(scene), i, j));
    }, py::arg("scene"), py::arg("i"), py::arg("j"), Release());
    m.def("circumcenter", [](const std::string& scene, int i, int j, int k) {
        return report(run_circumcenter(parse_scene(scene), i, j, k));
    }, py::arg("scene"), py::arg("i"), py::arg("j"), py::arg("k"), Release());
    m.def("voronoi", [](const std::string& scene, const std::vector<int>& orders) {
        return report(run_voronoi(parse_scene(scene), orders));
    }, py::arg("scene"), py::arg("orders"), Release());
    m.def("delaunay", [](const std::string& scene, int k) {
        return report(run_delaunay(parse_scene(scene), k));
    }, py::arg("scene"), py::arg("order"), Release());
    m.def("regions", [](const std::string& scene, int i, int j) {
        return report(run_regions(parse_scene(scene), i, j));
    }, py::arg("scene"), py::arg("i"), py::arg("j"), Release());
    m.def("cluster", [](const std::string& scene, const std::string& method, int k, int steps, int count,
                        double height) {
        ClusterRequest req{parse_cluster_method(method), k, steps, count, height};
        return report(run_cluster(parse_scene(scene), req));
    }, py::arg("scene"), py::arg("method"), py::arg("k"), py::arg("steps"), py::arg("count"), py::arg("height"),
       Release());
    m.def("verify", [](const std::string& scene, const std::vector<int>& orders, int resolution) {
        return report(run_verify(parse_scene(scene), orders, resolution));
    }, py::arg("scene"), py::arg("orders"), py::arg("resolution"), Release());
    m.def("normalize_scene", [](const std::string& scene) { return dump_scene(parse_scene(scene)); },
          py::arg("scene"));

    py::class_<Session>(m, "Session")
        .def(py::init([](const std::string& scene) { return std::make_unique<Session>(parse_scene(scene)); }),
             py::arg("scene"))
        .def("handle", [](Session& s, const std::string& message) { return s.handle_text(message).dump(); },
             py::arg("message"), Release())
        .def("snapshot", [](const Session& s) { return s.snapshot().dump(); })
        .def("scene", [](const Session& s) { return dump_scene(s.scene()); });
}
