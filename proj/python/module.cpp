#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "rif/datagen.hpp"
#include "rif/harness.hpp"
#include "rif/io.hpp"
#include "rif/metrics.hpp"

namespace py = pybind11;
using namespace rif;

namespace {

Matrix to_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    Matrix m(static_cast<size_t>(arr.shape(0)), static_cast<size_t>(arr.shape(1)));
    std::copy(arr.data(), arr.data() + arr.size(), m.data().begin());
    return m;
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

ForestParams make_params(uint32_t trees, uint32_t psi, uint32_t depth_limit,
                         uint64_t seed) {
    ForestParams p;
    p.trees = trees;
    p.psi = psi;
    p.depth_limit = depth_limit;
    p.seed = seed;
    return p;
}

// Thin ownership wrapper so Python holds any of the three forest types.
struct PyModel {
    AnyForest forest;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Isolation-forest family anomaly detectors (iforest, eif, rif)";

    py::class_<PyModel>(m, "Model")
        .def_property_readonly(
            "algorithm", [](const PyModel& self) { return algo_name(self.forest); })
        .def_property_readonly(
            "dim", [](const PyModel& self) { return forest_dim(self.forest); })
        .def(
            "score",
            [](const PyModel& self,
               const py::array_t<double, py::array::c_style | py::array::forcecast>& x) {
                return to_array(score_any(self.forest, to_matrix(x)));
            },
            py::arg("points"), "Anomaly score in [0, 1] for each row")
        .def(
            "save",
            [](const PyModel& self, const std::string& path) {
                save_model(path, self.forest);
            },
            py::arg("path"));

    m.def(
        "fit",
        [](const std::string& algo,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& x,
           uint32_t trees, uint32_t psi, uint32_t depth_limit, uint64_t seed) {
            return PyModel{fit_algo(parse_algo(algo), to_matrix(x),
                                    make_params(trees, psi, depth_limit, seed))};
        },
        py::arg("algorithm"), py::arg("points"), py::arg("trees") = 100,
        py::arg("psi") = 256, py::arg("depth_limit") = 0, py::arg("seed") = 0,
        "Fit 'iforest', 'eif', or 'rif' on a (n, d) array");

    m.def(
        "load", [](const std::string& path) { return PyModel{load_model(path)}; },
        py::arg("path"));

    m.def(
        "auc",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& scores,
           const std::vector<bool>& labels) {
            std::vector<double> s(scores.data(), scores.data() + scores.size());
            return auc({std::move(s), labels});
        },
        py::arg("scores"), py::arg("labels"),
        "Mann-Whitney AUC of scores against boolean anomaly labels");

    m.def(
        "label_by_contamination",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& scores,
           double contamination) {
            std::vector<double> s(scores.data(), scores.data() + scores.size());
            return label_by_contamination(s, contamination);
        },
        py::arg("scores"), py::arg("contamination"),
        "Flag the top round(contamination * n) scores");

    m.def(
        "generate",
        [](const std::string& kind, size_t n_normal, uint64_t seed) {
            SyntheticSpec spec = default_spec(parse_kind(kind));
            spec.n_normal = n_normal;
            Rng rng(seed);
            const LabeledDataset ds = generate(rng, spec);
            py::array_t<double> pts({ds.points.rows(), ds.points.cols()});
            std::copy(ds.points.data().begin(), ds.points.data().end(),
                      pts.mutable_data());
            return py::make_tuple(pts, ds.labels);
        },
        py::arg("kind"), py::arg("n_normal") = 2000, py::arg("seed") = 0,
        "Synthetic benchmark dataset; returns (points, labels)");
}
