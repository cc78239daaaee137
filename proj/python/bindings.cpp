#include "dcrit/report.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace dcrit;

namespace {

RunConfig make_config(int n, std::uint64_t prime, std::uint64_t seed, int samples)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    return RunConfig{n, prime, seed, samples};
}

// Reports cross the boundary as JSON text; the Python side parses them.
std::string dump(const Report& r, bool timing) { return r.to_json(timing).dump(); }

nlohmann::json parse(const std::string& text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

using Runner = Report (*)(const RunConfig&);

void bind_runner(py::module_& m, const char* name, Runner fn)
{
    m.def(
        name,
        [fn](int n, std::uint64_t prime, std::uint64_t seed, int samples, bool timing) {
            auto cfg = make_config(n, prime, seed, samples);
            Report r;
            {
                py::gil_scoped_release release;
                r = fn(cfg);
            }
            return dump(r, timing);
        },
        py::arg("n") = 2, py::arg("prime") = 2147483647ULL, py::arg("seed") = 1, py::arg("samples") = 20,
        py::arg("timing") = true);
}

Report ext_default(const RunConfig& cfg) { return ext_report(cfg); }

Report cover_standard(const RunConfig& cfg) { return toric_cover_report(cfg, standard_surfaces()); }

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.attr("__version__") = kToolVersion;
    m.attr("REPORT_SCHEMA") = kReportSchema;
    py::register_exception<std::invalid_argument>(m, "InvalidInput", PyExc_ValueError);

    bind_runner(m, "verify_cdga", verify_cdga);
    bind_runner(m, "verify_superpotential", verify_superpotential);
    bind_runner(m, "verify_family", verify_family);
    bind_runner(m, "verify_resolution", verify_resolution);
    bind_runner(m, "verify_chainmap", verify_chainmap);
    bind_runner(m, "ext", ext_default);
    bind_runner(m, "partitions", partitions_report);
    bind_runner(m, "toric_cover_stats", cover_standard);
    bind_runner(m, "run_all", run_all);

    m.def(
        "ext_points",
        [](const std::string& corpus_json, std::uint64_t prime, bool timing) {
            auto pts = corpus_from_json(parse(corpus_json));
            RunConfig cfg;
            cfg.prime = prime;
            return dump(ext_report(cfg, pts, "the given points"), timing);
        },
        py::arg("corpus_json"), py::arg("prime") = 2147483647ULL, py::arg("timing") = true);

    m.def(
        "toric_chart",
        [](const std::string& surface_json, const std::string& points_json) {
            auto spec = surface_from_json(parse(surface_json));
            auto surface = build_surface(spec);
            std::vector<CoxPoint> pts;
            for (const auto& p : parse(points_json))
                pts.push_back(toric_point_from_json(surface.fan(), p));
            return chart_result_to_json(find_chart(surface, pts)).dump();
        },
        py::arg("surface_json"), py::arg("points_json"));

    m.def(
        "partition_count",
        [](int n, const std::string& strategy) {
            if (strategy == "corners")
                return enumerate_partitions(n).size();
            if (strategy == "heights")
                return enumerate_partitions_by_heights(n).size();
            throw std::invalid_argument("strategy must be 'corners' or 'heights'");
        },
        py::arg("n"), py::arg("strategy") = "corners");

    m.def(
        "corpus",
        [](int max_n, int conjugates, std::uint64_t seed) {
            return corpus_to_json(build_corpus(max_n, conjugates, seed)).dump();
        },
        py::arg("max_n"), py::arg("conjugates") = 0, py::arg("seed") = 1);
}
