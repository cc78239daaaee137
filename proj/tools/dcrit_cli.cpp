#include "dcrit/report.hpp"
#include "dcrit/scalar.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dcrit;

namespace {

// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A JSON argument is either an inline literal or a path to a file.
nlohmann::json load_json(const std::string& arg)
{
    auto first = arg.find_first_not_of(" \t\n");
    try {
        if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
            return nlohmann::json::parse(arg);
        std::ifstream in(arg);
        if (!in)
            throw UsageError("cannot open " + arg);
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("invalid JSON in " + arg + ": " + e.what());
    }
}

std::vector<CoxPoint> load_toric_points(const Fan2D& fan, const nlohmann::json& j)
{
    const auto& list = j.is_object() && j.contains("points") ? j.at("points") : j;
    if (!list.is_array())
        throw UsageError("points must be a JSON array");
    std::vector<CoxPoint> pts;
    for (const auto& p : list)
        pts.push_back(toric_point_from_json(fan, p));
    return pts;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dcrit: verification driver for the d-critical chart computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    RunConfig cfg;
    std::string format = "json";
    std::string out_path;
    bool no_timing = false;
    auto add_globals = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "matrix size")->check(CLI::Range(1, 8));
        sub->add_option("--prime", cfg.prime, "prime for the modular cross-check")->check(CLI::Range(2ULL, 4294967291ULL));
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--samples", cfg.samples, "random samples per check")->check(CLI::Range(0, 100000));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", out_path, "write the report to FILE instead of stdout");
        sub->add_flag("--no-timing", no_timing, "omit timing fields");
    };

    std::function<Report()> job;

    auto* verify = app.add_subcommand("verify", "run one cluster of identity checks");
    verify->require_subcommand(1);
    struct Named {
        const char* name;
        const char* help;
        Report (*fn)(const RunConfig&);
    };
    for (const auto& v : {Named{"cdga", "Koszul d^2, cotangent self-duality, dW = commutators", verify_cdga},
                          Named{"superpotential", "the exactness and closedness identities", verify_superpotential},
                          Named{"family", "Leibniz rule for the universal family and the t-action search",
                                verify_family},
                          Named{"resolution", "the bimodule resolution and the complex L", verify_resolution},
                          Named{"chainmap", "the comparison map phi", verify_chainmap}}) {
        auto* sub = verify->add_subcommand(v.name, v.help);
        add_globals(sub);
        auto fn = v.fn;
        sub->callback([&job, &cfg, fn] { job = [&cfg, fn] { return fn(cfg); }; });
    }

    std::string corpus = "partitions";
    auto* ext = app.add_subcommand("ext", "Ext dims of L against the Koszul oracle on a point corpus");
    add_globals(ext);
    ext->add_option("--corpus", corpus, "'partitions' or a points JSON file");
    ext->callback([&] {
        job = [&] {
            if (corpus == "partitions")
                return ext_report(cfg);
            std::vector<MatrixPoint> pts;
            try {
                pts = corpus_from_json(load_json(corpus));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            return ext_report(cfg, pts, corpus);
        };
    });

    auto* parts = app.add_subcommand("partitions", "plane partition enumeration and the torus-fixed points");
    add_globals(parts);
    parts->callback([&] { job = [&] { return partitions_report(cfg); }; });

    auto* toric = app.add_subcommand("toric", "toric surface charts");
    toric->require_subcommand(1);
    std::string surface_arg, points_arg;
    auto* chart = toric->add_subcommand("chart", "find a chart containing the given points");
    add_globals(chart);
    chart->add_option("--surface", surface_arg, "surface JSON (inline or file)")->required();
    chart->add_option("--points", points_arg, "points JSON (inline or file)")->required();
    chart->callback([&] {
        job = [&] {
            try {
                auto spec = surface_from_json(load_json(surface_arg));
                auto pts = load_toric_points(build_surface(spec).fan(), load_json(points_arg));
                return toric_chart_report(cfg, spec, pts);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        };
    });
    auto* cover = toric->add_subcommand("cover-stats", "random configurations on the standard surfaces");
    add_globals(cover);
    cover->add_option("--surface", surface_arg, "restrict to one surface (inline JSON or file)");
    cover->callback([&] {
        job = [&] {
            auto surfaces = standard_surfaces();
            if (!surface_arg.empty()) {
                try {
                    surfaces = {surface_from_json(load_json(surface_arg))};
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            return toric_cover_report(cfg, surfaces);
        };
    });

    auto* all = app.add_subcommand("all", "every check");
    add_globals(all);
    all->callback([&] { job = [&] { return run_all(cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (!is_probable_prime(cfg.prime)) {
        std::cerr << "error: --prime " << cfg.prime << " is not prime\n";
        return kExitUsage;
    }

    Report rep;
    try {
        rep = job();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string text = format == "json" ? rep.to_json(!no_timing).dump(2) + "\n" : rep.to_text(!no_timing);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
        out << text;
    }
    return rep.all_passed() ? 0 : kExitFail;
}
