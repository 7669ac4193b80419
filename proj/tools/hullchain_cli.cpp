// Command-line front end: compile, classify, trace, verify, render.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hullchain/errors.hpp"
#include "hullchain/evaluator.hpp"
#include "hullchain/io.hpp"
#include "hullchain/network.hpp"
#include "hullchain/oracle.hpp"
#include "hullchain/peeling.hpp"
#include "hullchain/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification mismatch, diagnostics
constexpr int kExitUsage = 2;    // bad arguments or unusable inputs

void print_error(const std::string& code, const std::string& detail) {
    std::cerr << "ERROR " << code << ": " << detail << "\n";
}

double max_lifted_norm(const hullchain::Dataset& d) {
    double best = 0.0;
    for (const auto& p : d.points) {
        double norm_sq = 1.0;
        for (double c : p.coords) norm_sq += c * c;
        best = std::max(best, std::sqrt(norm_sq));
    }
    return best;
}

std::vector<double> parse_point_flag(const std::string& text) {
    std::vector<double> coords;
    std::stringstream stream(text);
    std::string field;
    while (std::getline(stream, field, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw hullchain::ParseError("--point: '" + field +
                                        "' is not a number");
        }
    }
    if (coords.empty()) {
        throw hullchain::ParseError("--point: no coordinates given");
    }
    return coords;
}

int run_compile(const std::string& input, const std::string& output,
                const std::string& positive_class, double bound,
                const std::string& svg_path) {
    hullchain::Dataset raw = hullchain::load_dataset(input);
    if (positive_class == "neg") {
        raw.positive_class = hullchain::ClassLabel::Neg;
    } else if (positive_class != "pos") {
        print_error("UsageError", "--positive-class must be pos or neg");
        return kExitUsage;
    }

    const hullchain::Dataset clean = hullchain::dedup(raw);
    const std::vector<hullchain::Polytope> hulls = hullchain::peel(clean);

    const double min_bound = max_lifted_norm(clean);
    double domain_bound = bound;
    if (domain_bound == 0.0) {
        domain_bound = 2.0 * min_bound;
    } else if (domain_bound < min_bound) {
        throw hullchain::InvalidBound(
            "--bound " + hullchain::format_double(domain_bound) +
            " is below the training data norm " +
            hullchain::format_double(min_bound));
    }

    const hullchain::ChainNetwork net = hullchain::compile(hulls, domain_bound);

    const auto diagnostics = hullchain::validate(net);
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) {
            print_error(hullchain::diagnostic_name(d.code), d.message);
        }
        return kExitFailure;
    }

    hullchain::save_network(net, output);

    std::cout << "regions: " << hulls.size() << "\n";
    std::cout << "units: " << net.units.size() << "\n";
    for (const auto& hull : hulls) {
        std::cout << "level " << hull.level << ": "
                  << hullchain::class_name(hull.generator_class) << ", "
                  << hull.cuts.size() << " facets\n";
    }

    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) {
            throw hullchain::ParseError("cannot open '" + svg_path +
                                        "' for writing");
        }
        svg << hullchain::render_svg(net, clean.points, 256);
    }
    return kExitOk;
}

int run_classify(const std::string& network_path, const std::string& input,
                 const std::string& output) {
    const hullchain::ChainNetwork net = hullchain::load_network(network_path);
    const auto points = hullchain::load_points(input);

    std::vector<hullchain::ClassLabel> labels;
    labels.reserve(points.size());
    for (const auto& p : points) {
        labels.push_back(hullchain::classify(net, p));
    }

    std::ofstream out(output);
    if (!out) {
        throw hullchain::ParseError("cannot open '" + output +
                                    "' for writing");
    }
    hullchain::write_labels_csv(out, points, labels);
    std::cout << "classified: " << points.size() << " points\n";
    return kExitOk;
}

int run_trace(const std::string& network_path, const std::string& point_text) {
    const hullchain::ChainNetwork net = hullchain::load_network(network_path);
    const std::vector<double> x = parse_point_flag(point_text);

    const hullchain::EvalTrace trace = hullchain::forward(net, x);
    std::cout << "bits:";
    for (auto bit : trace.bits) {
        std::cout << ' ' << static_cast<int>(bit);
    }
    std::cout << ", label: " << hullchain::class_name(trace.label) << "\n";
    return kExitOk;
}

int run_verify(const std::string& network_path, std::size_t samples,
               double epsilon, std::uint64_t seed) {
    const hullchain::ChainNetwork net = hullchain::load_network(network_path);
    if (!net.hulls.has_value() || net.hulls->empty()) {
        print_error("UsageError",
                    "network file carries no hulls; compile with hulls to "
                    "enable verification");
        return kExitUsage;
    }

    const hullchain::FuzzReport report =
        hullchain::run_differential_fuzz(net, samples, epsilon, seed);
    std::cout << "agreement: " << report.agreed << "/" << report.compared
              << "\n";
    std::cout << "skipped: " << report.skipped_near_cut << " near-cut, "
              << report.skipped_out_of_domain << " out-of-domain\n";
    if (!report.all_agree()) {
        std::ostringstream detail;
        detail << "first mismatch at (";
        for (std::size_t i = 0; i < report.first_mismatch.size(); ++i) {
            if (i > 0) detail << ", ";
            detail << hullchain::format_double(report.first_mismatch[i]);
        }
        detail << ")";
        print_error("VerificationMismatch", detail.str());
        return kExitFailure;
    }
    return kExitOk;
}

int run_render(const std::string& network_path, const std::string& output,
               int resolution) {
    const hullchain::ChainNetwork net = hullchain::load_network(network_path);
    std::ofstream out(output);
    if (!out) {
        throw hullchain::ParseError("cannot open '" + output +
                                    "' for writing");
    }
    out << hullchain::render_svg(net, {}, resolution);
    std::cout << "rendered: " << output << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compiles two-class point sets into width-one perceptron "
                 "chains via nested convex-hull peeling"};
    app.require_subcommand(1);

    std::string input, output, network_path, positive_class = "pos";
    std::string point_text, svg_path;
    double bound = 0.0;
    std::size_t samples = 100000;
    double epsilon = 1e-6;
    std::uint64_t seed = 42;
    int resolution = 256;

    auto* compile = app.add_subcommand("compile",
                                       "Build a chain network from a CSV "
                                       "dataset");
    compile->add_option("--input", input, "dataset CSV")->required();
    compile->add_option("--output", output, "network JSON")->required();
    compile->add_option("--positive-class", positive_class,
                        "which label drives the outermost hull (pos|neg)");
    compile->add_option("--bound", bound,
                        "domain bound B (default: 2 x max training norm)");
    compile->add_option("--svg", svg_path, "also render the decision region");

    auto* classify = app.add_subcommand("classify",
                                        "Label query points with a network");
    classify->add_option("--network", network_path, "network JSON")->required();
    classify->add_option("--input", input, "points CSV")->required();
    classify->add_option("--output", output, "labels CSV")->required();

    auto* trace = app.add_subcommand("trace",
                                     "Print the per-unit bit sequence for "
                                     "one point");
    trace->add_option("--network", network_path, "network JSON")->required();
    trace->add_option("--point", point_text, "comma-separated coordinates")
        ->required();

    auto* verify = app.add_subcommand("verify",
                                      "Differential fuzzing against the "
                                      "geometric oracle");
    verify->add_option("--network", network_path, "network JSON")->required();
    verify->add_option("--samples", samples, "retained sample count");
    verify->add_option("--epsilon", epsilon,
                       "skip samples closer than this to any cut");
    verify->add_option("--seed", seed, "RNG seed");

    auto* render = app.add_subcommand("render", "Write the decision region "
                                                "as SVG");
    render->add_option("--network", network_path, "network JSON")->required();
    render->add_option("--output", output, "SVG path")->required();
    render->add_option("--resolution", resolution, "raster cells per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(compile)) {
            return run_compile(input, output, positive_class, bound, svg_path);
        }
        if (app.got_subcommand(classify)) {
            return run_classify(network_path, input, output);
        }
        if (app.got_subcommand(trace)) {
            return run_trace(network_path, point_text);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(network_path, samples, epsilon, seed);
        }
        if (app.got_subcommand(render)) {
            return run_render(network_path, output, resolution);
        }
    } catch (const hullchain::Error& e) {
        print_error(e.code(), e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        print_error("InternalError", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
