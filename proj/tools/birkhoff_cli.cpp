#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "birkhoff/assignment.hpp"
#include "birkhoff/decomposition.hpp"
#include "birkhoff/geometry.hpp"
#include "birkhoff/matrix_io.hpp"
#include "birkhoff/sampling.hpp"
#include "birkhoff/spectral.hpp"
#include "birkhoff/verify.hpp"
#include "json_writer.hpp"

namespace {

using namespace birkhoff;
using cli::JsonWriter;

SquareMatrix load(const std::string& path, const std::string& format) {
    MatrixFormat fmt;
    if (format == "csv") {
        fmt = MatrixFormat::csv;
    } else if (format == "json") {
        fmt = MatrixFormat::json;
    } else {
        fmt = guess_format(path);
    }
    return load_matrix(path, fmt);
}

int run_norm(const std::string& file, double p, const std::string& format) {
    const SquareMatrix a = load(file, format);
    const SchattenExponent exponent(p);
    JsonWriter w(std::cout);
    w.begin_object();
    w.key("n").value(a.dim());
    w.key("p").value(p);
    w.key("schatten_norm").value(schatten_norm(a, exponent));
    w.key("singular_values").value(singular_values(a).values());
    w.end_object();
    std::cout << '\n';
    return 0;
}

int run_mintrace(const std::string& file, bool exact_brute, const std::string& format) {
    const SquareMatrix a = load(file, format);
    const MinTraceResult result = exact_brute ? min_trace_bruteforce(a)
                                              : min_trace_hungarian(a);
    JsonWriter w(std::cout);
    w.begin_object();
    w.key("n").value(a.dim());
    w.key("method").value(exact_brute ? "bruteforce" : "hungarian");
    w.key("value").value(result.value);
    w.key("sigma").value(result.argmin.sigma());
    w.end_object();
    std::cout << '\n';
    return 0;
}

int run_radius(const std::string& file, double p, bool force_enum, int samples,
               std::uint64_t seed, const std::string& format) {
    const SquareMatrix a = load(file, format);
    const SchattenExponent exponent(p);
    BoundingBallReport report = [&] {
        if (samples > 0) return bounding_ball_radius_sampled(a, exponent, samples, seed);
        if (p == 2.0 && !force_enum) return bounding_ball_radius_s2(a);
        return bounding_ball_radius_enum(a, exponent);
    }();
    JsonWriter w(std::cout);
    w.begin_object();
    w.key("n").value(a.dim());
    w.key("p").value(report.p);
    w.key("method").value(to_string(report.method));
    if (report.method == RadiusMethod::sampled_lower_bound) {
        w.key("samples").value(samples);
        w.key("seed").value(static_cast<long long>(seed));
    }
    w.key("radius").value(report.radius);
    w.key("witness_sigma").value(report.witness.sigma());
    w.key("center").value(report.center);
    w.end_object();
    std::cout << '\n';
    return 0;
}

int run_chebyshev(std::size_t n, double p) {
    const ChebyshevReport report = chebyshev_radius(n, SchattenExponent(p));
    JsonWriter w(std::cout);
    w.begin_object();
    w.key("n").value(report.n);
    w.key("p").value(report.p);
    w.key("radius").value(report.radius);
    w.key("center").value(report.center);
    w.end_object();
    std::cout << '\n';
    return 0;
}

int run_decompose(const std::string& file, const std::string& format) {
    const SquareMatrix a = load(file, format);
    const DoublyStochasticMatrix d = make_doubly_stochastic(a);
    const BirkhoffDecomposition dec = birkhoff_decompose(d);
    JsonWriter w(std::cout);
    w.begin_object();
    w.key("n").value(d.dim());
    w.key("term_count").value(dec.size());
    w.key("weight_sum").value(dec.weight_sum());
    w.key("reconstruction_error").value(frobenius_norm(dec.reconstruct() - d.matrix()));
    w.key("terms").begin_array();
    for (const auto& term : dec.terms()) {
        w.begin_object();
        w.key("weight").value(term.weight);
        w.key("sigma").value(term.perm.sigma());
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::cout << '\n';
    return 0;
}

int run_sample(std::size_t n, const std::string& method, std::size_t k, std::uint64_t seed) {
    const DoublyStochasticMatrix d = method == "sinkhorn" ? sample_sinkhorn(n, seed)
                                                          : sample_convex(n, k, seed);
    write_matrix_csv(std::cout, d.matrix());
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int trials) {
    const VerificationReport report = run_suite(suite, seed, trials);
    JsonWriter w(std::cout);
    w.begin_object();
    w.key("suite").value(report.suite);
    w.key("seed").value(static_cast<long long>(seed));
    w.key("trials").value(trials);
    w.key("cases_run").value(report.cases_run);
    w.key("cases_failed").value(report.cases_failed);
    w.key("worst_violation").value(report.worst_violation);
    w.key("per_case").begin_array();
    for (const auto& c : report.per_case) {
        w.begin_object();
        w.key("name").value(c.name);
        w.key("status").value(c.pass ? "pass" : "fail");
        w.key("violation").value(c.violation);
        w.key("tolerance").value(c.tolerance);
        w.key("detail").value(c.detail);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::cout << '\n';
    return report.cases_failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometry of the doubly stochastic polytope under Schatten p-norms"};
    app.require_subcommand(1);

    std::string file, format = "auto", method = "convex", suite = "all";
    double p = 2.0;
    std::size_t n = 3, k = 3;
    std::uint64_t seed = 0;
    int samples = 0, trials = 100;
    bool exact_brute = false, force_enum = false;

    auto* norm = app.add_subcommand("norm", "Schatten p-norm and singular values of a matrix");
    norm->add_option("file", file, "matrix file, '-' for stdin")->required();
    norm->add_option("--p", p, "Schatten exponent, 1 <= p < inf (default 2)");
    norm->add_option("--format", format, "csv, json, or auto (by extension)");

    auto* mintrace = app.add_subcommand("mintrace", "minimal trace min_P tr(AP)");
    mintrace->add_option("file", file, "matrix file, '-' for stdin")->required();
    mintrace->add_flag("--exact-brute", exact_brute, "enumerate all permutations (n <= 9)");
    mintrace->add_option("--format", format, "csv, json, or auto");

    auto* radius = app.add_subcommand(
        "radius", "minimal bounding-ball radius of the polytope centered at the matrix");
    radius->add_option("file", file, "matrix file, '-' for stdin")->required();
    radius->add_option("--p", p, "Schatten exponent (default 2)");
    radius->add_flag("--enum", force_enum, "force exhaustive enumeration (n <= 8)");
    radius->add_option("--samples", samples,
                       "random permutations for a sampled lower bound (any n)");
    radius->add_option("--seed", seed, "seed for --samples");
    radius->add_option("--format", format, "csv, json, or auto");

    auto* chebyshev = app.add_subcommand("chebyshev", "Chebyshev radius and center");
    chebyshev->add_option("--n", n, "dimension")->required();
    chebyshev->add_option("--p", p, "Schatten exponent")->required();

    auto* decompose =
        app.add_subcommand("decompose", "convex combination of permutation matrices");
    decompose->add_option("file", file, "matrix file, '-' for stdin")->required();
    decompose->add_option("--format", format, "csv, json, or auto");

    auto* sample = app.add_subcommand("sample", "random doubly stochastic matrix (CSV)");
    sample->add_option("--n", n, "dimension")->required();
    sample->add_option("--method", method, "convex or sinkhorn")
        ->check(CLI::IsMember({"convex", "sinkhorn"}));
    sample->add_option("--k", k, "permutations in the convex combination (default 3)");
    sample->add_option("--seed", seed, "RNG seed (default 0)");

    auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report");
    verify->add_option("--suite", suite, "all, norms, mintrace, radius, chebyshev, decompose");
    verify->add_option("--seed", seed, "RNG seed (default 0)");
    verify->add_option("--trials", trials, "sample-count scale (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (norm->parsed()) return run_norm(file, p, format);
        if (mintrace->parsed()) return run_mintrace(file, exact_brute, format);
        if (radius->parsed()) return run_radius(file, p, force_enum, samples, seed, format);
        if (chebyshev->parsed()) return run_chebyshev(n, p);
        if (decompose->parsed()) return run_decompose(file, format);
        if (sample->parsed()) return run_sample(n, method, k, seed);
        if (verify->parsed()) return run_verify(suite, seed, trials);
    } catch (const birkhoff::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
