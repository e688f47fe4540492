#include "mses/cloud_gen.hpp"
#include "mses/cloud_io.hpp"
#include "mses/objective.hpp"
#include "mses/pso.hpp"
#include "mses/welzl.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

namespace {

using namespace mses;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given) {
    if (given) return *given;
    std::random_device rd;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(rd()) << 32) | rd();
    std::cout << "seed: " << seed << " (auto-generated)\n";
    return seed;
}

Weights parse_weights(const std::string& text) {
    Weights w;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &w.lambda, &w.alpha,
                    &w.beta) != 3)
        throw CLI::ValidationError("--weights", "expected LAMBDA,ALPHA,BETA");
    w.validate();
    return w;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void write_cloud(const std::string& path, const PointCloud& cloud) {
    if (ends_with(path, ".json"))
        write_cloud_json(path, cloud);
    else
        write_cloud_csv(path, cloud);
}

struct CommonOpts {
    std::optional<std::uint64_t> seed;
    std::string weights_text;
    std::optional<int> particles;
    std::optional<int> iters;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed (auto-generated if omitted)");
        cmd->add_option("--weights", weights_text,
                        "objective weights as LAMBDA,ALPHA,BETA");
        cmd->add_option("--particles", particles, "swarm size");
        cmd->add_option("--iters", iters, "iteration budget");
    }

    Weights weights() const {
        return weights_text.empty() ? Weights{} : parse_weights(weights_text);
    }

    SwarmConfig config(std::uint64_t resolved_seed) const {
        SwarmConfig cfg;
        cfg.seed = resolved_seed;
        if (particles) cfg.n_particles = *particles;
        if (iters) cfg.max_iters = *iters;
        return cfg;
    }
};

void print_cloud_summary(const PointCloud& cloud, std::uint64_t seed) {
    const Aabb box = bounding_box(cloud);
    std::printf("points: %zu\n", cloud.size());
    std::printf("bbox min: (%.10g, %.10g, %.10g)\n", box.min.x, box.min.y,
                box.min.z);
    std::printf("bbox max: (%.10g, %.10g, %.10g)\n", box.max.x, box.max.y,
                box.max.z);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
}

int run_gen(double radius, int n, double sigma, bool two_sphere,
            const std::optional<std::uint64_t>& seed_opt,
            const std::string& out) {
    const std::uint64_t seed = resolve_seed(seed_opt);
    PointCloud cloud;
    if (two_sphere)
        cloud = generate_two_sphere(radius, n, sigma, seed);
    else
        cloud = generate_shell({{0.0, 0.0, 0.0}, radius, n, sigma, seed});
    write_cloud(out, cloud);
    print_cloud_summary(cloud, seed);
    return 0;
}

nlohmann::ordered_json run_welzl_report(const PointCloud& cloud,
                                        std::uint64_t seed) {
    const WelzlResult welzl = welzl_ses(cloud, seed);
    const ValidationReport validation = validate_sphere(cloud, welzl.sphere);
    return welzl_report_json(welzl, validation);
}

int run_solve(const std::string& cloud_path, const std::string& algo,
              const CommonOpts& opts, const std::string& out,
              const std::string& trace_path) {
    const PointCloud cloud = read_cloud(cloud_path);
    const std::uint64_t seed = resolve_seed(opts.seed);
    nlohmann::ordered_json report;
    if (algo == "pso") {
        const SolveResult result = solve(cloud, opts.weights(), opts.config(seed));
        report = pso_report_json(result, cloud, seed);
        if (!trace_path.empty()) write_trace_csv(trace_path, result.trace);
    } else if (algo == "welzl") {
        report = run_welzl_report(cloud, seed);
    } else {  // brute
        const SphereCandidate s = brute_force_ses(cloud);
        const ValidationReport validation = validate_sphere(cloud, s);
        report["center"] = {s.center.x, s.center.y, s.center.z};
        report["radius"] = s.radius;
        report["max_violation"] = validation.max_violation;
        report["enclosed_fraction"] = validation.enclosed_fraction;
    }
    if (out.empty())
        std::cout << report.dump(2) << '\n';
    else
        write_json(out, report);
    return 0;
}

int run_compare(const std::string& cloud_path, const CommonOpts& opts,
                const std::string& out, const std::string& trace_path) {
    const PointCloud cloud = read_cloud(cloud_path);
    const std::uint64_t seed = resolve_seed(opts.seed);
    const Weights w = opts.weights();
    const SwarmConfig cfg = opts.config(seed);

    const SolveResult pso = solve(cloud, w, cfg);
    const WelzlResult welzl = welzl_ses(cloud, seed);
    const ValidationReport welzl_check = validate_sphere(cloud, welzl.sphere);
    const double n = static_cast<double>(cloud.size());

    nlohmann::ordered_json report;
    report["pso"] = pso_report_json(pso, cloud, seed);
    report["welzl"] = welzl_report_json(welzl, welzl_check);
    report["pso_inside_fraction"] = pso.fitness.inside_count / n;
    report["welzl_inside_fraction"] = welzl_check.enclosed_fraction;
    report["radius_ratio"] = pso.sphere.radius / welzl.sphere.radius;
    report["cloud_meta"] = {{"path", cloud_path},
                            {"n_points", cloud.size()},
                            {"seed", seed},
                            {"weights", {w.lambda, w.alpha, w.beta}},
                            {"particles", cfg.n_particles},
                            {"max_iters", cfg.max_iters}};
    if (!trace_path.empty()) write_trace_csv(trace_path, pso.trace);
    if (!out.empty()) write_json(out, report);

    std::printf("%-22s %14s %14s\n", "", "PSO", "Welzl");
    std::printf("%-22s %14.6f %14.6f\n", "radius", pso.sphere.radius,
                welzl.sphere.radius);
    std::printf("%-22s (%.4f, %.4f, %.4f) (%.4f, %.4f, %.4f)\n", "center",
                pso.sphere.center.x, pso.sphere.center.y, pso.sphere.center.z,
                welzl.sphere.center.x, welzl.sphere.center.y,
                welzl.sphere.center.z);
    std::printf("%-22s %14.6f %14.6f\n", "inside fraction",
                pso.fitness.inside_count / n, welzl_check.enclosed_fraction);
    std::printf("%-22s %14.6f\n", "radius ratio", pso.sphere.radius / welzl.sphere.radius);
    std::printf("%-22s %14d\n", "pso iterations", pso.iterations_run);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smallest-enclosing-sphere toolkit: PSO solver for the "
                 "relaxed multi-objective variant, exact Welzl baseline, and "
                 "synthetic cloud generation"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic shell cloud");
    double radius = 7.0, sigma = 0.7;
    int n = 634;
    bool two_sphere = false;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out = "cloud.csv";
    gen->add_option("--radius", radius, "shell radius")->check(CLI::PositiveNumber);
    gen->add_option("--n", n, "points per shell")->check(CLI::PositiveNumber);
    gen->add_option("--sigma", sigma, "Gaussian noise scale")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_flag("--two-sphere", two_sphere,
                  "two identical shells, second shifted by r/2 on each axis");
    gen->add_option("--out", gen_out, "output path (.csv or .json)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run one solver on a cloud");
    std::string solve_cloud, solve_algo = "pso", solve_out, solve_trace;
    CommonOpts solve_opts;
    solve_cmd->add_option("cloud", solve_cloud, "point-cloud file")->required();
    solve_cmd->add_option("--algo", solve_algo, "pso | welzl | brute")
        ->check(CLI::IsMember({"pso", "welzl", "brute"}));
    solve_cmd->add_option("--out", solve_out, "report JSON path (stdout if omitted)");
    solve_cmd->add_option("--trace", solve_trace, "PSO trace CSV path");
    solve_opts.attach(solve_cmd);

    // compare
    auto* compare = app.add_subcommand("compare",
                                       "run PSO and Welzl on the same cloud");
    std::string cmp_cloud, cmp_out, cmp_trace;
    CommonOpts cmp_opts;
    compare->add_option("cloud", cmp_cloud, "point-cloud file")->required();
    compare->add_option("--out", cmp_out, "comparison report JSON path");
    compare->add_option("--trace", cmp_trace, "PSO trace CSV path");
    cmp_opts.attach(compare);

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return run_gen(radius, n, sigma, two_sphere, gen_seed, gen_out);
        if (solve_cmd->parsed())
            return run_solve(solve_cloud, solve_algo, solve_opts, solve_out,
                             solve_trace);
        return run_compare(cmp_cloud, cmp_opts, cmp_out, cmp_trace);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const mses::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
