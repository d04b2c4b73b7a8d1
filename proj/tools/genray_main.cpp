// Command-line front end: fit amplitude data, run the bias/RMSE study,
// draw synthetic samples, and score goodness of fit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genray/amplitude.hpp"
#include "genray/estimators.hpp"
#include "genray/experiment.hpp"
#include "genray/gof.hpp"
#include "genray/io.hpp"
#include "genray/sampling.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

genray::EstimatorMethod parse_method(const std::string& m) {
    if (m == "mle") return genray::EstimatorMethod::projection_mle;
    if (m == "lme") return genray::EstimatorMethod::lme;
    if (m == "chf") return genray::EstimatorMethod::chf_regression;
    throw CLI::ValidationError("--method must be one of mle|lme|chf");
}

int cmd_fit(const std::string& input, const std::string& method_name, int projections,
            std::uint64_t seed, bool with_gof, const std::string& json_path) {
    const std::vector<double> r = genray::load_amplitude_file(input);
    const genray::EstimatorMethod method = parse_method(method_name);
    genray::ProjectionConfig cfg{projections, {seed, 0}};

    const genray::FitResult fit = genray::fit_amplitude(r, method, cfg);
    std::optional<genray::GofReport> gof;
    if (with_gof) gof = genray::gof_statistics(r, fit.psi_hat);

    std::printf("method          %s\n", genray::estimator_name(fit.method));
    std::printf("n               %zu\n", fit.n_used);
    std::printf("alpha_hat       %.6f%s\n", fit.psi_hat.alpha, fit.clipped ? "  (clipped)" : "");
    std::printf("sigma_hat       %.6g\n", fit.psi_hat.sigma);
    if (fit.loglik) std::printf("loglik          %.6f\n", *fit.loglik);
    std::printf("wall_time_s     %.3f\n", fit.wall_time_s);
    if (gof) {
        std::printf("ks              %.6f\n", gof->ks);
        std::printf("ad              %.6f\n", gof->ad);
        std::printf("cvm             %.6f\n", gof->cvm);
    }

    if (!json_path.empty()) {
        json j{{"method", genray::estimator_name(fit.method)},
               {"alpha_hat", fit.psi_hat.alpha},
               {"sigma_hat", fit.psi_hat.sigma},
               {"loglik", fit.loglik ? json(*fit.loglik) : json(nullptr)},
               {"n", fit.n_used},
               {"n_projections", projections},
               {"seed", seed},
               {"wall_time_s", fit.wall_time_s}};
        if (gof) {
            j["ks"] = gof->ks;
            j["ad"] = gof->ad;
            j["cvm"] = gof->cvm;
        }
        std::ofstream out(json_path);
        if (!out) throw genray::io_error("cannot open '" + json_path + "' for writing");
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const genray::ExperimentGrid& grid, int projections, const std::string& out_csv,
                 const std::string& out_svg) {
    genray::ProjectionConfig cfg{projections, {grid.master_seed, 0}};
    std::fprintf(stderr, "simulate: %zu cells x %d trials on %u worker(s)\n", grid.n_cells(),
                 grid.trials, genray::experiment_worker_count());
    const std::vector<genray::CellResult> cells = genray::run_experiment(grid, cfg);
    genray::emit_results(cells, out_csv,
                         out_svg.empty()
                             ? std::nullopt
                             : std::optional<std::filesystem::path>(out_svg));
    for (const auto& c : cells)
        if (c.flagged)
            std::fprintf(stderr,
                         "warning: cell (alpha=%g, sigma=%g, n=%d) had %d/%d trials complete\n",
                         c.alpha, c.sigma, c.n, c.trials_completed, grid.trials);
    std::printf("wrote %zu cells to %s\n", cells.size(), out_csv.c_str());
    if (!out_svg.empty()) std::printf("wrote chart to %s\n", out_svg.c_str());
    return kExitOk;
}

int cmd_sample(double alpha, double sigma, int n, std::uint64_t seed, const std::string& out) {
    const genray::AmplitudeParams psi(alpha, sigma);
    genray::VariateGenerator gen({seed, 0});
    const std::vector<double> r = genray::sample_amplitude(n, psi, gen);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw genray::io_error("cannot open '" + out + "' for writing");
        os = &file;
    }
    char buf[40];
    for (double v : r) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        *os << buf;
    }
    return kExitOk;
}

int cmd_gof(const std::string& input, double alpha, double sigma) {
    const std::vector<double> r = genray::load_amplitude_file(input);
    const genray::AmplitudeParams psi(alpha, sigma);
    const genray::GofReport rep = genray::gof_statistics(r, psi);
    std::printf("n               %zu\n", rep.n);
    std::printf("ks              %.6f\n", rep.ks);
    std::printf("ad              %.6f\n", rep.ad);
    std::printf("cvm             %.6f\n", rep.cvm);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable amplitude distribution fitting and simulation"};
    app.require_subcommand(1);

    // fit
    auto* fit = app.add_subcommand("fit", "Fit the amplitude distribution to a data file");
    std::string fit_input, fit_method = "mle", fit_json;
    int fit_projections = 20;
    std::uint64_t fit_seed = 0;
    bool fit_gof = false;
    fit->add_option("--input", fit_input, "amplitude data file (one value per line)")->required();
    fit->add_option("--method", fit_method, "estimator: mle|lme|chf (default mle)");
    fit->add_option("--projections", fit_projections, "number of projections N (default 20)")
        ->check(CLI::PositiveNumber);
    fit->add_option("--seed", fit_seed, "master seed for the projection phases");
    fit->add_flag("--gof", fit_gof, "also report KS/AD/CVM at the fitted parameters");
    fit->add_option("--json", fit_json, "write a machine-readable report to this path");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo bias/RMSE study over a grid");
    genray::ExperimentGrid grid;
    grid.trials = 200;
    std::string sim_csv, sim_svg;
    int sim_projections = 20;
    bool sim_full = false;
    sim->add_option("--alphas", grid.alphas, "alpha grid (default 1,1.25,1.5,1.75)")
        ->delimiter(',');
    sim->add_option("--sigmas", grid.sigmas, "sigma grid (default 0.5,2)")->delimiter(',');
    sim->add_option("--ns", grid.ns, "sample sizes (default 50,100,200,500)")->delimiter(',');
    auto* trials_opt = sim->add_option("--trials", grid.trials, "trials per cell (default 200)");
    sim->add_flag("--full", sim_full, "use the full 1000-trial study size");
    sim->add_option("--seed", grid.master_seed, "master seed");
    sim->add_option("--projections", sim_projections, "projections per fit (default 20)")
        ->check(CLI::PositiveNumber);
    sim->add_option("--out-csv", sim_csv, "output CSV path")->required();
    sim->add_option("--out-svg", sim_svg, "optional SVG chart path");

    // sample
    auto* smp = app.add_subcommand("sample", "Draw amplitude variates");
    double smp_alpha = 1.5, smp_sigma = 1.0;
    int smp_n = 0;
    std::uint64_t smp_seed = 0;
    std::string smp_out;
    smp->add_option("--alpha", smp_alpha, "tail index in (0, 2]")->required();
    smp->add_option("--sigma", smp_sigma, "scale > 0")->required();
    smp->add_option("--n", smp_n, "number of draws")->required()->check(CLI::PositiveNumber);
    smp->add_option("--seed", smp_seed, "seed");
    smp->add_option("--out", smp_out, "output file (default: stdout)");

    // gof
    auto* gof = app.add_subcommand("gof", "Goodness of fit against given parameters");
    std::string gof_input;
    double gof_alpha = 0.0, gof_sigma = 0.0;
    gof->add_option("--input", gof_input, "amplitude data file")->required();
    gof->add_option("--alpha", gof_alpha, "tail index in (0, 2]")->required();
    gof->add_option("--sigma", gof_sigma, "scale > 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitDomain;
    }

    try {
        if (*fit) return cmd_fit(fit_input, fit_method, fit_projections, fit_seed, fit_gof,
                                 fit_json);
        if (*sim) {
            if (sim_full && trials_opt->count() == 0) grid.trials = 1000;
            return cmd_simulate(grid, sim_projections, sim_csv, sim_svg);
        }
        if (*smp) return cmd_sample(smp_alpha, smp_sigma, smp_n, smp_seed, smp_out);
        if (*gof) return cmd_gof(gof_input, gof_alpha, gof_sigma);
    } catch (const genray::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const genray::accuracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const genray::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const genray::estimation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
