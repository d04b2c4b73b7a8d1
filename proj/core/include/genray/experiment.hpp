#pragma once

#include <cstdint>
#include <vector>

#include "genray/estimators.hpp"
#include "genray/types.hpp"

namespace genray {

/// Bias/RMSE study grid: every (alpha, sigma, n) cell is run for `trials`
/// seeded repetitions.
struct ExperimentGrid {
    std::vector<double> alphas{1.0, 1.25, 1.5, 1.75};
    std::vector<double> sigmas{0.5, 2.0};
    std::vector<int> ns{50, 100, 200, 500};
    int trials = 1000;
    std::uint64_t master_seed = 0;

    void validate() const;
    std::size_t n_cells() const { return alphas.size() * sigmas.size() * ns.size(); }
};

struct CellResult {
    double alpha = 0.0;
    double sigma = 0.0;
    int n = 0;
    double bias_alpha = 0.0;
    double rmse_alpha = 0.0;
    double bias_sigma = 0.0;
    double rmse_sigma = 0.0;
    int trials_completed = 0;
    // the study's literal squared-error sum with (M-1) normalization
    double paper_mse_alpha = 0.0;
    double paper_mse_sigma = 0.0;
    bool flagged = false;  // more than 5% of trials failed
};

// Runs the full grid. Each trial k of cell c draws its sample and fits on
// the derived substream (master_seed, c * trials + k), so results are
// independent of scheduling; the worker count comes from GENRAY_WORKERS
// (default: hardware concurrency).
std::vector<CellResult> run_experiment(const ExperimentGrid& grid, const ProjectionConfig& cfg,
                                       const OptimizerSpec& opt = {},
                                       const QuadratureSpec& quad = {});

// Worker count resolution used by run_experiment (exposed for the CLI).
unsigned experiment_worker_count();

}  // namespace genray
