#include "genray/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <thread>

#include "genray/sampling.hpp"

namespace genray {

void ExperimentGrid::validate() const {
    if (alphas.empty() || sigmas.empty() || ns.empty())
        throw std::invalid_argument("ExperimentGrid: grids must be nonempty");
    for (double a : alphas)
        if (!(a > 0.0) || !(a <= 2.0))
            throw std::invalid_argument("ExperimentGrid: alpha must lie in (0, 2]");
    for (double s : sigmas)
        if (!(s > 0.0)) throw std::invalid_argument("ExperimentGrid: sigma must be positive");
    for (int n : ns)
        if (n < 1) throw std::invalid_argument("ExperimentGrid: n must be >= 1");
    if (trials < 2) throw std::invalid_argument("ExperimentGrid: trials must be >= 2");
}

unsigned experiment_worker_count() {
    if (const char* env = std::getenv("GENRAY_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

std::vector<CellResult> run_experiment(const ExperimentGrid& grid, const ProjectionConfig& cfg,
                                       const OptimizerSpec& opt, const QuadratureSpec& quad) {
    grid.validate();
    cfg.validate();

    struct Cell {
        double alpha, sigma;
        int n;
    };
    std::vector<Cell> cells;
    cells.reserve(grid.n_cells());
    for (double a : grid.alphas)
        for (double s : grid.sigmas)
            for (int n : grid.ns) cells.push_back({a, s, n});

    const std::size_t m = static_cast<std::size_t>(grid.trials);
    const std::size_t total = cells.size() * m;
    // one slot per (cell, trial); nullopt marks a failed trial
    std::vector<std::optional<std::pair<double, double>>> estimates(total);

    auto run_unit = [&](std::size_t unit) {
        const std::size_t c = unit / m;
        const std::size_t k = unit % m;
        const Cell& cell = cells[c];
        const AmplitudeParams psi(cell.alpha, cell.sigma);
        VariateGenerator gen({grid.master_seed, c * m + k});
        try {
            const std::vector<double> r = sample_amplitude(cell.n, psi, gen);
            const FitResult fit = detail::projection_mle_with_gen(
                r, cfg.n_projections, gen, opt, quad, /*with_loglik=*/false);
            estimates[unit] = {fit.psi_hat.alpha, fit.psi_hat.sigma};
        } catch (const std::exception&) {
            estimates[unit] = std::nullopt;
        }
    };

    const unsigned workers = std::min<unsigned>(experiment_worker_count(),
                                                static_cast<unsigned>(total));
    if (workers <= 1) {
        for (std::size_t u = 0; u < total; ++u) run_unit(u);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t u = next.fetch_add(1);
                    if (u >= total) return;
                    run_unit(u);
                }
            });
        for (auto& t : pool) t.join();
    }

    // deterministic reduction in (cell, trial) order
    std::vector<CellResult> out;
    out.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        CellResult res;
        res.alpha = cells[c].alpha;
        res.sigma = cells[c].sigma;
        res.n = cells[c].n;
        double sa = 0.0, sa2 = 0.0, ss = 0.0, ss2 = 0.0;
        int done = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const auto& e = estimates[c * m + k];
            if (!e) continue;
            const double da = e->first - cells[c].alpha;
            const double ds = e->second - cells[c].sigma;
            sa += da;
            sa2 += da * da;
            ss += ds;
            ss2 += ds * ds;
            ++done;
        }
        res.trials_completed = done;
        if (done >= 1) {
            res.bias_alpha = sa / done;
            res.rmse_alpha = std::sqrt(sa2 / done);
            res.bias_sigma = ss / done;
            res.rmse_sigma = std::sqrt(ss2 / done);
        }
        if (done >= 2) {
            res.paper_mse_alpha = sa2 / (done - 1);
            res.paper_mse_sigma = ss2 / (done - 1);
        }
        res.flagged = (m - done) * 20 > m;  // > 5% failures
        out.push_back(res);
    }
    return out;
}

}  // namespace genray
