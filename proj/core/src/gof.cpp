#include "genray/gof.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "genray/amplitude.hpp"

namespace genray {

GofReport gof_from_uniform(std::vector<double> z) {
    if (z.empty()) throw std::invalid_argument("gof_from_uniform: z must be nonempty");
    std::stable_sort(z.begin(), z.end());
    const std::size_t n = z.size();
    const double dn = static_cast<double>(n);

    GofReport rep;
    rep.n = n;
    double ks = 0.0, cvm = 0.0, ad = 0.0;
    constexpr double kEps = 1e-12;
    for (std::size_t i = 1; i <= n; ++i) {
        const double zi = z[i - 1];
        ks = std::max(ks, std::max(std::fabs(i / dn - zi), std::fabs(zi - (i - 1) / dn)));
        const double d = zi - (2.0 * i - 1.0) / (2.0 * dn);
        cvm += d * d;

        double zlo = zi;
        double zhi = z[n - i];  // z_(n+1-i)
        if (zlo <= 0.0 || zlo >= 1.0 || zhi <= 0.0 || zhi >= 1.0) rep.clamped = true;
        zlo = std::clamp(zlo, kEps, 1.0 - kEps);
        zhi = std::clamp(zhi, kEps, 1.0 - kEps);
        ad += (2.0 * i - 1.0) * (std::log(zlo) + std::log1p(-zhi));
    }
    rep.ks = ks;
    rep.cvm = 1.0 / (12.0 * dn) + cvm;
    rep.ad = -dn - ad / dn;
    return rep;
}

GofReport gof_statistics(std::span<const double> r, const AmplitudeParams& psi,
                         const QuadratureSpec& quad) {
    if (r.empty()) throw std::invalid_argument("gof_statistics: data must be nonempty");
    std::vector<double> z;
    z.reserve(r.size());
    for (double ri : r) {
        if (!(ri > 0.0)) throw std::domain_error("gof_statistics: amplitudes must be positive");
        z.push_back(amplitude_cdf(ri, psi, quad));
    }
    return gof_from_uniform(std::move(z));
}

std::vector<ComparisonRow> compare_estimators(std::span<const double> r,
                                              const std::vector<EstimatorMethod>& methods,
                                              const ProjectionConfig& cfg,
                                              const OptimizerSpec& opt,
                                              const QuadratureSpec& quad) {
    if (r.empty()) throw std::invalid_argument("compare_estimators: data must be nonempty");

    // canonical row order, deduplicated
    const EstimatorMethod order[] = {EstimatorMethod::projection_mle, EstimatorMethod::lme,
                                     EstimatorMethod::chf_regression};
    std::vector<ComparisonRow> rows;
    for (EstimatorMethod m : order) {
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) continue;
        try {
            const FitResult fit = fit_amplitude(r, m, cfg, opt, quad);
            rows.push_back({m, fit.psi_hat, gof_statistics(r, fit.psi_hat, quad)});
        } catch (const std::exception& e) {
            std::cerr << "compare_estimators: " << estimator_name(m) << " failed: " << e.what()
                      << "\n";
        }
    }
    return rows;
}

}  // namespace genray
