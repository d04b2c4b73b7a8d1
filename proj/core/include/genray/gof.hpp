#pragma once

#include <span>
#include <vector>

#include "genray/estimators.hpp"
#include "genray/types.hpp"

namespace genray {

/// Goodness-of-fit statistics of a sample against a fitted amplitude law.
struct GofReport {
    double ks = 0.0;
    double ad = 0.0;
    double cvm = 0.0;
    std::size_t n = 0;
    bool clamped = false;  // some z hit {0, 1} and was clamped for the AD log
};

// Statistics on probability-integral-transform values z against the uniform
// law; z need not be sorted.
GofReport gof_from_uniform(std::vector<double> z);

// KS, AD and CVM of positive amplitude data against the amplitude law psi,
// through z_i = amplitude_cdf(r_(i) | psi).
GofReport gof_statistics(std::span<const double> r, const AmplitudeParams& psi,
                         const QuadratureSpec& quad = {});

struct ComparisonRow {
    EstimatorMethod method;
    AmplitudeParams psi_hat;
    GofReport report;
};

// Fits each requested estimator on the same data (each method sees the same
// projection stream) and scores the fit; rows come back in method order.
// A row whose estimator fails is dropped; the others are unaffected.
std::vector<ComparisonRow> compare_estimators(std::span<const double> r,
                                              const std::vector<EstimatorMethod>& methods,
                                              const ProjectionConfig& cfg,
                                              const OptimizerSpec& opt = {},
                                              const QuadratureSpec& quad = {});

}  // namespace genray
