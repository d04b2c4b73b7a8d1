#include "genray/types.hpp"

#include <cmath>

namespace genray {

StableLaw::StableLaw(double alpha, double beta, double sigma, double mu)
    : alpha_(alpha), beta_(beta), sigma_(sigma), mu_(mu) {
    if (!(alpha > 0.0) || !(alpha <= 2.0) || std::isnan(alpha))
        throw std::invalid_argument("StableLaw: alpha must lie in (0, 2]");
    if (!(beta >= -1.0) || !(beta <= 1.0))
        throw std::invalid_argument("StableLaw: beta must lie in [-1, 1]");
    if (!(sigma > 0.0) || std::isinf(sigma))
        throw std::invalid_argument("StableLaw: sigma must be positive and finite");
    if (!std::isfinite(mu))
        throw std::invalid_argument("StableLaw: mu must be finite");
}

StableLaw StableLaw::symmetric(double alpha, double sigma) {
    return StableLaw(alpha, 0.0, sigma, 0.0);
}

StableLaw StableLaw::positive(double a) {
    if (!(a > 0.0) || !(a < 2.0))
        throw std::invalid_argument("StableLaw::positive: tail index must lie in (0, 2)");
    const double scale = std::pow(std::cos(M_PI * a / 4.0), 2.0 / a);
    return StableLaw(a / 2.0, 1.0, scale, 0.0);
}

void AmplitudeParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0) || std::isnan(alpha))
        throw std::invalid_argument("AmplitudeParams: alpha must lie in (0, 2]");
    if (!(sigma > 0.0) || std::isinf(sigma))
        throw std::invalid_argument("AmplitudeParams: sigma must be positive and finite");
}

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

void OptimizerSpec::validate() const {
    if (!(param_tol > 0.0) || !(func_tol > 0.0))
        throw std::invalid_argument("OptimizerSpec: tolerances must be positive");
    if (max_iters < 1)
        throw std::invalid_argument("OptimizerSpec: max_iters must be >= 1");
}

}  // namespace genray
