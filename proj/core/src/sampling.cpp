#include "genray/sampling.hpp"

#include <cmath>

#include "genray/stable_density.hpp"

namespace genray {

namespace {

constexpr double kPi = M_PI;

// log of the generic one-sided kernel k(v; a) = sin(av)^a sin((1-a)v)^(1-a) / sin(v).
double log_kanter_generic(double v, double a) {
    return a * std::log(std::sin(a * v)) + (1.0 - a) * std::log(std::sin((1.0 - a) * v)) -
           std::log(std::sin(v));
}

// One-sided standard variate with Laplace transform exp(-s^a), a in (0, 1):
// X = k(V; a)^(1/a) * W^(-(1-a)/a), V ~ U(0, pi), W ~ Exp(1).
double one_sided_standard(double a, VariateGenerator& gen) {
    const double v = gen.uniform(kPi);
    const double w = gen.exponential();
    return std::exp((log_kanter_generic(v, a) - (1.0 - a) * std::log(w)) / a);
}

double cms_variate(const StableLaw& law, VariateGenerator& gen) {
    const double alpha = law.alpha();
    const double beta = law.beta();
    if (alpha == 1.0) {
        const double th = kPi * (gen.uniform01() - 0.5);
        if (beta == 0.0) return law.sigma() * std::tan(th) + law.mu();
        const double w = gen.exponential();
        const double bt = M_PI_2 + beta * th;
        const double x =
            (bt * std::tan(th) - beta * std::log((M_PI_2 * w * std::cos(th)) / bt)) / M_PI_2;
        // alpha = 1 scale rule carries a beta log-sigma shift
        return law.sigma() * x + law.mu() +
               beta * (2.0 / kPi) * law.sigma() * std::log(law.sigma());
    }
    if (alpha < 1.0 && std::fabs(beta) == 1.0) {
        const double scale = law.sigma() * std::pow(std::cos(0.5 * kPi * alpha), -1.0 / alpha);
        return beta * scale * one_sided_standard(alpha, gen) + law.mu();
    }
    const double th = kPi * (gen.uniform01() - 0.5);
    const double w = gen.exponential();
    const double tb = beta * std::tan(0.5 * kPi * alpha);
    const double b0 = std::atan(tb) / alpha;
    const double s0 = std::pow(1.0 + tb * tb, 0.5 / alpha);
    const double x = s0 * std::sin(alpha * (th + b0)) / std::pow(std::cos(th), 1.0 / alpha) *
                     std::pow(std::cos(th - alpha * (th + b0)) / w, (1.0 - alpha) / alpha);
    return law.sigma() * x + law.mu();
}

}  // namespace

std::vector<double> sample_stable(std::size_t n, const StableLaw& law, VariateGenerator& gen) {
    std::vector<double> out(n);
    for (auto& x : out) x = cms_variate(law, gen);
    return out;
}

std::vector<double> sample_pas(std::size_t n, double alpha, VariateGenerator& gen) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("sample_pas: alpha must lie in (0, 2)");
    // S(a, 1, cos(pi a/2)^(1/a), 0) with a = alpha/2 is exactly the unscaled
    // one-sided standard law, so no further scaling is needed.
    std::vector<double> out(n);
    const double a = 0.5 * alpha;
    for (auto& u : out) u = one_sided_standard(a, gen);
    return out;
}

std::vector<double> sample_rayleigh_std(std::size_t n, VariateGenerator& gen) {
    std::vector<double> out(n);
    for (auto& w : out) w = std::sqrt(-std::log(gen.uniform01()));
    return out;
}

std::vector<double> sample_amplitude(std::size_t n, const AmplitudeParams& psi,
                                     VariateGenerator& gen) {
    psi.validate();
    std::vector<double> out(n);
    const bool rayleigh = psi.alpha >= detail::kAlphaGaussianCutoff;
    const double a = 0.5 * psi.alpha;
    for (auto& r : out) {
        const double u = rayleigh ? 1.0 : one_sided_standard(a, gen);
        const double w = std::sqrt(-std::log(gen.uniform01()));
        r = 2.0 * psi.sigma * std::sqrt(u) * w;
    }
    return out;
}

PhaseVector sample_phase(std::size_t n, VariateGenerator& gen) {
    PhaseVector pv;
    pv.theta.resize(n);
    for (auto& t : pv.theta) t = gen.uniform(2.0 * kPi);
    return pv;
}

}  // namespace genray
