#include "genray/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "genray/amplitude.hpp"
#include "genray/fast_sas.hpp"
#include "genray/stable_density.hpp"

namespace genray {

namespace {

constexpr double kPi = M_PI;
constexpr double kEulerGamma = 0.577215664901532860606512;
constexpr double kAlphaClipLo = 0.1;
constexpr double kAlphaClipHi = 2.0;

double clip_alpha(double a, bool& clipped) {
    if (a < kAlphaClipLo || a > kAlphaClipHi || std::isnan(a)) {
        clipped = true;
        return std::isnan(a) ? kAlphaClipLo : std::clamp(a, kAlphaClipLo, kAlphaClipHi);
    }
    return a;
}

double logit(double p) { return std::log(p / (1.0 - p)); }
double expit(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double interquartile_range(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    auto quantile = [&](double q) {
        const double pos = q * (static_cast<double>(v.size()) - 1.0);
        const std::size_t i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        return i + 1 < v.size() ? v[i] * (1.0 - frac) + v[i + 1] * frac : v[i];
    };
    return quantile(0.75) - quantile(0.25);
}

// Negative log-likelihood of |data| under the standardized density spline,
// at unconstrained coordinates (a, s).
class SasObjective {
public:
    SasObjective(std::span<const double> data, const QuadratureSpec&) {
        abs_.reserve(data.size());
        double mx = 0.0;
        for (double x : data) {
            abs_.push_back(std::fabs(x));
            mx = std::max(mx, std::fabs(x));
        }
        max_abs_ = mx;
    }

    double operator()(double a, double s) const {
        const double alpha = 2.0 * expit(a);
        const double sigma = std::exp(s);
        if (!(alpha > 0.0) || !(sigma > 0.0) || !std::isfinite(sigma))
            return std::numeric_limits<double>::infinity();
        const detail::FastSasDensity dens(std::min(alpha, 2.0), max_abs_ / sigma);
        double ll = 0.0;
        for (double x : abs_) ll += dens.log_pdf(x / sigma);
        ll -= static_cast<double>(abs_.size()) * s;
        return std::isfinite(ll) ? -ll : std::numeric_limits<double>::infinity();
    }

    double max_abs() const noexcept { return max_abs_; }

private:
    std::vector<double> abs_;
    double max_abs_;
};

struct SimplexPoint {
    double a, s, f;
};

// Nelder-Mead (standard reflection/expansion/contraction/shrink) on the
// 2-d unconstrained likelihood surface.
template <class F>
SimplexPoint nelder_mead(const F& f, double a0, double s0, const OptimizerSpec& opt,
                         bool& converged) {
    constexpr double kStep = 0.25;
    SimplexPoint p[3] = {{a0, s0, f(a0, s0)},
                         {a0 + kStep, s0, f(a0 + kStep, s0)},
                         {a0, s0 + kStep, f(a0, s0 + kStep)}};
    auto order = [&] { std::sort(p, p + 3, [](auto& x, auto& y) { return x.f < y.f; }); };
    order();

    converged = false;
    for (int it = 0; it < opt.max_iters; ++it) {
        const double da = std::max(std::fabs(p[0].a - p[1].a), std::fabs(p[0].a - p[2].a));
        const double ds = std::max(std::fabs(p[0].s - p[1].s), std::fabs(p[0].s - p[2].s));
        if (std::max(da, ds) < opt.param_tol &&
            std::fabs(p[2].f - p[0].f) < opt.func_tol * (1.0 + std::fabs(p[0].f))) {
            converged = true;
            break;
        }
        const double ca = 0.5 * (p[0].a + p[1].a);
        const double cs = 0.5 * (p[0].s + p[1].s);
        const double ra = ca + (ca - p[2].a);
        const double rs = cs + (cs - p[2].s);
        const double fr = f(ra, rs);
        if (fr < p[0].f) {
            const double ea = ca + 2.0 * (ca - p[2].a);
            const double es = cs + 2.0 * (cs - p[2].s);
            const double fe = f(ea, es);
            p[2] = fe < fr ? SimplexPoint{ea, es, fe} : SimplexPoint{ra, rs, fr};
        } else if (fr < p[1].f) {
            p[2] = {ra, rs, fr};
        } else {
            const bool outside = fr < p[2].f;
            const double xa = outside ? ca + 0.5 * (ra - ca) : ca - 0.5 * (ca - p[2].a);
            const double xs = outside ? cs + 0.5 * (rs - cs) : cs - 0.5 * (cs - p[2].s);
            const double fx = f(xa, xs);
            if (fx < std::min(fr, p[2].f)) {
                p[2] = {xa, xs, fx};
            } else {  // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    p[i].a = p[0].a + 0.5 * (p[i].a - p[0].a);
                    p[i].s = p[0].s + 0.5 * (p[i].s - p[0].s);
                    p[i].f = f(p[i].a, p[i].s);
                }
            }
        }
        order();
    }
    return p[0];
}

}  // namespace

const char* estimator_name(EstimatorMethod m) {
    switch (m) {
        case EstimatorMethod::projection_mle: return "projection_mle";
        case EstimatorMethod::lme: return "lme";
        case EstimatorMethod::chf_regression: return "chf_regression";
    }
    return "unknown";
}

SasFit mle_sas_full(std::span<const double> data, const AmplitudeParams& init,
                    const OptimizerSpec& opt, const QuadratureSpec& quad) {
    opt.validate();
    quad.validate();
    init.validate();
    if (data.empty()) throw std::invalid_argument("mle_sas: data must be nonempty");

    const SasObjective obj(data, quad);
    if (obj.max_abs() == 0.0)
        throw std::domain_error("mle_sas: degenerate data (all elements are zero)");

    const double a0 = logit(std::clamp(init.alpha, 0.02, 1.999999) / 2.0);
    const double s0 = std::log(init.sigma);
    bool converged = false;
    const SimplexPoint best = nelder_mead(obj, a0, s0, opt, converged);

    bool clipped = false;
    const double alpha_hat = clip_alpha(2.0 * expit(best.a), clipped);
    const double sigma_hat = std::exp(best.s);
    if (!converged)
        throw convergence_error("mle_sas: simplex did not converge within max_iters", alpha_hat,
                                sigma_hat, -best.f);
    return {AmplitudeParams(alpha_hat, sigma_hat), -best.f, clipped};
}

AmplitudeParams mle_sas_init(std::span<const double> data) {
    std::vector<double> v(data.begin(), data.end());
    double s0 = 0.5 * interquartile_range(v);
    if (!(s0 > 0.0)) {
        double mean_abs = 0.0;
        for (double x : v) mean_abs += std::fabs(x);
        s0 = std::max(mean_abs / static_cast<double>(v.size()), 1e-12);
    }
    try {
        for (auto& x : v) x /= s0;
        const AmplitudeParams p = chf_regression(v);
        return AmplitudeParams(p.alpha, s0 * p.sigma);
    } catch (const estimation_error&) {
        return AmplitudeParams(1.0, s0);
    }
}

std::pair<std::vector<double>, std::vector<double>> project(std::span<const double> r,
                                                            const PhaseVector& theta) {
    if (r.size() != theta.theta.size())
        throw std::domain_error("project: r and theta must have equal length");
    std::vector<double> t1(r.size()), t2(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0)) throw std::domain_error("project: amplitudes must be positive");
        t1[i] = r[i] * std::cos(theta.theta[i]);
        t2[i] = r[i] * std::sin(theta.theta[i]);
    }
    return {std::move(t1), std::move(t2)};
}

FitResult detail::projection_mle_with_gen(std::span<const double> r, int n_projections,
                                          VariateGenerator& gen, const OptimizerSpec& opt,
                                          const QuadratureSpec& quad, bool with_loglik) {
    if (r.empty()) throw std::invalid_argument("projection_mle: data must be nonempty");
    for (double ri : r)
        if (!(ri > 0.0)) throw std::domain_error("projection_mle: amplitudes must be positive");

    const auto t_start = std::chrono::steady_clock::now();
    double sum_alpha = 0.0, sum_sigma = 0.0;
    bool clipped = false;
    for (int j = 0; j < n_projections; ++j) {
        const PhaseVector theta = sample_phase(r.size(), gen);
        const auto [t1, t2] = project(r, theta);
        const SasFit fc = mle_sas_full(t1, mle_sas_init(t1), opt, quad);
        const SasFit fs = mle_sas_full(t2, mle_sas_init(t2), opt, quad);
        clipped = clipped || fc.clipped || fs.clipped;
        sum_alpha += 0.5 * (fc.params.alpha + fs.params.alpha);
        sum_sigma += 0.5 * (fc.params.sigma + fs.params.sigma);
    }
    const AmplitudeParams psi(sum_alpha / n_projections, sum_sigma / n_projections);

    FitResult out{EstimatorMethod::projection_mle, psi, std::nullopt, r.size(), 0.0, clipped};
    if (with_loglik) out.loglik = amplitude_loglik(r, psi, quad);
    out.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

FitResult projection_mle(std::span<const double> r, const ProjectionConfig& cfg,
                         const OptimizerSpec& opt, const QuadratureSpec& quad) {
    cfg.validate();
    VariateGenerator gen(cfg.rng);
    return detail::projection_mle_with_gen(r, cfg.n_projections, gen, opt, quad, true);
}

AmplitudeParams lme_from_moments(double mean_log_abs, double var_log_abs, bool* clipped) {
    bool clip = false;
    double alpha;
    const double denom = 6.0 * var_log_abs / (kPi * kPi) - 0.5;
    if (denom <= 0.0) {  // var <= pi^2/12: inversion undefined, report the Gaussian edge
        alpha = 2.0;
        clip = true;
    } else {
        alpha = 1.0 / std::sqrt(denom);
    }
    alpha = clip_alpha(alpha, clip);
    const double sigma = std::exp(mean_log_abs - kEulerGamma * (1.0 / alpha - 1.0));
    if (clipped) *clipped = clip;
    return AmplitudeParams(alpha, sigma);
}

AmplitudeParams lme(std::span<const double> t, LmeInfo* info) {
    if (t.empty()) throw std::invalid_argument("lme: data must be nonempty");
    std::size_t dropped = 0;
    double mean = 0.0;
    std::size_t n = 0;
    for (double x : t) {
        if (x == 0.0) {
            ++dropped;
            continue;
        }
        mean += std::log(std::fabs(x));
        ++n;
    }
    if (n == 0) throw std::domain_error("lme: all elements are zero");
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : t) {
        if (x == 0.0) continue;
        const double d = std::log(std::fabs(x)) - mean;
        var += d * d;
    }
    var /= static_cast<double>(n);

    bool clipped = false;
    const AmplitudeParams psi = lme_from_moments(mean, var, &clipped);
    if (info) {
        info->clipped = clipped;
        info->n_dropped = dropped;
    }
    return psi;
}

std::vector<double> default_chf_grid() {
    std::vector<double> g(10);
    for (int k = 0; k < 10; ++k) g[k] = 0.1 + 0.1 * k;
    return g;
}

AmplitudeParams chf_fit_from_modulus(std::span<const double> grid,
                                     std::span<const double> modulus, bool* clipped) {
    if (grid.size() != modulus.size())
        throw std::invalid_argument("chf_fit_from_modulus: grid/modulus length mismatch");
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double m = modulus[k];
        if (!(m > 0.0) || m >= 1.0) continue;  // invalid point, dropped
        xs.push_back(std::log(grid[k]));
        ys.push_back(std::log(-2.0 * std::log(m)));
    }
    if (xs.size() < 2)
        throw estimation_error("chf regression: fewer than 2 valid grid points");

    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw estimation_error("chf regression: degenerate grid");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    bool clip = false;
    const double alpha = clip_alpha(slope, clip);
    double sigma = std::exp((intercept - std::log(2.0)) / std::max(slope, 0.05));
    if (!std::isfinite(sigma) || sigma <= 0.0) sigma = 1.0;
    if (clipped) *clipped = clip;
    return AmplitudeParams(alpha, std::clamp(sigma, 1e-300, 1e300));
}

AmplitudeParams chf_regression(std::span<const double> t, std::span<const double> grid) {
    if (t.empty()) throw std::invalid_argument("chf_regression: data must be nonempty");
    std::vector<double> g;
    if (grid.empty()) {
        g = default_chf_grid();
        grid = g;
    }
    std::vector<double> modulus(grid.size());
    const double n = static_cast<double>(t.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double re = 0.0, im = 0.0;
        for (double x : t) {
            re += std::cos(grid[k] * x);
            im += std::sin(grid[k] * x);
        }
        modulus[k] = std::hypot(re, im) / n;
    }
    return chf_fit_from_modulus(grid, modulus);
}

FitResult fit_amplitude(std::span<const double> r, EstimatorMethod method,
                        const ProjectionConfig& cfg, const OptimizerSpec& opt,
                        const QuadratureSpec& quad) {
    cfg.validate();
    if (method == EstimatorMethod::projection_mle) return projection_mle(r, cfg, opt, quad);

    if (r.empty()) throw std::invalid_argument("fit_amplitude: data must be nonempty");
    for (double ri : r)
        if (!(ri > 0.0)) throw std::domain_error("fit_amplitude: amplitudes must be positive");

    const auto t_start = std::chrono::steady_clock::now();
    VariateGenerator gen(cfg.rng);
    const PhaseVector theta = sample_phase(r.size(), gen);
    const auto [t1, t2] = project(r, theta);

    bool clipped = false;
    AmplitudeParams p1(1.0, 1.0), p2(1.0, 1.0);
    if (method == EstimatorMethod::lme) {
        LmeInfo i1, i2;
        p1 = lme(t1, &i1);
        p2 = lme(t2, &i2);
        clipped = i1.clipped || i2.clipped;
    } else {
        p1 = chf_regression(t1);
        p2 = chf_regression(t2);
        clipped = p1.alpha == kAlphaClipLo || p1.alpha == kAlphaClipHi ||
                  p2.alpha == kAlphaClipLo || p2.alpha == kAlphaClipHi;
    }
    const AmplitudeParams psi(0.5 * (p1.alpha + p2.alpha), 0.5 * (p1.sigma + p2.sigma));
    FitResult out{method, psi, std::nullopt, r.size(), 0.0, clipped};
    out.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

}  // namespace genray
