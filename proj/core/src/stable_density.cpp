#include "genray/stable_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "genray/quadrature.hpp"
#include "zolotarev_internal.hpp"

namespace genray {

namespace {

constexpr double kPi = M_PI;

// ---------------------------------------------------------------------------
// Direct Fourier route, used in the band around alpha = 1 where the exponent
// representation degenerates. Integrates panel-by-panel between the
// trigonometric zeros; panels are smooth so one Kronrod application each
// suffices at the band's accuracy needs.

double sas_fourier_pdf(double xt, double alpha, const QuadratureSpec& spec) {
    const double T = std::pow(44.0, 1.0 / alpha);  // exp(-T^alpha) ~ 8e-20
    auto f = [&](double t) { return std::cos(t * xt) * std::exp(-std::pow(t, alpha)); };
    if (xt < 1e-12) {
        auto f0 = [&](double t) { return std::exp(-std::pow(t, alpha)); };
        return integrate_or_throw(f0, 0.0, T, spec, "sas_pdf") / kPi;
    }
    double sum = 0.0;
    double a = 0.0;
    for (int j = 0;; ++j) {
        double b = (j + 0.5) * kPi / xt;
        bool last = b >= T;
        if (last) b = T;
        double v, e;
        detail::gk15(f, a, b, v, e);
        sum += v;
        if (last) break;
        a = b;
    }
    return sum / kPi;
}

double sas_fourier_cdf(double xt, double alpha, const QuadratureSpec& spec) {
    const double T = std::pow(44.0, 1.0 / alpha);
    auto f = [&](double t) { return std::sin(t * xt) / t * std::exp(-std::pow(t, alpha)); };
    double sum = 0.0;
    double a = 0.0;
    for (int j = 1;; ++j) {
        double b = j * kPi / xt;
        bool last = b >= T;
        if (last) b = T;
        if (j == 1) {
            sum += integrate_or_throw(f, 0.0, b, spec, "sas_cdf");
        } else {
            double v, e;
            detail::gk15(f, a, b, v, e);
            sum += v;
        }
        if (last) break;
        a = b;
    }
    return 0.5 + sum / kPi;
}

// ---------------------------------------------------------------------------
// Exponent (integral) representation for general alpha != 1, adaptive
// quadrature split at the peak of the transformed integrand.

double zolotarev_pdf(double xt, double alpha, const QuadratureSpec& spec) {
    const double p = alpha / (alpha - 1.0);
    const double log_u = p * std::log(xt);
    auto log_v = [alpha, p](double th) { return detail::log_v_sym(th, alpha, p); };
    auto h = [&](double th) { return detail::peak_integrand(log_u + log_v(th)); };

    const double lo = 1e-14, hi = M_PI_2 - 1e-14;
    const bool increasing = alpha < 1.0;
    const double th_star = detail::bisect_log_v(log_v, lo, hi, -log_u, increasing);

    QuadratureSpec half = spec;
    half.abs_tol = 0.5 * spec.abs_tol;
    half.rel_tol = 0.5 * spec.rel_tol;
    double integral;
    if (std::isnan(th_star)) {
        integral = integrate_or_throw(h, 0.0, M_PI_2, spec, "sas_pdf");
    } else {
        integral = integrate_or_throw(h, 0.0, th_star, half, "sas_pdf") +
                   integrate_or_throw(h, th_star, M_PI_2, half, "sas_pdf");
    }
    return alpha / (kPi * std::fabs(alpha - 1.0) * xt) * integral;
}

double zolotarev_cdf(double xt, double alpha, const QuadratureSpec& spec) {
    const double p = alpha / (alpha - 1.0);
    const double log_u = p * std::log(xt);
    auto log_v = [alpha, p](double th) { return detail::log_v_sym(th, alpha, p); };
    auto h = [&](double th) {
        const double lw = log_u + log_v(th);
        return lw > 700.0 ? 0.0 : std::exp(-std::exp(lw));
    };

    const double lo = 1e-14, hi = M_PI_2 - 1e-14;
    const bool increasing = alpha < 1.0;
    const double th_star = detail::bisect_log_v(log_v, lo, hi, -log_u, increasing);

    QuadratureSpec half = spec;
    half.abs_tol = 0.5 * spec.abs_tol;
    half.rel_tol = 0.5 * spec.rel_tol;
    double integral;
    if (std::isnan(th_star)) {
        integral = integrate_or_throw(h, 0.0, M_PI_2, spec, "sas_cdf");
    } else {
        integral = integrate_or_throw(h, 0.0, th_star, half, "sas_cdf") +
                   integrate_or_throw(h, th_star, M_PI_2, half, "sas_cdf");
    }
    return alpha > 1.0 ? 1.0 - integral / kPi : 0.5 + integral / kPi;
}

}  // namespace

// ---------------------------------------------------------------------------

double kanter_kernel(double u, double alpha) {
    if (!(u > 0.0) || !(u < kPi))
        throw std::domain_error("kanter_kernel: u must lie in (0, pi)");
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("kanter_kernel: alpha must lie in (0, 2)");
    const double a = 0.5 * alpha;
    return std::exp(a * std::log(std::sin(a * u)) + (1.0 - a) * std::log(std::sin((1.0 - a) * u)) -
                    std::log(std::sin(u)));
}

double detail::log_pas_kernel(double v, double alpha) {
    const double a = 0.5 * alpha;
    return (alpha * std::log(std::sin(a * v)) + (2.0 - alpha) * std::log(std::sin((1.0 - a) * v)) -
            2.0 * std::log(std::sin(v))) /
           (2.0 - alpha);
}

double pas_cdf(double p, double alpha, const QuadratureSpec& quad) {
    quad.validate();
    if (!(p > 0.0)) throw std::domain_error("pas_cdf: p must be positive");
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("pas_cdf: alpha must lie in (0, 2)");
    if (std::isinf(p)) return 1.0;
    const double log_pm = -alpha / (2.0 - alpha) * std::log(p);
    auto f = [&](double v) {
        const double lw = log_pm + detail::log_pas_kernel(v, alpha);
        return lw > 700.0 ? 0.0 : std::exp(-std::exp(lw));
    };
    const double val = integrate_or_throw(f, 0.0, kPi, quad, "pas_cdf") / kPi;
    return std::clamp(val, 0.0, 1.0);
}

double pas_pdf(double u, double alpha, const QuadratureSpec& quad) {
    quad.validate();
    if (!(u > 0.0)) throw std::domain_error("pas_pdf: u must be positive");
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("pas_pdf: alpha must lie in (0, 2)");
    if (std::isinf(u)) return 0.0;
    const double a = alpha / (2.0 - alpha);
    const double la = -a * std::log(u);
    auto f = [&](double v) { return detail::peak_integrand(la + detail::log_pas_kernel(v, alpha)); };
    const double integral = integrate_or_throw(f, 0.0, kPi, quad, "pas_pdf");
    return a / (kPi * u) * integral;
}

double detail::sas_pdf_std(double xt, double alpha, const QuadratureSpec& quad) {
    xt = std::fabs(xt);
    if (alpha >= kAlphaGaussianCutoff)  // N(0, 2) closed form
        return std::exp(-0.25 * xt * xt) / (2.0 * std::sqrt(kPi));
    if (alpha == 1.0) return 1.0 / (kPi * (1.0 + xt * xt));

    const double tol = std::min(quad.rel_tol, 1e-8);
    double out;
    if (std::fabs(alpha - 1.0) < kAlphaOneBand) {
        if (xt < 0.3 && sas_series_small(xt, alpha, tol, false, out)) return out;
        if (xt > 25.0 && sas_series_tail(xt, alpha, tol, false, out)) return out;
        return sas_fourier_pdf(xt, alpha, quad);
    }
    if (alpha > 1.0 && xt < 0.3 && sas_series_small(xt, alpha, tol, false, out)) return out;
    if (xt > 8.0 && sas_series_tail(xt, alpha, tol, false, out)) return out;
    if (alpha < 1.0 && xt < 1e-10 && sas_series_small(0.0, alpha, tol, false, out)) return out;
    return zolotarev_pdf(xt, alpha, quad);
}

double detail::sas_cdf_std(double xt, double alpha, const QuadratureSpec& quad) {
    // caller handles the sign; xt >= 0 here
    if (alpha >= kAlphaGaussianCutoff) return 0.5 * std::erfc(-xt / 2.0);
    if (alpha == 1.0) return 0.5 + std::atan(xt) / kPi;

    const double tol = std::min(quad.rel_tol, 1e-8);
    double out;
    if (xt == 0.0) return 0.5;
    if (std::fabs(alpha - 1.0) < kAlphaOneBand) {
        if (xt < 0.3 && sas_series_small(xt, alpha, tol, true, out)) return 0.5 + out;
        if (xt > 25.0 && sas_series_tail(xt, alpha, tol, true, out)) return 1.0 - out;
        return sas_fourier_cdf(xt, alpha, quad);
    }
    if (alpha > 1.0 && xt < 0.3 && sas_series_small(xt, alpha, tol, true, out)) return 0.5 + out;
    if (xt > 8.0 && sas_series_tail(xt, alpha, tol, true, out)) return 1.0 - out;
    return zolotarev_cdf(xt, alpha, quad);
}

double sas_pdf(double x, const StableLaw& law, const QuadratureSpec& quad) {
    quad.validate();
    if (!law.is_symmetric())
        throw std::invalid_argument("sas_pdf: law must be a symmetric zero-location view");
    return detail::sas_pdf_std(std::fabs(x) / law.sigma(), law.alpha(), quad) / law.sigma();
}

double sas_cdf(double x, const StableLaw& law, const QuadratureSpec& quad) {
    quad.validate();
    if (!law.is_symmetric())
        throw std::invalid_argument("sas_cdf: law must be a symmetric zero-location view");
    const double xt = x / law.sigma();
    const double c = detail::sas_cdf_std(std::fabs(xt), law.alpha(), quad);
    const double r = xt >= 0.0 ? c : 1.0 - c;
    return std::clamp(r, 0.0, 1.0);
}

double sas_loglik(std::span<const double> data, const StableLaw& law, const QuadratureSpec& quad) {
    if (data.empty()) throw std::invalid_argument("sas_loglik: data must be nonempty");
    if (!law.is_symmetric())
        throw std::invalid_argument("sas_loglik: law must be a symmetric zero-location view");
    double ll = 0.0;
    for (double x : data) ll += std::log(sas_pdf(x, law, quad));
    return ll;
}

}  // namespace genray
