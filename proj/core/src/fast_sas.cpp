#include "genray/fast_sas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genray/quadrature.hpp"
#include "genray/stable_density.hpp"
#include "zolotarev_internal.hpp"

namespace genray::detail {

namespace {

constexpr double kPi = M_PI;
constexpr double kLwWindow = 36.0;  // integrand support: |log w| <= 36 around the peak

}  // namespace

double FastSasDensity::pdf_direct(double xt, double alpha) {
    if (alpha >= kAlphaGaussianCutoff) return std::exp(-0.25 * xt * xt) / (2.0 * std::sqrt(kPi));
    if (alpha == 1.0) return 1.0 / (kPi * (1.0 + xt * xt));

    double out;
    if (alpha > 1.0 && xt < 0.25 && sas_series_small(xt, alpha, 1e-9, false, out)) return out;
    if (alpha < 1.0 && xt < 1e-8 && sas_series_small(0.0, alpha, 1e-9, false, out)) return out;

    const double p = alpha / (alpha - 1.0);
    const double log_u = p * std::log(xt);
    auto log_v = [alpha, p](double th) { return log_v_sym(th, alpha, p); };
    auto h = [&](double th) { return peak_integrand(log_u + log_v(th)); };

    const double lo = 1e-14, hi = M_PI_2 - 1e-14;
    const bool increasing = alpha < 1.0;
    double th_mid = bisect_log_v(log_v, lo, hi, -log_u, increasing, 44);
    if (std::isnan(th_mid)) th_mid = 0.5 * (lo + hi);

    // Window edges where log w reaches +/- kLwWindow; outside them the
    // integrand is below ~2e-16 of its peak.
    double th_hi_w, th_lo_w;
    if (increasing) {
        th_lo_w = bisect_log_v(log_v, lo, th_mid, -log_u - kLwWindow, true, 30);
        th_hi_w = bisect_log_v(log_v, th_mid, hi, -log_u + kLwWindow, true, 30);
        if (std::isnan(th_lo_w)) th_lo_w = lo;
        if (std::isnan(th_hi_w)) th_hi_w = hi;
    } else {
        th_lo_w = bisect_log_v(log_v, lo, th_mid, -log_u + kLwWindow, false, 30);
        th_hi_w = bisect_log_v(log_v, th_mid, hi, -log_u - kLwWindow, false, 30);
        if (std::isnan(th_lo_w)) th_lo_w = lo;
        if (std::isnan(th_hi_w)) th_hi_w = hi;
    }

    const double integral = gl24(h, th_lo_w, th_mid) + gl24(h, th_mid, th_hi_w);
    return alpha / (kPi * std::fabs(alpha - 1.0) * xt) * std::max(integral, 0.0);
}

FastSasDensity::FastSasDensity(double alpha, double x_max) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::invalid_argument("FastSasDensity: alpha must lie in (0, 2]");
    if (alpha >= kAlphaGaussianCutoff) {
        gaussian_ = true;
        return;
    }
    if (alpha == 1.0) {
        cauchy_ = true;
        return;
    }

    z_max_ = std::asinh(std::max(x_max, 1.0) * 1.0001);
    // Knot density follows the covered range so wide-tailed data does not
    // starve the shoulder region of resolution.
    const int n = std::clamp(static_cast<int>(8.0 * z_max_) + 16, 32, 72);
    dz_ = z_max_ / (n - 1);
    y_.resize(n);
    for (int i = 0; i < n; ++i) y_[i] = std::log(pdf_direct(std::sinh(i * dz_), alpha));

    // C2 cubic spline on the uniform z-grid: clamped left end (even function
    // of x means d(log f)/dz = 0 at z = 0), natural right end.
    std::vector<double> a(n), b(n), c(n), d(n);
    b[0] = 1.0;  // clamped: m_0 = 0
    c[0] = 0.0;
    d[0] = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        a[i] = 1.0;
        b[i] = 4.0;
        c[i] = 1.0;
        d[i] = 3.0 * (y_[i + 1] - y_[i - 1]) / dz_;
    }
    a[n - 1] = 1.0;
    b[n - 1] = 2.0;
    d[n - 1] = 3.0 * (y_[n - 1] - y_[n - 2]) / dz_;
    // Thomas solve
    for (int i = 1; i < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        d[i] -= w * d[i - 1];
    }
    m_.resize(n);
    m_[n - 1] = d[n - 1] / b[n - 1];
    for (int i = n - 2; i >= 0; --i) m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];

    // First-order tail asymptote beyond x_max: f ~ Gamma(a+1) sin(pi a/2)/pi * x^-(a+1)
    tail_log_c_ =
        std::lgamma(alpha + 1.0) + std::log(std::max(std::sin(0.5 * kPi * alpha), 1e-300)) -
        std::log(kPi);
}

double FastSasDensity::log_pdf(double abs_x) const {
    if (gaussian_)
        return -0.25 * abs_x * abs_x - std::log(2.0 * std::sqrt(kPi));
    if (cauchy_)
        return -std::log(kPi * (1.0 + abs_x * abs_x));
    const double z = std::asinh(abs_x);
    if (z >= z_max_) return tail_log_c_ - (alpha_ + 1.0) * std::log(abs_x);
    const int i = std::min(static_cast<int>(z / dz_), static_cast<int>(y_.size()) - 2);
    const double t = (z - i * dz_) / dz_;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * y_[i] + h10 * dz_ * m_[i] + h01 * y_[i + 1] + h11 * dz_ * m_[i + 1];
}

}  // namespace genray::detail
