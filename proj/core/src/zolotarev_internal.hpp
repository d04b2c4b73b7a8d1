#pragma once

// Shared internals for the exponent-integral representation of the symmetric
// stable density. Not installed; used by stable_density.cpp and fast_sas.cpp.

#include <cmath>
#include <limits>

namespace genray::detail {

inline double log_cos_safe(double th) {
    // cos(th) loses relative precision near pi/2; route through sin there.
    return th > 0.7853981633974483 ? std::log(std::sin(M_PI_2 - th)) : std::log(std::cos(th));
}

// log V(theta) for the symmetric-stable exponent representation,
//   V = cos(th)^(p-1) * sin(alpha th)^(-p) * cos((alpha-1) th),  p = alpha/(alpha-1).
inline double log_v_sym(double th, double alpha, double p) {
    return (p - 1.0) * log_cos_safe(th) - p * std::log(std::sin(alpha * th)) +
           std::log(std::cos((alpha - 1.0) * th));
}

// w * exp(-w) evaluated from log w, with overflow guard.
inline double peak_integrand(double lw) {
    if (lw > 700.0) return 0.0;
    return std::exp(lw - std::exp(lw));
}

// Bisect for log_v(th) == target on (lo, hi); `increasing` gives the
// orientation of log_v; `iters` caps the refinement. NaN when no sign change.
template <class LogV>
double bisect_log_v(const LogV& log_v, double lo, double hi, double target, bool increasing,
                    int iters = 200) {
    const double flo = log_v(lo) - target;
    const double fhi = log_v(hi) - target;
    if (flo * fhi > 0.0 || std::isnan(flo) || std::isnan(fhi))
        return std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = log_v(mid) - target;
        if ((fm > 0.0) == increasing)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Convergent/asymptotic series for the standardized symmetric stable pdf and
// cdf. Each returns false when the requested tolerance cannot be certified.

inline bool sas_series_small(double xt, double alpha, double tol, bool want_cdf, double& out) {
    // f(x)  = (1/(pi a)) sum (-1)^k Gamma((2k+1)/a) x^(2k) / (2k)!
    // F(x)  = 1/2 + (1/(pi a)) sum (-1)^k Gamma((2k+1)/a) x^(2k+1) / ((2k)! (2k+1))
    constexpr double kPi = M_PI;
    if (xt == 0.0) {
        out = want_cdf ? 0.0 : std::exp(std::lgamma(1.0 / alpha)) / (kPi * alpha);
        return true;
    }
    const double lx = std::log(xt);
    double sum = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 80; ++k) {
        double lmag = std::lgamma((2.0 * k + 1.0) / alpha) - std::lgamma(2.0 * k + 1.0);
        lmag += want_cdf ? (2.0 * k + 1.0) * lx - std::log(2.0 * k + 1.0) : 2.0 * k * lx;
        const double mag = std::exp(lmag);
        if (k > 2 && mag > prev_mag) return false;  // divergence onset (alpha < 1)
        sum += (k % 2 == 0) ? mag : -mag;
        if (k >= 1 && mag <= tol * std::max(1e-300, std::fabs(sum))) {
            out = sum / (kPi * alpha);
            return true;
        }
        prev_mag = mag;
    }
    return false;
}

inline bool sas_series_tail(double xt, double alpha, double tol, bool want_cdf, double& out) {
    // f(x)    = (1/pi) sum_{k>=1} (-1)^(k+1) Gamma(a k + 1)/k! sin(k pi a/2) x^(-a k - 1)
    // 1-F(x)  = (1/pi) sum_{k>=1} (-1)^(k+1) Gamma(a k + 1)/k! sin(k pi a/2) x^(-a k)/(a k)
    constexpr double kPi = M_PI;
    const double lx = std::log(xt);
    double sum = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    double first_mag = 0.0;
    for (int k = 1; k <= 60; ++k) {
        double lmag = std::lgamma(alpha * k + 1.0) - std::lgamma(k + 1.0) - (alpha * k) * lx;
        lmag -= want_cdf ? std::log(alpha * k) : lx;
        const double mag = std::exp(lmag);  // |sin| <= 1 bound, drives termination
        if (k == 1) first_mag = mag;
        if (mag > prev_mag) return false;  // asymptotic regime exhausted before tol
        const double s = std::sin(0.5 * k * kPi * alpha);
        sum += (k % 2 == 1 ? 1.0 : -1.0) * s * mag;
        if (mag <= tol * std::max(first_mag * 1e-3, std::fabs(sum))) {
            out = sum / kPi;
            return true;
        }
        prev_mag = mag;
    }
    return false;
}

}  // namespace genray::detail
