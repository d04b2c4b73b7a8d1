#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "genray/types.hpp"

namespace genray {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

namespace detail {

// 15-point Gauss-Kronrod pair (QUADPACK dqk15 abscissae/weights).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kGk15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double k15 = kGk15Weights[7] * fc;
    double g7 = kG7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGk15Nodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        k15 += kGk15Weights[i] * fsum;
        if (i % 2 == 1) g7 += kG7Weights[i / 2] * fsum;
    }
    value = k15 * h;
    const double diff = std::fabs(k15 - g7) * std::fabs(h);
    // QUADPACK-style sharpening of the raw embedded-rule difference.
    error = (diff > 0.0) ? std::min(diff, std::pow(200.0 * diff, 1.5)) : 0.0;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. Splits the segment
// with the largest error estimate until the tolerance is met or the
// subdivision budget runs out.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec) {
    struct Segment {
        double a, b, value, error;
    };
    std::vector<Segment> segs;
    segs.reserve(64);

    double v, e;
    detail::gk15(f, a, b, v, e);
    segs.push_back({a, b, v, e});

    QuadratureResult out;
    out.subdivisions = 1;
    for (;;) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
        if (err <= tol) {
            out.value = total;
            out.error = err;
            out.converged = true;
            return out;
        }
        if (out.subdivisions >= spec.max_subdivisions) {
            out.value = total;
            out.error = err;
            out.converged = false;
            return out;
        }
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (!(mid > s.a) || !(mid < s.b)) {
            // Interval no longer splittable at machine precision.
            out.value = total;
            out.error = err;
            out.converged = err <= std::max(tol, 1e-14 * std::fabs(total));
            return out;
        }
        Segment left{s.a, mid, 0, 0}, right{mid, s.b, 0, 0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        segs[worst] = left;
        segs.push_back(right);
        ++out.subdivisions;
    }
}

// As integrate_adaptive, but throws accuracy_error on non-convergence.
template <class F>
double integrate_or_throw(const F& f, double a, double b, const QuadratureSpec& spec,
                          const char* what) {
    QuadratureResult r = integrate_adaptive(f, a, b, spec);
    if (!r.converged)
        throw accuracy_error(std::string(what) + ": quadrature did not converge within " +
                                 std::to_string(spec.max_subdivisions) + " subdivisions",
                             r.error);
    return r.value;
}

// Integral of f over (0, inf) via the substitution u = tan(s), s in (0, pi/2).
template <class F>
double integrate_half_line(const F& f, const QuadratureSpec& spec, const char* what) {
    auto g = [&f](double s) {
        const double u = std::tan(s);
        const double c = std::cos(s);
        return f(u) / (c * c);
    };
    return integrate_or_throw(g, 0.0, M_PI_2, spec, what);
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
// iteration on the Legendre recurrence.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n) : x(n), w(n) {
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::fabs(dz) < 1e-15) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussLegendre& gauss_legendre_24() {
    static const GaussLegendre gl(24);
    return gl;
}

// Fixed-order Gauss-Legendre on [a, b]; no error estimate.
template <class F>
double gl24(const F& f, double a, double b) {
    const GaussLegendre& g = gauss_legendre_24();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 24; ++i) s += g.w[i] * f(c + h * g.x[i]);
    return s * h;
}

}  // namespace detail

}  // namespace genray
