#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genray {

// Raised when a quadrature or series evaluation cannot reach the requested
// tolerance; carries the achieved error estimate.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error_(achieved) {}
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// Raised when an optimizer exhausts its iteration budget; carries the best
// point seen so far.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double alpha, double sigma, double loglik)
        : std::runtime_error(what), alpha_(alpha), sigma_(sigma), loglik_(loglik) {}
    double best_alpha() const noexcept { return alpha_; }
    double best_sigma() const noexcept { return sigma_; }
    double best_loglik() const noexcept { return loglik_; }

private:
    double alpha_;
    double sigma_;
    double loglik_;
};

/// Four-parameter stable law: index alpha in (0,2], skewness beta in [-1,1],
/// scale sigma > 0, location mu.
class StableLaw {
public:
    StableLaw(double alpha, double beta, double sigma, double mu);

    // Symmetric member (beta = 0, mu = 0).
    static StableLaw symmetric(double alpha, double sigma);

    // Positive member for tail index a in (0,2): S(a/2, 1, cos(pi a/4)^(2/a), 0),
    // supported on the positive half-line.
    static StableLaw positive(double a);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double sigma() const noexcept { return sigma_; }
    double mu() const noexcept { return mu_; }

    bool is_symmetric() const noexcept { return beta_ == 0.0 && mu_ == 0.0; }

private:
    double alpha_;
    double beta_;
    double sigma_;
    double mu_;
};

/// Amplitude distribution parameter vector (alpha, sigma).
struct AmplitudeParams {
    double alpha;
    double sigma;

    AmplitudeParams(double a, double s) : alpha(a), sigma(s) { validate(); }
    void validate() const;
};

/// Controls for adaptive quadrature.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 200;

    void validate() const;
};

/// Controls for the likelihood optimizer.
struct OptimizerSpec {
    double param_tol = 1e-6;
    double func_tol = 1e-8;
    int max_iters = 500;

    void validate() const;
};

}  // namespace genray
