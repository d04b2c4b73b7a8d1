#pragma once

#include <span>

#include "genray/types.hpp"

namespace genray {

// Integral kernel A(u) of the positive-stable cdf representation,
//   A(u) = sin((a/2)u)^(a/2) * sin((1-a/2)u)^(1-a/2) / sin(u),  a = alpha.
// Finite and positive on the open interval (0, pi).
double kanter_kernel(double u, double alpha);

// Cdf of the positive-stable mixing law with tail index alpha in (0, 2):
// U ~ S(alpha/2, 1, cos(pi alpha/4)^(2/alpha), 0).
double pas_cdf(double p, double alpha, const QuadratureSpec& quad = {});

// Density of the same law; integrates to one over (0, inf).
double pas_pdf(double u, double alpha, const QuadratureSpec& quad = {});

// Density and cdf of the zero-location symmetric stable law with
// chf exp(-sigma^alpha |t|^alpha). `law` must be a symmetric view.
double sas_pdf(double x, const StableLaw& law, const QuadratureSpec& quad = {});
double sas_cdf(double x, const StableLaw& law, const QuadratureSpec& quad = {});

// Log-likelihood of data under a symmetric zero-location stable law.
double sas_loglik(std::span<const double> data, const StableLaw& law,
                  const QuadratureSpec& quad = {});

namespace detail {

// log of the corrected positive-stable kernel A(u)^(2/(2-alpha)); this is the
// exponent factor actually paired with p^(-alpha/(2-alpha)) in the cdf.
double log_pas_kernel(double v, double alpha);

// Standardized symmetric stable pdf/cdf (sigma = 1) at xt >= 0.
double sas_pdf_std(double xt, double alpha, const QuadratureSpec& quad);
double sas_cdf_std(double xt, double alpha, const QuadratureSpec& quad);

// Threshold below 2 at which the Gaussian closed form takes over.
inline constexpr double kAlphaGaussianCutoff = 2.0 - 1e-9;
// Half-width of the band around alpha = 1 that is evaluated by direct
// Fourier-cosine quadrature instead of the exponent representation.
inline constexpr double kAlphaOneBand = 5e-3;

}  // namespace detail

}  // namespace genray
