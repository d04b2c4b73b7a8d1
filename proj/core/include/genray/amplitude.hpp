#pragma once

#include <span>

#include "genray/types.hpp"

namespace genray {

// Density of the amplitude R = sqrt(X_re^2 + X_im^2) under the isotropic
// stable signal model, evaluated through the Rayleigh scale-mixture
//   f_R(r) = r * int_0^inf f_U(u|alpha) / (2 sigma^2 u) exp(-r^2/(4 sigma^2 u)) du.
// At alpha = 2 the mixing law degenerates and the ordinary Rayleigh density
// r/(2 sigma^2) exp(-r^2/(4 sigma^2)) is returned exactly.
double amplitude_pdf(double r, const AmplitudeParams& psi, const QuadratureSpec& quad = {});

// Cdf of the amplitude law, F_R(r) = 1 - E[exp(-r^2/(4 sigma^2 U))].
double amplitude_cdf(double r, const AmplitudeParams& psi, const QuadratureSpec& quad = {});

// Log-likelihood of amplitude data under psi.
double amplitude_loglik(std::span<const double> r, const AmplitudeParams& psi,
                        const QuadratureSpec& quad = {});

}  // namespace genray
