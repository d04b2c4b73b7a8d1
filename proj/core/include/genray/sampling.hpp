#pragma once

#include <vector>

#include "genray/rng.hpp"
#include "genray/types.hpp"

namespace genray {

/// Vector of i.i.d. phases, each in [0, 2*pi).
struct PhaseVector {
    std::vector<double> theta;
};

// Exact stable variates in the convention of the library's chf: the
// Chambers-Mallows-Stuck transform, with the totally-skewed alpha < 1 branch
// rewritten in its one-sided (Kanter) form to avoid cancellation.
std::vector<double> sample_stable(std::size_t n, const StableLaw& law, VariateGenerator& gen);

// Positive-stable mixing variates U ~ S(alpha/2, 1, cos(pi alpha/4)^(2/alpha), 0)
// for tail index alpha in (0, 2); strictly positive.
std::vector<double> sample_pas(std::size_t n, double alpha, VariateGenerator& gen);

// Standard Rayleigh with pdf 2 w exp(-w^2), drawn as sqrt(-log V).
std::vector<double> sample_rayleigh_std(std::size_t n, VariateGenerator& gen);

// Amplitude variates R = 2 sigma sqrt(U) W; exact Rayleigh when alpha = 2.
std::vector<double> sample_amplitude(std::size_t n, const AmplitudeParams& psi,
                                     VariateGenerator& gen);

// Uniform phases on [0, 2*pi).
PhaseVector sample_phase(std::size_t n, VariateGenerator& gen);

}  // namespace genray
