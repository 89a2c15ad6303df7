#pragma once

#include "jcsim/core.hpp"

namespace jcsim {

//=========================================================================
// Analytic limits of the reduced dynamics
//=========================================================================

// Linear expansion of a Fock-ladder frequency omega(n) around the mean
// photon number a^2: omega(n) ~ omega0 + beta (n - a^2).
struct FrequencyExpansion {
    double omega0 = 0.0;  // rad per unit tau
    double beta = 0.0;    // rad per unit tau per photon

    // omega(n) = 2 sqrt(n): omega0 = 2a, beta = 1/a.
    static FrequencyExpansion rabi(double alpha);
    // omega(n) = sqrt(n+1) + sqrt(n): omega0 ~ 2a, beta ~ 1/a.
    static FrequencyExpansion fast(double alpha);
    // omega(n) = sqrt(n+1) - sqrt(n): omega0 ~ 1/(2a), beta ~ -1/(4a^3).
    static FrequencyExpansion slow(double alpha);
};

// k-th separability time tau = (2k-1) pi a, where the atom-field state
// approaches a product state in the large-amplitude limit.
double attractor_time(int k, double alpha);

struct AttractorSpec {
    int k = 1;
    double big_omega = 0.0;  // rotation angle 2 tau a at the attractor time

    static AttractorSpec at(int k, double alpha);
};

// alpha -> 0 limit of the reduced state (vacuum oscillations):
//   [ |C_e|^2 sin^2(tau) + |C_g|^2     C_g C_e* cos(tau)  ]
//   [ C_g* C_e cos(tau)                |C_e|^2 cos^2(tau) ]
QubitDensity vacuum_limit_density(const PureQubit& q, double tau);

// Gaussian collapse of a Poisson-weighted cosine sum:
//   sum_n P_n cos(omega(n) tau) ~ cos(omega0 tau) exp(-beta^2 a^2 tau^2 / 2),
// valid for tau << 1/|beta| (caller's responsibility).
double damped_cosine_sum(const CoherentField& field, const FrequencyExpansion& fx,
                         double tau);

// Large-amplitude closed form: rotation of the initial Bloch vector about x
// by 2 tau a, with Gaussian envelopes exp(-tau^2/2) on the fast components
// and exp(-tau^2/(32 a^4)) on the slow ones. Not exactly trace-contracting;
// callers probe validity (tau << a intended).
BlochVector gaussian_bloch(const PureQubit& q, double alpha, double tau);

// Middle rung of the large-amplitude derivation: exact Poisson summation of
// the summands after replacing the ladder prefactors sqrt(n/(n+1)),
// a/sqrt(n+1), sqrt(n)/a by 1, but before the Gaussian-envelope step.
BlochVector intermediate_bloch_sums(const PureQubit& q, const CoherentField& field,
                                    double tau);

}  // namespace jcsim
