#pragma once

#include <string>
#include <vector>

#include "jcsim/dynamics.hpp"
#include "jcsim/sphere.hpp"

namespace jcsim {

// Retrodiction ceiling for a single measurement on a uniformly distributed
// qubit, 1 - 1/(2 ln 2) rounded as conventionally quoted.
inline constexpr double kMaxAvgInfoGain = 0.2787;

//=========================================================================
// Conditional outcome statistics
//=========================================================================

// Photon-count statistics conditioned on the initial atomic state:
//   P(n|theta,phi) = P_n [ cos^2(theta/2) f1 + sin^2(theta/2) f2
//                          - sin(theta) sin(phi) f3 ].
// The sign of the f3 term is fixed by the |psi(theta,phi)> convention in
// SpherePoint and is regression-locked against the Kraus computation.
struct ConditionalWeights {
    double f1 = 1.0;  // cos^2(t rn) + (a^2/(n+1)) sin^2(t rn1)
    double f2 = 1.0;  // cos^2(t rn1) + (n/a^2) sin^2(t rn)
    double f3 = 0.0;  // [ (a/rn1) sin(2 t rn1) - (rn/a) sin(2 t rn) ] / 2
};

ConditionalWeights conditional_weights(int n, const CoherentField& field,
                                       const EvolutionParams& params);

// <psi(p)| K_n^dag K_n |psi(p)>, computed directly from the Kraus matrices.
double conditional_prob(int n, const KrausSet& ks, const SpherePoint& p);
double conditional_prob(int n, const CoherentField& field, const EvolutionParams& params,
                        const SpherePoint& p);

// Outcome probability under the uniform prior 1/(4 pi):
// P(n) = P_n (f1 + f2) / 2.
double outcome_prob(int n, const CoherentField& field, const EvolutionParams& params);

// Bayes posterior density (per steradian) at the grid nodes.
// Throws OutcomeImpossible when P(n) is numerically zero.
std::vector<double> posterior(int n, const CoherentField& field,
                              const EvolutionParams& params, const SphereGrid& grid);

//=========================================================================
// Average information gain
//=========================================================================

struct AigOptions {
    bool convergence_guard = true;  // recompute on a doubled grid and compare
    double guard_tol = 1e-6;
    int guard_levels = 2;  // outcome range extension past the field n_max
};

// Mean mutual information (bits) between the photon-count outcome and the
// initial state angles under the uniform prior,
//   I = -int P log2 P dOmega + sum_n P(n) int P(.|n) log2 P(.|n) dOmega,
// with densities per steradian and 0 log 0 = 0.
double average_information_gain(const CoherentField& field, const EvolutionParams& params,
                                const SphereGrid& grid, const AigOptions& opt = {});

enum class RadiusMethod {
    symmetry_shortcut,  // state-dependent terms average to zero; evaluate the
                        // closed-form sums at r0 = 0
    quadrature,         // average bloch_evolve over the grid
};

// Euclidean length of the sphere-averaged final Bloch vector.
double average_state_radius(const CoherentField& field, const EvolutionParams& params,
                            const SphereGrid& grid,
                            RadiusMethod method = RadiusMethod::symmetry_shortcut);

//=========================================================================
// Parameter-plane surfaces
//=========================================================================

struct Surface {
    std::vector<double> tau_axis;
    std::vector<double> alpha_axis;
    std::vector<double> values;  // row-major, values[i_tau * n_alpha + i_alpha]

    double at(size_t i_tau, size_t i_alpha) const {
        return values[i_tau * alpha_axis.size() + i_alpha];
    }
};

using AIGMap = Surface;

struct SurfaceFailure {
    double tau = 0.0;
    double alpha = 0.0;
    std::string message;
};

struct SurfaceOptions {
    int workers = 0;  // 0 = hardware concurrency
    bool convergence_guard = false;
    double tail_tol = 1e-12;
};

// If failures == nullptr, the first per-point error is rethrown with the
// (tau, alpha) coordinates attached; otherwise failed points become NaN and
// are recorded.
Surface aig_surface(const std::vector<double>& tau_axis,
                    const std::vector<double>& alpha_axis, const SphereGrid& grid,
                    const SurfaceOptions& opt = {},
                    std::vector<SurfaceFailure>* failures = nullptr);

struct GapPoint {
    double i_avg = 0.0;
    double r_avg_sq = 0.0;
    double diff = 0.0;  // i_avg - kMaxAvgInfoGain * r_avg_sq
};

GapPoint info_radius_gap_point(double tau, double alpha, const SphereGrid& grid,
                               double tail_tol = 1e-12, bool guard = false);

struct GapSurfaces {
    Surface i_avg;
    Surface r_avg_sq;
    Surface diff;
};

GapSurfaces aig_gap_surfaces(const std::vector<double>& tau_axis,
                             const std::vector<double>& alpha_axis, const SphereGrid& grid,
                             const SurfaceOptions& opt = {},
                             std::vector<SurfaceFailure>* failures = nullptr);

// Difference surface alone.
Surface aig_minus_rsq_surface(const std::vector<double>& tau_axis,
                              const std::vector<double>& alpha_axis, const SphereGrid& grid,
                              const SurfaceOptions& opt = {},
                              std::vector<SurfaceFailure>* failures = nullptr);

}  // namespace jcsim
