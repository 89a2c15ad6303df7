#pragma once

#include <vector>

#include "jcsim/dynamics.hpp"
#include "jcsim/sphere.hpp"

namespace jcsim {

//=========================================================================
// Iterated-channel qubit initialization
//=========================================================================

// One initialization schedule: the channel at fixed (tau, alpha, phase)
// applied n_iterations times, each time with a fresh field in |alpha>.
struct IterationPlan {
    double tau = 0.0;
    double alpha_modulus = 0.0;
    double field_phase = 0.0;
    int n_iterations = 0;
    double tail_tol = 1e-12;
};

// States after 0..N applications; element 0 is rho0.
std::vector<QubitDensity> iterate_channel(const QubitDensity& rho0,
                                          const IterationPlan& plan);

// Image of a set of pure initial states under the iterated channel.
struct BallImage {
    std::vector<SpherePoint> initial_points;
    std::vector<BlochVector> final_blochs;
    IterationPlan params;

    enum class Axis { x, y, z };
    // 2D projection onto the plane {axis = 0}; pairs are the remaining
    // coordinates in (x,y,z) order.
    std::vector<std::pair<double, double>> projection(Axis dropped) const;
};

BallImage ball_image(const IterationPlan& plan, const SphereGrid& sampling);
BallImage ball_image(const IterationPlan& plan, const std::vector<SpherePoint>& points);

// Largest pairwise distance between final Bloch vectors (cloud diameter).
double image_diameter(const BallImage& image);

struct FixedStateEstimate {
    BlochVector centroid;
    double dispersion = 0.0;  // cloud diameter
    double min_purity = 0.0;
};

// Summary over a deterministic near-uniform sample of initial states.
FixedStateEstimate fixed_state_estimate(const IterationPlan& plan, int sample_count = 200);

// The channel at field phase phi equals R_z(phi) o channel_0 o R_z(-phi).
// Verifies this covariance point by point through the oracle path.
struct MeridianReport {
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool consistent = false;
};

MeridianReport meridian_rotation_check(const IterationPlan& plan, int sample_count = 50,
                                       double tol = 1e-7);

// Searches the amplitude (golden section on the sample-centroid polar angle,
// empirically monotone on alpha in (0,1]) and picks the field phase that
// selects the target meridian. tau is fixed at (k - 1/2) pi.
struct InitializationSearch {
    double alpha = 0.0;
    double phase = 0.0;
    BlochVector achieved;
    double residual = 0.0;  // angle between achieved and target directions, rad
    bool bracket_ok = false;
    std::vector<std::pair<double, double>> scanned;  // (alpha, centroid polar angle)
};

InitializationSearch find_initialization_params(const SpherePoint& target, int k,
                                                int n_iterations, double alpha_min = 0.02,
                                                double alpha_max = 1.0,
                                                int sample_count = 200);

}  // namespace jcsim
