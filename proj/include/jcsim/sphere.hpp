#pragma once

#include <vector>

#include "jcsim/core.hpp"

namespace jcsim {

// Point on the Bloch sphere; maps to the pure state
// |psi(theta,phi)> = cos(theta/2)|g> + e^{i phi} sin(theta/2)|e>.
struct SpherePoint {
    double theta = 0.0;  // polar angle from +z (= |g>), [0, pi]
    double phi = 0.0;    // azimuth, [0, 2pi)

    PureQubit to_qubit() const;
    BlochVector to_bloch() const;
};

SpherePoint sphere_point(double theta, double phi);  // validates and wraps phi

// Quadrature nodes and steradian weights over the sphere.
struct SphereGrid {
    std::vector<SpherePoint> nodes;
    std::vector<double> weights;
    int exact_degree = 0;  // spherical polynomials integrated exactly up to this degree
    int theta_nodes = 0;   // product-rule factors; 0 for non-product grids
    int phi_nodes = 0;

    // Gauss-Legendre in cos(theta) x uniform periodic rule in phi.
    // Exact for spherical polynomials of degree min(2*n_theta - 1, n_phi - 1).
    static SphereGrid gauss_legendre(int n_theta, int n_phi);

    // Deterministic near-uniform sampling (golden-angle spiral), equal weights.
    static SphereGrid fibonacci(int count);

    static SphereGrid from_points(std::vector<SpherePoint> nodes,
                                  std::vector<double> weights, int exact_degree = 0);

    // Same rule with both product factors doubled (convergence guard).
    SphereGrid doubled() const;

    size_t size() const { return nodes.size(); }
    double total_weight() const;
};

}  // namespace jcsim
