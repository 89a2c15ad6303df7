#include "jcsim/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace jcsim {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(static_cast<size_t>(n));
    w.resize(static_cast<size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess.
        double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            pp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<size_t>(i)] = -z;
        x[static_cast<size_t>(n - 1 - i)] = z;
        const double weight = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<size_t>(i)] = weight;
        w[static_cast<size_t>(n - 1 - i)] = weight;
    }
}

}  // namespace

PureQubit SpherePoint::to_qubit() const {
    return {std::cos(0.5 * theta),
            std::exp(kImag * phi) * std::sin(0.5 * theta)};
}

BlochVector SpherePoint::to_bloch() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

SpherePoint sphere_point(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= M_PI)) {
        throw std::invalid_argument("sphere_point: theta outside [0, pi]");
    }
    double p = std::fmod(phi, 2.0 * M_PI);
    if (p < 0.0) p += 2.0 * M_PI;
    return {theta, p};
}

SphereGrid SphereGrid::gauss_legendre(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 1) {
        throw std::invalid_argument("SphereGrid::gauss_legendre: node counts must be >= 1");
    }
    std::vector<double> u, wu;
    gauss_legendre_rule(n_theta, u, wu);

    SphereGrid grid;
    grid.theta_nodes = n_theta;
    grid.phi_nodes = n_phi;
    grid.exact_degree = std::min(2 * n_theta - 1, n_phi - 1);
    grid.nodes.reserve(static_cast<size_t>(n_theta) * static_cast<size_t>(n_phi));
    grid.weights.reserve(grid.nodes.capacity());

    const double wphi = 2.0 * M_PI / static_cast<double>(n_phi);
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::acos(u[static_cast<size_t>(i)]);
        for (int j = 0; j < n_phi; ++j) {
            grid.nodes.push_back({theta, wphi * static_cast<double>(j)});
            grid.weights.push_back(wu[static_cast<size_t>(i)] * wphi);
        }
    }
    return grid;
}

SphereGrid SphereGrid::fibonacci(int count) {
    if (count < 1) throw std::invalid_argument("SphereGrid::fibonacci: count must be >= 1");
    SphereGrid grid;
    grid.exact_degree = 0;
    grid.nodes.reserve(static_cast<size_t>(count));
    grid.weights.assign(static_cast<size_t>(count), 4.0 * M_PI / static_cast<double>(count));
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(count);
        const double phi = std::fmod(golden_angle * static_cast<double>(i), 2.0 * M_PI);
        grid.nodes.push_back({std::acos(z), phi});
    }
    return grid;
}

SphereGrid SphereGrid::from_points(std::vector<SpherePoint> nodes,
                                   std::vector<double> weights, int exact_degree) {
    if (nodes.size() != weights.size()) {
        throw std::invalid_argument("SphereGrid::from_points: size mismatch");
    }
    SphereGrid grid;
    grid.nodes = std::move(nodes);
    grid.weights = std::move(weights);
    grid.exact_degree = exact_degree;
    return grid;
}

SphereGrid SphereGrid::doubled() const {
    if (theta_nodes < 1 || phi_nodes < 1) {
        throw std::invalid_argument("SphereGrid::doubled: only product rules can be doubled");
    }
    return gauss_legendre(2 * theta_nodes, 2 * phi_nodes);
}

double SphereGrid::total_weight() const {
    Compensated<double> acc;
    for (double w : weights) acc.add(w);
    return acc.value();
}

}  // namespace jcsim
