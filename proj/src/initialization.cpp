#include "jcsim/initialization.hpp"

#include <algorithm>
#include <cmath>

namespace jcsim {

namespace {

KrausSet plan_kraus(const IterationPlan& plan) {
    const EvolutionParams params(plan.tau);
    // A field with phase 0 and modulus > 0 has a closed-form Kraus set; any
    // other amplitude goes through the oracle.
    if (plan.alpha_modulus > 0.0 && plan.field_phase == 0.0) {
        return kraus_set(CoherentField::make(plan.alpha_modulus, 0.0, plan.tail_tol),
                         params, 2);
    }
    return kraus_set_from_oracle(
        CoherentField::make(plan.alpha_modulus, plan.field_phase, plan.tail_tol), params,
        2);
}

BlochVector rotate_z(const BlochVector& v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {v.x * c - v.y * s, v.x * s + v.y * c, v.z};
}

double polar_angle(const BlochVector& v) {
    return std::atan2(std::hypot(v.x, v.y), v.z);
}

}  // namespace

std::vector<QubitDensity> iterate_channel(const QubitDensity& rho0,
                                          const IterationPlan& plan) {
    if (plan.n_iterations < 0) {
        throw std::invalid_argument("iterate_channel: n_iterations < 0");
    }
    require_density(rho0, 1e-10);
    std::vector<QubitDensity> states;
    states.reserve(static_cast<size_t>(plan.n_iterations) + 1);
    states.push_back(rho0);
    if (plan.n_iterations == 0) return states;

    // Fresh field each round; the Kraus set depends only on (tau, alpha, phase).
    const KrausSet ks = plan_kraus(plan);
    for (int i = 0; i < plan.n_iterations; ++i) {
        states.push_back(apply_channel(states.back(), ks));
    }
    return states;
}

BallImage ball_image(const IterationPlan& plan, const std::vector<SpherePoint>& points) {
    BallImage image;
    image.params = plan;
    image.initial_points = points;
    image.final_blochs.reserve(points.size());

    const KrausSet ks = plan.n_iterations > 0 ? plan_kraus(plan) : KrausSet{};
    for (const SpherePoint& p : points) {
        QubitDensity rho = density_from_pure(p.to_qubit());
        for (int i = 0; i < plan.n_iterations; ++i) rho = apply_channel(rho, ks);
        const BlochVector b = bloch_from_density(rho);
        if (b.r() > 1.0 + 1e-9) {
            throw std::runtime_error("ball_image: final state left the Bloch ball");
        }
        image.final_blochs.push_back(b);
    }
    return image;
}

BallImage ball_image(const IterationPlan& plan, const SphereGrid& sampling) {
    return ball_image(plan, sampling.nodes);
}

std::vector<std::pair<double, double>> BallImage::projection(Axis dropped) const {
    std::vector<std::pair<double, double>> out;
    out.reserve(final_blochs.size());
    for (const BlochVector& b : final_blochs) {
        switch (dropped) {
            case Axis::x: out.emplace_back(b.y, b.z); break;
            case Axis::y: out.emplace_back(b.x, b.z); break;
            case Axis::z: out.emplace_back(b.x, b.y); break;
        }
    }
    return out;
}

double image_diameter(const BallImage& image) {
    double d2 = 0.0;
    const auto& v = image.final_blochs;
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = i + 1; j < v.size(); ++j) {
            const double dx = v[i].x - v[j].x;
            const double dy = v[i].y - v[j].y;
            const double dz = v[i].z - v[j].z;
            d2 = std::max(d2, dx * dx + dy * dy + dz * dz);
        }
    }
    return std::sqrt(d2);
}

FixedStateEstimate fixed_state_estimate(const IterationPlan& plan, int sample_count) {
    const BallImage image = ball_image(plan, SphereGrid::fibonacci(sample_count));

    Compensated<double> cx, cy, cz;
    double min_purity = 1.0;
    for (const BlochVector& b : image.final_blochs) {
        cx.add(b.x);
        cy.add(b.y);
        cz.add(b.z);
        const double r2 = b.x * b.x + b.y * b.y + b.z * b.z;
        min_purity = std::min(min_purity, 0.5 * (1.0 + r2));
    }
    const double inv = 1.0 / static_cast<double>(image.final_blochs.size());
    FixedStateEstimate est;
    est.centroid = {cx.value() * inv, cy.value() * inv, cz.value() * inv};
    est.dispersion = image_diameter(image);
    est.min_purity = min_purity;
    return est;
}

MeridianReport meridian_rotation_check(const IterationPlan& plan, int sample_count,
                                       double tol) {
    const SphereGrid sample = SphereGrid::fibonacci(sample_count);

    // Direct: the phased channel on the sample itself.
    const BallImage direct = ball_image(plan, sample);

    // Reference: rotate inputs by -phi, run the phase-0 channel, rotate back.
    std::vector<SpherePoint> rotated;
    rotated.reserve(sample.size());
    for (const SpherePoint& p : sample.nodes) {
        rotated.push_back(sphere_point(p.theta, p.phi - plan.field_phase));
    }
    IterationPlan zero_phase = plan;
    zero_phase.field_phase = 0.0;
    const BallImage reference = ball_image(zero_phase, rotated);

    MeridianReport report;
    report.tolerance = tol;
    for (size_t i = 0; i < sample.size(); ++i) {
        const BlochVector expect = rotate_z(reference.final_blochs[i], plan.field_phase);
        const BlochVector got = direct.final_blochs[i];
        const double dev = std::sqrt(std::pow(expect.x - got.x, 2) +
                                     std::pow(expect.y - got.y, 2) +
                                     std::pow(expect.z - got.z, 2));
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.consistent = report.max_deviation <= tol;
    return report;
}

InitializationSearch find_initialization_params(const SpherePoint& target, int k,
                                                int n_iterations, double alpha_min,
                                                double alpha_max, int sample_count) {
    if (target.theta > 0.5 * M_PI + 1e-12) {
        throw std::invalid_argument(
            "find_initialization_params: target must lie on the ground hemisphere");
    }
    if (k < 1) throw std::invalid_argument("find_initialization_params: k must be >= 1");
    if (n_iterations < 1) {
        throw std::invalid_argument("find_initialization_params: n_iterations must be >= 1");
    }
    if (!(alpha_min > 0.0 && alpha_max > alpha_min)) {
        throw std::invalid_argument("find_initialization_params: bad alpha range");
    }

    const double tau = (static_cast<double>(k) - 0.5) * M_PI;
    const auto estimate_at = [&](double alpha) {
        IterationPlan plan{tau, alpha, 0.0, n_iterations};
        return fixed_state_estimate(plan, sample_count);
    };
    const auto theta_at = [&](double alpha) { return polar_angle(estimate_at(alpha).centroid); };

    InitializationSearch result;

    // Coarse scan: record the curve and check the monotone bracket.
    constexpr int kScanPoints = 9;
    for (int i = 0; i < kScanPoints; ++i) {
        const double a = alpha_min + (alpha_max - alpha_min) * i / (kScanPoints - 1.0);
        result.scanned.emplace_back(a, theta_at(a));
    }
    for (size_t i = 1; i < result.scanned.size(); ++i) {
        if (result.scanned[i].second < result.scanned[i - 1].second - 1e-9) {
            result.bracket_ok = false;  // caller gets the scanned curve instead
            return result;
        }
    }
    result.bracket_ok = true;

    // Golden-section minimization of |theta_c(alpha) - theta*|.
    const double target_theta = target.theta;
    double lo = alpha_min, hi = alpha_max;
    if (target_theta <= result.scanned.front().second) {
        hi = result.scanned[1].first;
    } else if (target_theta >= result.scanned.back().second) {
        lo = result.scanned[kScanPoints - 2].first;
    }
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - gr * (hi - lo);
    double b = lo + gr * (hi - lo);
    double fa = std::abs(theta_at(a) - target_theta);
    double fb = std::abs(theta_at(b) - target_theta);
    for (int iter = 0; iter < 40 && (hi - lo) > 1e-4; ++iter) {
        if (fa <= fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - gr * (hi - lo);
            fa = std::abs(theta_at(a) - target_theta);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + gr * (hi - lo);
            fb = std::abs(theta_at(b) - target_theta);
        }
    }
    result.alpha = fa <= fb ? a : b;

    // Meridian selection: the phase rotates the phase-0 centroid about z.
    const FixedStateEstimate base = estimate_at(result.alpha);
    const double base_azimuth = std::atan2(base.centroid.y, base.centroid.x);
    double phase = 0.0;
    if (std::sin(target.theta) > 1e-12) {
        phase = std::fmod(target.phi - base_azimuth, 2.0 * M_PI);
        if (phase < 0.0) phase += 2.0 * M_PI;
    }
    result.phase = phase;

    IterationPlan final_plan{tau, result.alpha, phase, n_iterations};
    result.achieved = fixed_state_estimate(final_plan, sample_count).centroid;

    const BlochVector t = target.to_bloch();
    const double dot = (result.achieved.x * t.x + result.achieved.y * t.y +
                        result.achieved.z * t.z) /
                       std::max(result.achieved.r(), 1e-300);
    result.residual = std::acos(std::clamp(dot, -1.0, 1.0));
    return result;
}

}  // namespace jcsim
