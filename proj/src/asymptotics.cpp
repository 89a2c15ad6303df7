#include "jcsim/asymptotics.hpp"

#include <cmath>

namespace jcsim {

namespace {

void require_positive_alpha(double alpha, const char* where) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument(std::string(where) + ": alpha must be > 0");
    }
}

}  // namespace

FrequencyExpansion FrequencyExpansion::rabi(double alpha) {
    require_positive_alpha(alpha, "FrequencyExpansion::rabi");
    return {2.0 * alpha, 1.0 / alpha};
}

FrequencyExpansion FrequencyExpansion::fast(double alpha) {
    require_positive_alpha(alpha, "FrequencyExpansion::fast");
    return {2.0 * alpha, 1.0 / alpha};
}

FrequencyExpansion FrequencyExpansion::slow(double alpha) {
    require_positive_alpha(alpha, "FrequencyExpansion::slow");
    return {0.5 / alpha, -0.25 / (alpha * alpha * alpha)};
}

double attractor_time(int k, double alpha) {
    if (k < 1) throw std::invalid_argument("attractor_time: k must be >= 1");
    if (!(alpha >= 0.0)) throw std::invalid_argument("attractor_time: alpha must be >= 0");
    return (2.0 * k - 1.0) * M_PI * alpha;
}

AttractorSpec AttractorSpec::at(int k, double alpha) {
    return {k, 2.0 * attractor_time(k, alpha) * alpha};
}

QubitDensity vacuum_limit_density(const PureQubit& q, double tau) {
    require_normalized(q);
    const double pg = std::norm(q.c_g);
    const double pe = std::norm(q.c_e);
    const double c = std::cos(tau);
    const double s = std::sin(tau);
    QubitDensity rho;
    rho.m(0, 0) = pe * s * s + pg;
    rho.m(0, 1) = q.c_g * std::conj(q.c_e) * c;
    rho.m(1, 0) = std::conj(q.c_g) * q.c_e * c;
    rho.m(1, 1) = pe * c * c;
    require_density(rho);
    return rho;
}

double damped_cosine_sum(const CoherentField& field, const FrequencyExpansion& fx,
                         double tau) {
    const double ba = fx.beta * field.modulus;
    return std::cos(fx.omega0 * tau) * std::exp(-0.5 * ba * ba * tau * tau);
}

BlochVector gaussian_bloch(const PureQubit& q, double alpha, double tau) {
    require_positive_alpha(alpha, "gaussian_bloch");
    const BlochVector r0 = bloch_from_pure(q);

    const double big_omega = 2.0 * tau * alpha;
    const double y_inf = r0.y * std::cos(big_omega) - r0.z * std::sin(big_omega);
    const double z_inf = r0.y * std::sin(big_omega) + r0.z * std::cos(big_omega);

    const double slow_angle = 0.5 * tau / alpha;
    const double a4 = alpha * alpha * alpha * alpha;
    const double env_slow = std::exp(-tau * tau / (32.0 * a4));
    const double env_fast = std::exp(-0.5 * tau * tau);

    return {r0.x * std::cos(slow_angle) * env_slow,
            y_inf * env_fast - std::sin(slow_angle) * env_slow,
            z_inf * env_fast};
}

BlochVector intermediate_bloch_sums(const PureQubit& q, const CoherentField& field,
                                    double tau) {
    if (!field.has_zero_phase()) {
        throw std::invalid_argument("intermediate_bloch_sums: field phase must be 0");
    }
    const BlochVector r0 = bloch_from_pure(q);

    Compensated<double> X, Y, Z;
    for (int n = 0; n <= field.n_max(); ++n) {
        const double pn = field.weights[static_cast<size_t>(n)];
        const double rn = std::sqrt(static_cast<double>(n));
        const double rn1 = std::sqrt(static_cast<double>(n) + 1.0);
        const double w_minus = rn1 - rn;
        const double w_plus = rn1 + rn;
        const double w_rabi = 2.0 * rn;

        X.add(pn * r0.x * std::cos(tau * w_minus));
        Y.add(pn * (r0.y * std::cos(tau * w_plus) - r0.z * std::sin(tau * w_plus) -
                    std::sin(tau * w_minus)));
        Z.add(pn * (r0.y * std::sin(tau * w_rabi) + r0.z * std::cos(tau * w_rabi)));
    }
    return {X.value(), Y.value(), Z.value()};
}

}  // namespace jcsim
