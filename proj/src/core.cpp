#include "jcsim/core.hpp"

#include <cmath>

namespace jcsim {

void require_normalized(const PureQubit& q, double tol) {
    if (std::abs(q.norm_sq() - 1.0) > tol) {
        throw std::invalid_argument("PureQubit is not normalized: |c_g|^2+|c_e|^2 = " +
                                    std::to_string(q.norm_sq()));
    }
}

void require_density(const QubitDensity& rho, double trace_tol, double herm_tol,
                     double eig_tol) {
    const Mat2& m = rho.m;
    if (std::abs(m(0, 1) - std::conj(m(1, 0))) > herm_tol ||
        std::abs(m(0, 0).imag()) > herm_tol || std::abs(m(1, 1).imag()) > herm_tol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    const double tr = m(0, 0).real() + m(1, 1).real();
    if (std::abs(tr - 1.0) > trace_tol) {
        throw std::invalid_argument("density matrix trace deviates from 1 by " +
                                    std::to_string(tr - 1.0));
    }
    // Hermitian 2x2 eigenvalues: tr/2 +- sqrt((d/2)^2 + |off|^2).
    const double half_diff = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const double disc = std::sqrt(half_diff * half_diff + std::norm(m(0, 1)));
    const double lambda_min = 0.5 * tr - disc;
    if (lambda_min < -eig_tol) {
        throw std::invalid_argument("density matrix has negative eigenvalue " +
                                    std::to_string(lambda_min));
    }
}

QubitDensity density_from_pure(const PureQubit& q) {
    require_normalized(q);
    QubitDensity rho;
    rho.m(0, 0) = std::norm(q.c_g);
    rho.m(0, 1) = q.c_g * std::conj(q.c_e);
    rho.m(1, 0) = q.c_e * std::conj(q.c_g);
    rho.m(1, 1) = std::norm(q.c_e);
    return rho;
}

QubitDensity maximally_mixed() {
    QubitDensity rho;
    rho.m = 0.5 * Mat2::Identity();
    return rho;
}

PoissonWeights poisson_weights(double modulus, double tail_tol) {
    if (!(modulus >= 0.0) || !std::isfinite(modulus)) {
        throw std::invalid_argument("poisson_weights: modulus must be finite and >= 0");
    }
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
        throw std::invalid_argument("poisson_weights: tail_tol must lie in (0, 1)");
    }
    const double lambda = modulus * modulus;
    if (lambda > 700.0) {
        // e^{-lambda} underflows double precision before the recurrence starts.
        throw TruncationError("poisson_weights: modulus " + std::to_string(modulus) +
                              " exceeds the double-precision range (a^2 > 700)");
    }
    const int hard_cap = static_cast<int>(std::ceil(lambda + 12.0 * modulus + 40.0));

    PoissonWeights out;
    out.weights.reserve(static_cast<size_t>(hard_cap) + 1);
    out.weights.push_back(std::exp(-lambda));
    double next = out.weights[0] * lambda;  // P_1

    for (int n = 0; n <= hard_cap; ++n) {
        // weights holds P_0..P_n, next = P_{n+1}
        if (static_cast<double>(n) + 2.0 > lambda) {
            const double bound = next / (1.0 - lambda / (static_cast<double>(n) + 2.0));
            if (bound < tail_tol) {
                out.n_max = n;
                return out;
            }
        }
        out.weights.push_back(next);
        next *= lambda / (static_cast<double>(n) + 2.0);
    }
    throw TruncationError("poisson_weights: tail below " + std::to_string(tail_tol) +
                          " not certified within hard cap n = " + std::to_string(hard_cap) +
                          " at modulus " + std::to_string(modulus));
}

CoherentField CoherentField::make(double modulus, double phase, double tail_tol) {
    CoherentField f;
    f.modulus = modulus;
    f.phase = std::fmod(phase, 2.0 * M_PI);
    if (f.phase < 0.0) f.phase += 2.0 * M_PI;
    f.tail_tol = tail_tol;
    auto pw = poisson_weights(modulus, tail_tol);
    f.weights = std::move(pw.weights);
    return f;
}

double CoherentField::weight(int n) const {
    if (n < 0) throw std::invalid_argument("CoherentField::weight: n < 0");
    if (n < static_cast<int>(weights.size())) return weights[static_cast<size_t>(n)];
    const double lambda = modulus * modulus;
    double p = weights.back();
    for (int k = static_cast<int>(weights.size()); k <= n; ++k) {
        p *= lambda / static_cast<double>(k);
    }
    return p;
}

EvolutionParams::EvolutionParams(double tau_, double g_) : tau(tau_), g(g_) {
    if (!std::isfinite(tau) || tau < 0.0) {
        throw std::invalid_argument("EvolutionParams: tau must be finite and >= 0");
    }
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw std::invalid_argument("EvolutionParams: coupling g must be finite and > 0");
    }
}

BlochVector bloch_from_pure(const PureQubit& q) {
    require_normalized(q);
    const Complex w = q.c_g * std::conj(q.c_e);
    return {2.0 * w.real(), -2.0 * w.imag(), std::norm(q.c_g) - std::norm(q.c_e)};
}

QubitDensity density_from_bloch(const BlochVector& v) {
    if (v.r() > 1.0 + 1e-9) {
        throw std::invalid_argument("density_from_bloch: non-physical state, r = " +
                                    std::to_string(v.r()));
    }
    QubitDensity rho;
    rho.m(0, 0) = 0.5 * (1.0 + v.z);
    rho.m(0, 1) = 0.5 * Complex(v.x, -v.y);
    rho.m(1, 0) = 0.5 * Complex(v.x, v.y);
    rho.m(1, 1) = 0.5 * (1.0 - v.z);
    return rho;
}

BlochVector bloch_from_density(const QubitDensity& rho) {
    return {2.0 * rho.m(0, 1).real(), -2.0 * rho.m(0, 1).imag(),
            rho.m(0, 0).real() - rho.m(1, 1).real()};
}

double purity(const QubitDensity& rho) {
    const double d0 = rho.m(0, 0).real();
    const double d1 = rho.m(1, 1).real();
    return d0 * d0 + d1 * d1 + 2.0 * std::norm(rho.m(0, 1));
}

}  // namespace jcsim
