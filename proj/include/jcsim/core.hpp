#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace jcsim {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline constexpr Complex kImag{0.0, 1.0};

//=========================================================================
// Errors
//=========================================================================

// Poisson truncation could not be certified below the requested tail.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature refinement moved the result by more than the guard tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A measurement outcome with (numerically) zero probability was requested.
class OutcomeImpossible : public std::runtime_error {
public:
    explicit OutcomeImpossible(const std::string& what) : std::runtime_error(what) {}
};

//=========================================================================
// Compensated summation
//=========================================================================

// Kahan accumulator; works for double and std::complex<double>.
// All Fock-space sums accumulate in ascending n through one of these so
// results do not depend on scheduling.
template <typename T>
struct Compensated {
    T sum{};
    T carry{};

    void add(T x) {
        const T y = x - carry;
        const T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    T value() const { return sum; }
};

//=========================================================================
// States
//=========================================================================

// Pure qubit amplitudes over the (|g>, |e>) basis.
struct PureQubit {
    Complex c_g{1.0, 0.0};
    Complex c_e{0.0, 0.0};

    double norm_sq() const { return std::norm(c_g) + std::norm(c_e); }
};

// Throws std::invalid_argument unless |c_g|^2 + |c_e|^2 = 1 within tol.
void require_normalized(const PureQubit& q, double tol = 1e-12);

// Bloch vector with the convention that (0,0,1) is the ground state |g>.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double r() const { return std::sqrt(x * x + y * y + z * z); }
};

// 2x2 atomic density matrix in the (|g>, |e>) basis,
// rho = (1 + r.sigma)/2 with sigma_z |g> = +|g>.
struct QubitDensity {
    Mat2 m = Mat2::Zero();
};

// Validates Hermiticity, unit trace and positivity; throws std::invalid_argument.
// trace_tol covers channels that are trace preserving only up to a certified
// truncation tail.
void require_density(const QubitDensity& rho, double trace_tol = 1e-12,
                     double herm_tol = 1e-12, double eig_tol = 1e-12);

QubitDensity density_from_pure(const PureQubit& q);
QubitDensity maximally_mixed();

//=========================================================================
// Coherent field
//=========================================================================

struct PoissonWeights {
    std::vector<double> weights;  // weights[n] = P_n = e^{-a^2} a^{2n} / n!
    int n_max = 0;                // smallest cutoff with certified tail < tail_tol
};

// Stable ascending recurrence P_{n+1} = P_n a^2/(n+1) from P_0 = e^{-a^2}.
// The cutoff is certified by the geometric tail bound
//   sum_{n>N} P_n <= P_{N+1} / (1 - a^2/(N+2))   (valid once N+2 > a^2).
// Throws TruncationError if the bound cannot be met within the hard cap
// ceil(a^2 + 12a + 40).
PoissonWeights poisson_weights(double modulus, double tail_tol);

// Single-mode coherent state |alpha>, alpha = modulus * e^{i phase},
// with a certified Fock truncation.
struct CoherentField {
    double modulus = 0.0;
    double phase = 0.0;  // radians, [0, 2pi)
    double tail_tol = 1e-12;
    std::vector<double> weights;  // P_0 .. P_{n_max}

    static CoherentField make(double modulus, double phase = 0.0,
                              double tail_tol = 1e-12);

    int n_max() const { return static_cast<int>(weights.size()) - 1; }

    // P_n for any n >= 0; indices past n_max are extended by the recurrence.
    double weight(int n) const;

    bool has_zero_phase(double tol = 0.0) const {
        return std::abs(phase) <= tol;
    }
};

//=========================================================================
// Evolution parameters
//=========================================================================

// Scaled interaction time tau = g t; every formula downstream consumes tau.
struct EvolutionParams {
    double tau = 0.0;
    double g = 1.0;

    EvolutionParams() = default;
    explicit EvolutionParams(double tau_, double g_ = 1.0);
};

//=========================================================================
// Conversions
//=========================================================================

// (2 Re{c_g c_e*}, -2 Im{c_g c_e*}, |c_g|^2 - |c_e|^2); unit length for pure input.
BlochVector bloch_from_pure(const PureQubit& q);

// rho = (1 + r.sigma)/2. Throws std::invalid_argument for r > 1 + 1e-9.
QubitDensity density_from_bloch(const BlochVector& v);

BlochVector bloch_from_density(const QubitDensity& rho);

// Tr(rho^2) = (1 + r^2)/2.
double purity(const QubitDensity& rho);

}  // namespace jcsim
