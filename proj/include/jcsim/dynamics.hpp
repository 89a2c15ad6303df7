#pragma once

#include <utility>
#include <vector>

#include "jcsim/core.hpp"

namespace jcsim {

//=========================================================================
// Photon-number-resolved measurement operators
//=========================================================================

// Kraus set {K_n} of the resonant Jaynes-Cummings interaction with a
// coherent field, K_n = <n| U(tau) |alpha>, acting on the atom:
//
//   K_n = sqrt(P_n) [ cos(tau sqrt(n))            -i (sqrt(n)/a) sin(tau sqrt(n))   ]
//                   [ -i (a/sqrt(n+1)) sin(tau sqrt(n+1))   cos(tau sqrt(n+1))      ]
//
// for real amplitude a > 0. Completeness sum_n K_n^dag K_n = 1 holds up to
// the certified Poisson tail.
struct KrausSet {
    double alpha_modulus = 0.0;
    double tau = 0.0;
    double tail_tol = 1e-12;
    std::vector<Mat2> ops;  // indexed by photon count n

    int n_max() const { return static_cast<int>(ops.size()) - 1; }
};

// Closed-form constructor; requires phase 0 and modulus > 0 (the upper-right
// entry carries sqrt(n)/a). guard_levels extends the outcome range past the
// field's certified n_max.
KrausSet kraus_set(const CoherentField& field, const EvolutionParams& params,
                   int guard_levels = 0);

// Deviation of sum_n K_n^dag K_n from the identity, max-norm.
double kraus_completeness_defect(const KrausSet& ks);

// rho' = sum_n K_n rho K_n^dag. Trace is preserved within 10 * tail_tol.
QubitDensity apply_channel(const QubitDensity& rho, const KrausSet& ks);

// Post-measurement state and probability for photon count n:
// p = Tr(K_n rho K_n^dag), state = K_n rho K_n^dag / p.
// Throws OutcomeImpossible when p < 1e-300.
std::pair<QubitDensity, double> conditional_outcome_state(const QubitDensity& rho,
                                                          const KrausSet& ks, int n);

//=========================================================================
// Closed-form reduced dynamics
//=========================================================================

// Exact Bloch components of the reduced atomic state after scaled time tau,
// as Poisson-weighted trigonometric sums over the Fock ladder. Requires a
// phase-0 field (complex amplitudes route through the oracle).
BlochVector bloch_evolve(const PureQubit& q, const CoherentField& field,
                         const EvolutionParams& params);

namespace detail {
// Same sums, driven by initial Bloch components; the map is affine in r0,
// which the sphere-averaging shortcut in infogain exploits with r0 = 0.
BlochVector bloch_evolve_components(const BlochVector& r0, const CoherentField& field,
                                    double tau);
}  // namespace detail

//=========================================================================
// Brute-force unitary oracle
//=========================================================================

// Truncated joint atom+field state. Ground amplitudes carry one extra Fock
// level relative to the excited ones so that every excitation sector
// {|g,n+1>, |e,n>} is complete and the evolution is exactly unitary on the
// retained space (|g,0> is dark).
struct JointState {
    std::vector<Complex> ground;   // <g,n|psi>, n = 0 .. ground.size()-1
    std::vector<Complex> excited;  // <e,n|psi>, n = 0 .. excited.size()-1

    double norm_sq() const;
    int photon_cap() const { return static_cast<int>(ground.size()) - 1; }
};

enum class OracleMethod {
    analytic,  // per-sector 2x2 rotations, exact
    dense,     // dense Hermitian eigendecomposition, second opinion
};

// |q> (x) |alpha> truncated at field n_max + 2 photons (guard levels).
JointState joint_initial_state(const PureQubit& q, const CoherentField& field);

// U(tau) = exp(-i H tau) with H = sigma_+ a + sigma_- a^dag in scaled time.
// tau may be negative (U(-tau) = U(tau)^dag).
JointState evolve_joint(const JointState& s, double tau,
                        OracleMethod method = OracleMethod::analytic);

QubitDensity reduce_atom(const JointState& s);

// P(n) = |<g,n|psi>|^2 + |<e,n|psi>|^2, n = 0 .. photon_cap.
std::vector<double> photon_distribution(const JointState& s);

struct OracleResult {
    JointState joint;
    QubitDensity atom;
    std::vector<double> photon_dist;
};

// Full brute-force evolution: build the truncated joint state, evolve, reduce.
// Accepts any field phase. Throws TruncationError if the final population in
// the top two photon levels exceeds the truncation certificate.
OracleResult oracle_evolve(const PureQubit& q, const CoherentField& field,
                           const EvolutionParams& params,
                           OracleMethod method = OracleMethod::analytic);

// Kraus set K_n = <n| U |alpha e^{i phi}> extracted from two oracle runs
// (atom |g> and |e|). Valid for any phase and for modulus 0.
KrausSet kraus_set_from_oracle(const CoherentField& field, const EvolutionParams& params,
                               int guard_levels = 0);

// Channel for a field with arbitrary complex amplitude, computed through the
// oracle. Handles mixed input states.
QubitDensity phase_rotated_channel(const QubitDensity& rho, const CoherentField& field,
                                   const EvolutionParams& params);

}  // namespace jcsim
