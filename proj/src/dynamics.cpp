#include "jcsim/dynamics.hpp"

#include <cmath>

namespace jcsim {

namespace {

// Truncation certificate margin over tail_tol; covers roundoff on top of the
// certified tail bound.
constexpr double kCertificateMargin = 10.0;

void require_zero_phase(const CoherentField& field, const char* where) {
    if (!field.has_zero_phase()) {
        throw std::invalid_argument(std::string(where) +
                                    ": field phase must be 0; complex amplitudes "
                                    "are served by the oracle path");
    }
}

}  // namespace

//=========================================================================
// Kraus set
//=========================================================================

KrausSet kraus_set(const CoherentField& field, const EvolutionParams& params,
                   int guard_levels) {
    require_zero_phase(field, "kraus_set");
    if (field.modulus <= 0.0) {
        throw std::invalid_argument(
            "kraus_set: degenerate amplitude, the closed form is singular at "
            "alpha = 0; use kraus_set_from_oracle or the vacuum limit");
    }
    if (guard_levels < 0) throw std::invalid_argument("kraus_set: guard_levels < 0");

    const double alpha = field.modulus;
    const double tau = params.tau;
    const int top = field.n_max() + guard_levels;

    KrausSet ks;
    ks.alpha_modulus = alpha;
    ks.tau = tau;
    ks.tail_tol = field.tail_tol;
    ks.ops.reserve(static_cast<size_t>(top) + 1);

    for (int n = 0; n <= top; ++n) {
        const double sp = std::sqrt(field.weight(n));
        const double rn = std::sqrt(static_cast<double>(n));
        const double rn1 = std::sqrt(static_cast<double>(n) + 1.0);
        Mat2 k;
        k(0, 0) = sp * std::cos(tau * rn);
        k(0, 1) = -kImag * (sp * (rn / alpha) * std::sin(tau * rn));  // exactly 0 at n=0
        k(1, 0) = -kImag * (sp * (alpha / rn1) * std::sin(tau * rn1));
        k(1, 1) = sp * std::cos(tau * rn1);
        ks.ops.push_back(k);
    }
    return ks;
}

double kraus_completeness_defect(const KrausSet& ks) {
    Compensated<Complex> acc[2][2];
    for (const Mat2& k : ks.ops) {
        const Mat2 m = k.adjoint() * k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) acc[i][j].add(m(i, j));
    }
    double defect = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Complex target = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            defect = std::max(defect, std::abs(acc[i][j].value() - target));
        }
    }
    return defect;
}

QubitDensity apply_channel(const QubitDensity& rho, const KrausSet& ks) {
    Compensated<Complex> acc[2][2];
    for (const Mat2& k : ks.ops) {
        const Mat2 m = k * rho.m * k.adjoint();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) acc[i][j].add(m(i, j));
    }
    QubitDensity out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.m(i, j) = acc[i][j].value();
    require_density(out, 10.0 * ks.tail_tol, 1e-12, 1e-11);
    return out;
}

std::pair<QubitDensity, double> conditional_outcome_state(const QubitDensity& rho,
                                                          const KrausSet& ks, int n) {
    if (n < 0 || n > ks.n_max()) {
        throw std::invalid_argument("conditional_outcome_state: outcome index " +
                                    std::to_string(n) + " outside 0.." +
                                    std::to_string(ks.n_max()));
    }
    const Mat2 m = ks.ops[static_cast<size_t>(n)] * rho.m *
                   ks.ops[static_cast<size_t>(n)].adjoint();
    const double p = m(0, 0).real() + m(1, 1).real();
    if (p < 1e-300) {
        throw OutcomeImpossible("conditional_outcome_state: outcome n = " +
                                std::to_string(n) + " has probability " +
                                std::to_string(p));
    }
    QubitDensity out;
    out.m = m / p;
    require_density(out, 1e-10, 1e-12, 1e-11);
    return {out, p};
}

//=========================================================================
// Closed-form Bloch evolution
//=========================================================================

namespace detail {

BlochVector bloch_evolve_components(const BlochVector& r0, const CoherentField& field,
                                    double tau) {
    const double alpha = field.modulus;
    const double xw = r0.x;           // 2 Re{C_g C_e*}
    const double yw = r0.y;           // -2 Im{C_g C_e*}
    const double pg = 0.5 * (1.0 + r0.z);  // |C_g|^2
    const double pe = 0.5 * (1.0 - r0.z);  // |C_e|^2

    Compensated<double> X, Y, Z;
    for (int n = 0; n <= field.n_max(); ++n) {
        const double pn = field.weights[static_cast<size_t>(n)];
        const double rn = std::sqrt(static_cast<double>(n));
        const double rn1 = std::sqrt(static_cast<double>(n) + 1.0);
        const double cn = std::cos(tau * rn);
        const double sn = std::sin(tau * rn);
        const double cn1 = std::cos(tau * rn1);
        const double sn1 = std::sin(tau * rn1);
        const double ratio = rn / rn1;                       // sqrt(n/(n+1)), 0 at n=0
        const double f_up = (alpha > 0.0) ? alpha / rn1 : 0.0;
        const double f_low = (alpha > 0.0) ? rn / alpha : 0.0;  // 0 at n=0

        X.add(pn * xw * (cn * cn1 + ratio * sn * sn1));
        Y.add(pn * (yw * (cn * cn1 - ratio * sn * sn1) -
                    2.0 * (pg * f_up * cn * sn1 - pe * f_low * cn1 * sn)));
        Z.add(pn * (pg * std::cos(2.0 * tau * rn) - pe * std::cos(2.0 * tau * rn1) +
                    yw * f_low * std::sin(2.0 * tau * rn)));
    }
    return {X.value(), Y.value(), Z.value()};
}

}  // namespace detail

BlochVector bloch_evolve(const PureQubit& q, const CoherentField& field,
                         const EvolutionParams& params) {
    require_zero_phase(field, "bloch_evolve");
    require_normalized(q);
    BlochVector out = detail::bloch_evolve_components(bloch_from_pure(q), field, params.tau);
    if (out.r() > 1.0 + 1e-9) {
        throw std::runtime_error("bloch_evolve: non-physical output radius " +
                                 std::to_string(out.r()));
    }
    return out;
}

//=========================================================================
// Oracle
//=========================================================================

double JointState::norm_sq() const {
    Compensated<double> acc;
    for (const Complex& a : ground) acc.add(std::norm(a));
    for (const Complex& a : excited) acc.add(std::norm(a));
    return acc.value();
}

namespace {

JointState joint_initial_state_with_cap(const PureQubit& q, const CoherentField& field,
                                        int cap) {
    require_normalized(q);
    JointState s;
    s.ground.resize(static_cast<size_t>(cap) + 1);
    s.excited.resize(static_cast<size_t>(cap));
    for (int n = 0; n <= cap; ++n) {
        const Complex amp =
            std::sqrt(field.weight(n)) *
            std::exp(kImag * (field.phase * static_cast<double>(n)));
        s.ground[static_cast<size_t>(n)] = q.c_g * amp;
        if (n < cap) s.excited[static_cast<size_t>(n)] = q.c_e * amp;
    }
    return s;
}

}  // namespace

JointState joint_initial_state(const PureQubit& q, const CoherentField& field) {
    return joint_initial_state_with_cap(q, field, field.n_max() + 2);  // two guard levels
}

namespace {

JointState evolve_joint_analytic(const JointState& s, double tau) {
    JointState out = s;
    // Sector m couples (|g,m>, |e,m-1>) and rotates by angle tau*sqrt(m).
    for (size_t m = 1; m < s.ground.size(); ++m) {
        const double angle = tau * std::sqrt(static_cast<double>(m));
        const double c = std::cos(angle);
        const Complex is = kImag * std::sin(angle);
        const Complex g = s.ground[m];
        const Complex e = s.excited[m - 1];
        out.ground[m] = c * g - is * e;
        out.excited[m - 1] = c * e - is * g;
    }
    return out;
}

JointState evolve_joint_dense(const JointState& s, double tau) {
    const int ng = static_cast<int>(s.ground.size());
    const int ne = static_cast<int>(s.excited.size());
    const int dim = ng + ne;

    // Basis ordering [g0..g_{ng-1}, e0..e_{ne-1}].
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = 1; m < ng; ++m) {
        const double g = std::sqrt(static_cast<double>(m));
        h(m, ng + m - 1) = g;
        h(ng + m - 1, m) = g;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);

    Eigen::VectorXcd psi(dim);
    for (int i = 0; i < ng; ++i) psi(i) = s.ground[static_cast<size_t>(i)];
    for (int i = 0; i < ne; ++i) psi(ng + i) = s.excited[static_cast<size_t>(i)];

    Eigen::VectorXcd coeffs = es.eigenvectors().adjoint() * psi;
    for (int i = 0; i < dim; ++i) {
        coeffs(i) *= std::exp(-kImag * (tau * es.eigenvalues()(i)));
    }
    psi = es.eigenvectors() * coeffs;

    JointState out = s;
    for (int i = 0; i < ng; ++i) out.ground[static_cast<size_t>(i)] = psi(i);
    for (int i = 0; i < ne; ++i) out.excited[static_cast<size_t>(i)] = psi(ng + i);
    return out;
}

}  // namespace

JointState evolve_joint(const JointState& s, double tau, OracleMethod method) {
    if (s.excited.size() + 1 != s.ground.size()) {
        throw std::invalid_argument("evolve_joint: inconsistent joint-state layout");
    }
    return method == OracleMethod::analytic ? evolve_joint_analytic(s, tau)
                                            : evolve_joint_dense(s, tau);
}

QubitDensity reduce_atom(const JointState& s) {
    Compensated<double> gg, ee;
    Compensated<Complex> ge;
    for (size_t n = 0; n < s.ground.size(); ++n) gg.add(std::norm(s.ground[n]));
    for (size_t n = 0; n < s.excited.size(); ++n) {
        ee.add(std::norm(s.excited[n]));
        ge.add(s.ground[n] * std::conj(s.excited[n]));
    }
    QubitDensity rho;
    rho.m(0, 0) = gg.value();
    rho.m(0, 1) = ge.value();
    rho.m(1, 0) = std::conj(ge.value());
    rho.m(1, 1) = ee.value();
    return rho;
}

std::vector<double> photon_distribution(const JointState& s) {
    std::vector<double> dist(s.ground.size());
    for (size_t n = 0; n < s.ground.size(); ++n) {
        double p = std::norm(s.ground[n]);
        if (n < s.excited.size()) p += std::norm(s.excited[n]);
        dist[n] = p;
    }
    return dist;
}

OracleResult oracle_evolve(const PureQubit& q, const CoherentField& field,
                           const EvolutionParams& params, OracleMethod method) {
    OracleResult res;
    res.joint = evolve_joint(joint_initial_state(q, field), params.tau, method);
    res.photon_dist = photon_distribution(res.joint);

    // Certificate: the top excitation sector {|g,cap>, |e,cap-1>} is the one
    // the cut severs; its population is bounded by the certified Poisson tail.
    // (Photon level cap-1 itself is physically reachable from the atomic
    // excitation on top of the last certified field level, so the check is on
    // the sector, not on the two raw photon levels.)
    const size_t cap = res.joint.ground.size() - 1;
    const double top =
        std::norm(res.joint.ground[cap]) + std::norm(res.joint.excited[cap - 1]);
    if (top > kCertificateMargin * field.tail_tol) {
        throw TruncationError("oracle_evolve: population " + std::to_string(top) +
                              " in the top excitation sector exceeds the truncation "
                              "certificate");
    }
    res.atom = reduce_atom(res.joint);
    require_density(res.atom, 1e-10, 1e-12, 1e-11);
    return res;
}

KrausSet kraus_set_from_oracle(const CoherentField& field, const EvolutionParams& params,
                               int guard_levels) {
    if (guard_levels < 0 || guard_levels > 2) {
        throw std::invalid_argument("kraus_set_from_oracle: guard_levels must be 0..2");
    }
    // Columns of K_n are <a,n|U|b>|alpha> for atom basis b = g, e. One level
    // beyond the requested top keeps every contributing sector complete, so
    // the extracted entries are exact.
    const int top = field.n_max() + guard_levels;
    const int cap = top + 1;
    const JointState col_g =
        evolve_joint(joint_initial_state_with_cap(PureQubit{1.0, 0.0}, field, cap),
                     params.tau);
    const JointState col_e =
        evolve_joint(joint_initial_state_with_cap(PureQubit{0.0, 1.0}, field, cap),
                     params.tau);
    KrausSet ks;
    ks.alpha_modulus = field.modulus;
    ks.tau = params.tau;
    ks.tail_tol = field.tail_tol;
    ks.ops.reserve(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        const size_t m = static_cast<size_t>(n);
        Mat2 k;
        k(0, 0) = col_g.ground[m];
        k(1, 0) = (m < col_g.excited.size()) ? col_g.excited[m] : Complex{};
        k(0, 1) = col_e.ground[m];
        k(1, 1) = (m < col_e.excited.size()) ? col_e.excited[m] : Complex{};
        ks.ops.push_back(k);
    }
    return ks;
}

QubitDensity phase_rotated_channel(const QubitDensity& rho, const CoherentField& field,
                                   const EvolutionParams& params) {
    require_density(rho, 1e-10);
    return apply_channel(rho, kraus_set_from_oracle(field, params, 2));
}

}  // namespace jcsim
