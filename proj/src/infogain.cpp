#include "jcsim/infogain.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace jcsim {

namespace {

// Per-outcome quadratic form M_n = K_n^dag K_n reduced to the three numbers
// that matter on the sphere: P(n|p) = a^2 m00 + b^2 m11 + sin(theta) Re(m01 e^{i phi}).
struct OutcomeForm {
    double m00 = 0.0;
    double m11 = 0.0;
    Complex m01{};
};

std::vector<OutcomeForm> outcome_forms(const KrausSet& ks) {
    std::vector<OutcomeForm> forms;
    forms.reserve(ks.ops.size());
    for (const Mat2& k : ks.ops) {
        const Mat2 m = k.adjoint() * k;
        forms.push_back({m(0, 0).real(), m(1, 1).real(), m(0, 1)});
    }
    return forms;
}

double eval_form(const OutcomeForm& f, double cos_half_sq, double sin_half_sq,
                 double sin_theta, double cos_phi, double sin_phi) {
    const double cross = f.m01.real() * cos_phi - f.m01.imag() * sin_phi;
    const double p = cos_half_sq * f.m00 + sin_half_sq * f.m11 + sin_theta * cross;
    return p > 0.0 ? p : 0.0;  // clip roundoff at the zero boundary
}

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Node-angle cache for one grid.
struct NodeTrig {
    double cos_half_sq, sin_half_sq, sin_theta, cos_phi, sin_phi;
};

std::vector<NodeTrig> node_trig(const SphereGrid& grid) {
    std::vector<NodeTrig> out;
    out.reserve(grid.size());
    for (const SpherePoint& p : grid.nodes) {
        const double ch = std::cos(0.5 * p.theta);
        const double sh = std::sin(0.5 * p.theta);
        out.push_back({ch * ch, sh * sh, std::sin(p.theta), std::cos(p.phi),
                       std::sin(p.phi)});
    }
    return out;
}

double aig_value(const CoherentField& field, const EvolutionParams& params,
                 const SphereGrid& grid, int guard_levels) {
    const KrausSet ks = kraus_set(field, params, guard_levels);
    const auto forms = outcome_forms(ks);
    const auto trig = node_trig(grid);
    const double four_pi = 4.0 * M_PI;

    Compensated<double> total;
    for (const OutcomeForm& f : forms) {
        const double pn = 0.5 * (f.m00 + f.m11);  // outcome probability, uniform prior
        if (pn < 1e-300) continue;
        Compensated<double> entropy;  // int P(.|n) log2 P(.|n) dOmega
        for (size_t k = 0; k < trig.size(); ++k) {
            const double pcond = eval_form(f, trig[k].cos_half_sq, trig[k].sin_half_sq,
                                           trig[k].sin_theta, trig[k].cos_phi,
                                           trig[k].sin_phi);
            entropy.add(grid.weights[k] * plog2p(pcond / (four_pi * pn)));
        }
        total.add(pn * entropy.value());
    }
    const double gain = std::log2(four_pi) + total.value();
    if (gain < -1e-10) {
        throw std::runtime_error("average_information_gain: negative value " +
                                 std::to_string(gain) + ", numerical inconsistency");
    }
    return gain;
}

}  // namespace

ConditionalWeights conditional_weights(int n, const CoherentField& field,
                                       const EvolutionParams& params) {
    if (n < 0) throw std::invalid_argument("conditional_weights: n < 0");
    if (!(field.modulus > 0.0)) {
        throw std::invalid_argument("conditional_weights: alpha must be > 0");
    }
    const double a = field.modulus;
    const double tau = params.tau;
    const double rn = std::sqrt(static_cast<double>(n));
    const double rn1 = std::sqrt(static_cast<double>(n) + 1.0);
    const double sn = std::sin(tau * rn);
    const double cn = std::cos(tau * rn);
    const double sn1 = std::sin(tau * rn1);
    const double cn1 = std::cos(tau * rn1);

    ConditionalWeights w;
    w.f1 = cn * cn + (a * a / (static_cast<double>(n) + 1.0)) * sn1 * sn1;
    w.f2 = cn1 * cn1 + (static_cast<double>(n) / (a * a)) * sn * sn;
    w.f3 = 0.5 * ((a / rn1) * std::sin(2.0 * tau * rn1) -
                  (n > 0 ? (rn / a) * std::sin(2.0 * tau * rn) : 0.0));
    return w;
}

double conditional_prob(int n, const KrausSet& ks, const SpherePoint& p) {
    if (n < 0 || n > ks.n_max()) {
        throw std::invalid_argument("conditional_prob: outcome index out of range");
    }
    const Mat2& k = ks.ops[static_cast<size_t>(n)];
    const Mat2 m = k.adjoint() * k;
    const double ch = std::cos(0.5 * p.theta);
    const double sh = std::sin(0.5 * p.theta);
    return eval_form({m(0, 0).real(), m(1, 1).real(), m(0, 1)}, ch * ch, sh * sh,
                     std::sin(p.theta), std::cos(p.phi), std::sin(p.phi));
}

double conditional_prob(int n, const CoherentField& field, const EvolutionParams& params,
                        const SpherePoint& p) {
    const int guard = std::max(2, n - field.n_max());
    return conditional_prob(n, kraus_set(field, params, guard), p);
}

double outcome_prob(int n, const CoherentField& field, const EvolutionParams& params) {
    const ConditionalWeights w = conditional_weights(n, field, params);
    return field.weight(n) * 0.5 * (w.f1 + w.f2);
}

std::vector<double> posterior(int n, const CoherentField& field,
                              const EvolutionParams& params, const SphereGrid& grid) {
    const double pn = outcome_prob(n, field, params);
    if (pn < 1e-300) {
        throw OutcomeImpossible("posterior: outcome n = " + std::to_string(n) +
                                " has probability " + std::to_string(pn));
    }
    const KrausSet ks = kraus_set(field, params, std::max(2, n - field.n_max()));
    const double norm = 4.0 * M_PI * pn;
    std::vector<double> dens;
    dens.reserve(grid.size());
    for (const SpherePoint& p : grid.nodes) {
        dens.push_back(conditional_prob(n, ks, p) / norm);
    }
    return dens;
}

double average_information_gain(const CoherentField& field, const EvolutionParams& params,
                                const SphereGrid& grid, const AigOptions& opt) {
    const double gain = aig_value(field, params, grid, opt.guard_levels);
    if (opt.convergence_guard) {
        const double refined = aig_value(field, params, grid.doubled(), opt.guard_levels);
        if (std::abs(refined - gain) > opt.guard_tol) {
            throw ConvergenceError(
                "average_information_gain: doubling the quadrature moved the result by " +
                std::to_string(refined - gain));
        }
    }
    return gain;
}

double average_state_radius(const CoherentField& field, const EvolutionParams& params,
                            const SphereGrid& grid, RadiusMethod method) {
    if (!field.has_zero_phase()) {
        throw std::invalid_argument("average_state_radius: field phase must be 0");
    }
    if (method == RadiusMethod::symmetry_shortcut) {
        return detail::bloch_evolve_components({0.0, 0.0, 0.0}, field, params.tau).r();
    }
    Compensated<double> X, Y, Z;
    for (size_t k = 0; k < grid.size(); ++k) {
        const BlochVector b = bloch_evolve(grid.nodes[k].to_qubit(), field, params);
        X.add(grid.weights[k] * b.x);
        Y.add(grid.weights[k] * b.y);
        Z.add(grid.weights[k] * b.z);
    }
    const double four_pi = 4.0 * M_PI;
    return BlochVector{X.value() / four_pi, Y.value() / four_pi, Z.value() / four_pi}.r();
}

GapPoint info_radius_gap_point(double tau, double alpha, const SphereGrid& grid,
                               double tail_tol, bool guard) {
    const CoherentField field = CoherentField::make(alpha, 0.0, tail_tol);
    const EvolutionParams params(tau);
    AigOptions opt;
    opt.convergence_guard = guard;
    GapPoint gp;
    gp.i_avg = average_information_gain(field, params, grid, opt);
    const double r = average_state_radius(field, params, grid);
    gp.r_avg_sq = r * r;
    gp.diff = gp.i_avg - kMaxAvgInfoGain * gp.r_avg_sq;
    return gp;
}

//=========================================================================
// Surfaces
//=========================================================================

namespace {

void require_axis(const std::vector<double>& axis, const char* name, bool positive) {
    if (axis.empty()) throw std::invalid_argument(std::string(name) + " axis is empty");
    for (size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i])) {
            throw std::invalid_argument(std::string(name) + " axis has non-finite entry");
        }
        if (positive && !(axis[i] > 0.0)) {
            throw std::invalid_argument(std::string(name) + " axis entries must be > 0");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw std::invalid_argument(std::string(name) +
                                        " axis must be strictly increasing");
        }
    }
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for every grid index on a worker pool. Results are stored by
// index inside fn, so output is identical for any worker count.
template <typename Fn>
void parallel_for_points(size_t total, int workers, Fn&& fn) {
    const int n_threads = std::min<size_t>(static_cast<size_t>(resolve_workers(workers)),
                                           std::max<size_t>(total, 1));
    if (n_threads <= 1) {
        for (size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&]() {
            for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

template <typename PointFn>
void run_surface(const std::vector<double>& tau_axis, const std::vector<double>& alpha_axis,
                 const SurfaceOptions& opt, std::vector<SurfaceFailure>* failures,
                 PointFn&& point_fn) {
    require_axis(tau_axis, "tau", false);
    require_axis(alpha_axis, "alpha", true);

    std::mutex mu;
    std::string first_error;
    SurfaceFailure first_failure;

    const size_t total = tau_axis.size() * alpha_axis.size();
    parallel_for_points(total, opt.workers, [&](size_t i) {
        const double tau = tau_axis[i / alpha_axis.size()];
        const double alpha = alpha_axis[i % alpha_axis.size()];
        try {
            point_fn(i, tau, alpha);
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(mu);
            if (failures != nullptr) {
                failures->push_back({tau, alpha, e.what()});
            } else if (first_error.empty()) {
                first_error = e.what();
                first_failure = {tau, alpha, e.what()};
            }
        }
    });

    if (failures == nullptr && !first_error.empty()) {
        throw std::runtime_error("surface point (tau = " + std::to_string(first_failure.tau) +
                                 ", alpha = " + std::to_string(first_failure.alpha) +
                                 "): " + first_error);
    }
    if (failures != nullptr) {
        // Deterministic report order regardless of worker scheduling.
        std::sort(failures->begin(), failures->end(),
                  [](const SurfaceFailure& a, const SurfaceFailure& b) {
                      return a.tau != b.tau ? a.tau < b.tau : a.alpha < b.alpha;
                  });
    }
}

}  // namespace

Surface aig_surface(const std::vector<double>& tau_axis,
                    const std::vector<double>& alpha_axis, const SphereGrid& grid,
                    const SurfaceOptions& opt, std::vector<SurfaceFailure>* failures) {
    Surface s;
    s.tau_axis = tau_axis;
    s.alpha_axis = alpha_axis;
    s.values.assign(tau_axis.size() * alpha_axis.size(),
                    std::numeric_limits<double>::quiet_NaN());
    run_surface(tau_axis, alpha_axis, opt, failures, [&](size_t i, double tau, double alpha) {
        const CoherentField field = CoherentField::make(alpha, 0.0, opt.tail_tol);
        AigOptions aopt;
        aopt.convergence_guard = opt.convergence_guard;
        s.values[i] = average_information_gain(field, EvolutionParams(tau), grid, aopt);
    });
    return s;
}

GapSurfaces aig_gap_surfaces(const std::vector<double>& tau_axis,
                             const std::vector<double>& alpha_axis, const SphereGrid& grid,
                             const SurfaceOptions& opt,
                             std::vector<SurfaceFailure>* failures) {
    GapSurfaces gs;
    for (Surface* s : {&gs.i_avg, &gs.r_avg_sq, &gs.diff}) {
        s->tau_axis = tau_axis;
        s->alpha_axis = alpha_axis;
        s->values.assign(tau_axis.size() * alpha_axis.size(),
                         std::numeric_limits<double>::quiet_NaN());
    }
    run_surface(tau_axis, alpha_axis, opt, failures, [&](size_t i, double tau, double alpha) {
        const GapPoint gp =
            info_radius_gap_point(tau, alpha, grid, opt.tail_tol, opt.convergence_guard);
        gs.i_avg.values[i] = gp.i_avg;
        gs.r_avg_sq.values[i] = gp.r_avg_sq;
        gs.diff.values[i] = gp.diff;
    });
    return gs;
}

Surface aig_minus_rsq_surface(const std::vector<double>& tau_axis,
                              const std::vector<double>& alpha_axis, const SphereGrid& grid,
                              const SurfaceOptions& opt,
                              std::vector<SurfaceFailure>* failures) {
    return aig_gap_surfaces(tau_axis, alpha_axis, grid, opt, failures).diff;
}

}  // namespace jcsim
