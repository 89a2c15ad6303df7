#include "jcsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jcsim/asymptotics.hpp"
#include "jcsim/core.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/infogain.hpp"
#include "jcsim/initialization.hpp"
#include "jcsim/sphere.hpp"

namespace jcsim::cli {

namespace {

//=========================================================================
// Output helpers
//=========================================================================

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct Table {
    std::string command;
    std::map<std::string, std::string> config;  // resolved science parameters
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> trailing_comments;  // e.g. per-point failure flags
};

std::string config_line(const Table& t) {
    std::string line = "# jcsim " + t.command;
    for (const auto& [k, v] : t.config) line += " " + k + "=" + v;
    return line;
}

void write_csv(const Table& t, std::ostream& os) {
    os << config_line(t) << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << fmt_double(row[i]);
        }
        os << "\n";
    }
    for (const auto& c : t.trailing_comments) os << "# " << c << "\n";
}

void write_json(const Table& t, std::ostream& os) {
    nlohmann::json j;
    j["command"] = t.command;
    j["config"] = t.config;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    if (!t.trailing_comments.empty()) j["notes"] = t.trailing_comments;
    os << j.dump(2) << "\n";
}

struct OutputOptions {
    std::string path = "-";
    std::string outdir;
    std::string format = "csv";
};

std::string resolve_path(const OutputOptions& out, const std::string& path) {
    if (path == "-" || out.outdir.empty() || path.front() == '/') return path;
    return out.outdir + "/" + path;
}

void emit(const Table& t, const OutputOptions& out, const std::string& path) {
    const std::string resolved = resolve_path(out, path);
    const auto writer = (out.format == "json") ? write_json : write_csv;
    if (resolved == "-") {
        writer(t, std::cout);
        return;
    }
    std::ofstream os(resolved);
    if (!os) throw std::runtime_error("cannot open output file '" + resolved + "'");
    writer(t, os);
}

void emit(const Table& t, const OutputOptions& out) { emit(t, out, out.path); }

//=========================================================================
// Flag parsing helpers
//=========================================================================

std::vector<double> parse_range(const std::string& text, const std::string& flag) {
    // start:stop:count
    double start = 0.0, stop = 0.0;
    long count = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &start, &stop, &count, &extra) != 3 ||
        count < 1) {
        throw CLI::ValidationError(flag, "expected start:stop:count with count >= 1");
    }
    std::vector<double> axis;
    axis.reserve(static_cast<size_t>(count));
    if (count == 1) {
        axis.push_back(start);
        return axis;
    }
    for (long i = 0; i < count; ++i) {
        axis.push_back(start + (stop - start) * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
    }
    return axis;
}

Complex parse_complex(const std::string& s, const std::string& flag) {
    double re = 0.0, im = 0.0;
    char extra = 0;
    const int n = std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &extra);
    if (n == 1 || n == 2) return {re, im};
    throw CLI::ValidationError(flag, "expected re or re,im");
}

std::string range_repr(const std::vector<double>& axis) {
    if (axis.size() == 1) return fmt_double(axis.front());
    return fmt_double(axis.front()) + ":" + fmt_double(axis.back()) + ":" +
           std::to_string(axis.size());
}

//=========================================================================
// Subcommands
//=========================================================================

struct CommonOpts {
    OutputOptions out;
    double tail_tol = 1e-12;
    int workers = 0;
    std::string config_path;  // merged before parsing; see merge_config_args
};

void add_common(CLI::App* sub, CommonOpts& c, bool with_workers) {
    sub->add_option("-o,--output", c.out.path, "Output path, '-' for stdout");
    sub->add_option("--outdir", c.out.outdir, "Directory prefix for relative outputs")
        ->envname("JCSIM_OUTDIR");
    sub->add_option("--format", c.out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--tail-tol", c.tail_tol, "Certified Poisson tail bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (with_workers) {
        sub->add_option("-j,--workers", c.workers, "Worker threads (0 = machine parallelism)")
            ->envname("JCSIM_WORKERS");
    }
    sub->add_option("--config", c.config_path,
                    "Flat key=value config file; flags take precedence");
}

// Flat key=value config support. Values for keys not already present on the
// command line are appended as --key=value; explicit flags therefore win.
std::vector<std::string> merge_config_args(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) return args;

    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read config file '" + path + "'");

    const auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        for (const auto& a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        }
        return false;
    };
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::runtime_error("config file: expected key=value, got '" + line + "'");
        }
        const std::string key = line.substr(0, eq);
        if (!given(key)) args.push_back("--" + key + "=" + line.substr(eq + 1));
    }
    return args;
}

int run_evolve(const CommonOpts& c, const std::vector<double>& taus,
               const std::vector<double>& alphas, Complex cg, Complex ce) {
    const double norm = std::sqrt(std::norm(cg) + std::norm(ce));
    if (norm <= 0.0) throw std::runtime_error("evolve: zero state amplitudes");
    cg /= norm;
    ce /= norm;

    Table t;
    t.command = "evolve";
    t.config = {{"alpha", range_repr(alphas)},
                {"tau", range_repr(taus)},
                {"cg", fmt_double(cg.real()) + "," + fmt_double(cg.imag())},
                {"ce", fmt_double(ce.real()) + "," + fmt_double(ce.imag())},
                {"tail-tol", fmt_double(c.tail_tol)},
                {"format", c.out.format}};
    t.columns = {"tau", "alpha", "x", "y", "z", "r"};

    const PureQubit q{cg, ce};
    for (double alpha : alphas) {
        const CoherentField field = CoherentField::make(alpha, 0.0, c.tail_tol);
        for (double tau : taus) {
            const BlochVector b = bloch_evolve(q, field, EvolutionParams(tau));
            t.rows.push_back({tau, alpha, b.x, b.y, b.z, b.r()});
        }
    }
    emit(t, c.out);
    return 0;
}

int run_map(const CommonOpts& c, const std::string& command,
            const std::vector<double>& taus, const std::vector<double>& alphas,
            int theta_nodes, int phi_nodes, bool guard) {
    const SphereGrid grid = SphereGrid::gauss_legendre(theta_nodes, phi_nodes);
    SurfaceOptions opt;
    opt.workers = c.workers;
    opt.convergence_guard = guard;
    opt.tail_tol = c.tail_tol;
    std::vector<SurfaceFailure> failures;

    Table t;
    t.command = command;
    t.config = {{"tau-range", range_repr(taus)},
                {"alpha-range", range_repr(alphas)},
                {"theta-nodes", std::to_string(theta_nodes)},
                {"phi-nodes", std::to_string(phi_nodes)},
                {"guard", guard ? "1" : "0"},
                {"tail-tol", fmt_double(c.tail_tol)},
                {"format", c.out.format}};

    if (command == "aig-map") {
        const Surface s = aig_surface(taus, alphas, grid, opt, &failures);
        t.columns = {"tau", "alpha", "i_avg"};
        for (size_t i = 0; i < taus.size(); ++i) {
            for (size_t j = 0; j < alphas.size(); ++j) {
                t.rows.push_back({taus[i], alphas[j], s.at(i, j)});
            }
        }
    } else {
        const GapSurfaces gs = aig_gap_surfaces(taus, alphas, grid, opt, &failures);
        t.columns = {"tau", "alpha", "i_avg", "r_avg_sq", "diff"};
        for (size_t i = 0; i < taus.size(); ++i) {
            for (size_t j = 0; j < alphas.size(); ++j) {
                t.rows.push_back({taus[i], alphas[j], gs.i_avg.at(i, j),
                                  gs.r_avg_sq.at(i, j), gs.diff.at(i, j)});
            }
        }
    }
    for (const SurfaceFailure& f : failures) {
        t.trailing_comments.push_back("failed point tau=" + fmt_double(f.tau) +
                                      " alpha=" + fmt_double(f.alpha) + ": " + f.message);
    }
    emit(t, c.out);
    if (!failures.empty()) {
        std::cerr << "error: numeric-failure: " << failures.size()
                  << " grid point(s) failed; see output comments\n";
        return 3;
    }
    return 0;
}

std::string alpha_suffix_path(const std::string& path, double alpha) {
    const std::string tag = "_alpha" + fmt_double(alpha);
    const size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos) {
        return path + tag;
    }
    return path.substr(0, dot) + tag + path.substr(dot);
}

int run_ball_image(const CommonOpts& c, double tau, const std::vector<double>& alphas,
                   int iters, int points, double phase) {
    if (alphas.size() > 1 && c.out.path == "-") {
        throw std::runtime_error(
            "ball-image: multiple amplitudes need --output FILE (one file per amplitude)");
    }
    const SphereGrid sample = SphereGrid::fibonacci(points);
    for (double alpha : alphas) {
        Table t;
        t.command = "ball-image";
        t.config = {{"tau", fmt_double(tau)},
                    {"alpha", fmt_double(alpha)},
                    {"iters", std::to_string(iters)},
                    {"points", std::to_string(points)},
                    {"phase", fmt_double(phase)},
                    {"tail-tol", fmt_double(c.tail_tol)},
                    {"format", c.out.format}};
        t.columns = {"idx", "theta0", "phi0", "x", "y", "z", "iteration"};

        const IterationPlan plan{tau, alpha, phase, iters, c.tail_tol};
        for (size_t idx = 0; idx < sample.size(); ++idx) {
            const SpherePoint& p = sample.nodes[idx];
            const auto states = iterate_channel(density_from_pure(p.to_qubit()), plan);
            for (int it = 1; it <= iters; ++it) {
                const BlochVector b = bloch_from_density(states[static_cast<size_t>(it)]);
                t.rows.push_back({static_cast<double>(idx), p.theta, p.phi, b.x, b.y, b.z,
                                  static_cast<double>(it)});
            }
        }
        emit(t, c.out,
             alphas.size() > 1 ? alpha_suffix_path(c.out.path, alpha) : c.out.path);
    }
    return 0;
}

int run_init_search(const CommonOpts& c, double theta, double phi, int k, int iters,
                    double alpha_min, double alpha_max, int sample) {
    const InitializationSearch res = find_initialization_params(
        sphere_point(theta, phi), k, iters, alpha_min, alpha_max, sample);

    Table t;
    t.command = "init-search";
    t.config = {{"theta", fmt_double(theta)},   {"phi", fmt_double(phi)},
                {"k", std::to_string(k)},       {"iters", std::to_string(iters)},
                {"alpha-min", fmt_double(alpha_min)}, {"alpha-max", fmt_double(alpha_max)},
                {"sample", std::to_string(sample)},   {"format", c.out.format}};

    if (!res.bracket_ok) {
        t.columns = {"alpha", "centroid_theta"};
        for (const auto& [a, th] : res.scanned) t.rows.push_back({a, th});
        t.trailing_comments.push_back(
            "monotonicity bracket failed; scanned curve emitted instead of a point");
        emit(t, c.out);
        std::cerr << "error: bracket-failure: centroid polar angle not monotone over the "
                     "amplitude range\n";
        return 3;
    }
    t.columns = {"alpha", "phase", "x", "y", "z", "residual"};
    t.rows.push_back({res.alpha, res.phase, res.achieved.x, res.achieved.y, res.achieved.z,
                      res.residual});
    emit(t, c.out);
    return 0;
}

//=========================================================================
// validate: oracle-equivalence suite
//=========================================================================

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass() const { return deviation < tolerance; }
};

std::vector<PureQubit> validation_states(int count) {
    std::vector<PureQubit> states;
    states.reserve(static_cast<size_t>(count));
    for (const SpherePoint& p : SphereGrid::fibonacci(count).nodes) {
        states.push_back(p.to_qubit());
    }
    return states;
}

CheckResult check_closed_form_vs_oracle(double tail_tol) {
    CheckResult r{"closed-form vs oracle Bloch components", 0.0, 1e-8};
    const auto states = validation_states(20);
    for (double alpha : {0.3, 1.0, 2.0, 4.0}) {
        const CoherentField field = CoherentField::make(alpha, 0.0, tail_tol);
        for (double tau : {0.5, 2.0, 5.0, 11.0}) {
            const EvolutionParams params(tau);
            for (const PureQubit& q : states) {
                const BlochVector a = bloch_evolve(q, field, params);
                const BlochVector b = bloch_from_density(oracle_evolve(q, field, params).atom);
                r.deviation = std::max({r.deviation, std::abs(a.x - b.x),
                                        std::abs(a.y - b.y), std::abs(a.z - b.z)});
            }
        }
    }
    return r;
}

CheckResult check_kraus_completeness(double tail_tol) {
    CheckResult r{"Kraus completeness sum K^dag K = 1", 0.0, 1e-10};
    for (double alpha : {0.5, 1.0, 2.0, 3.0, 4.0}) {
        const CoherentField field = CoherentField::make(alpha, 0.0, tail_tol);
        for (double tau : {0.0, 1.0, 5.0, 10.0, 20.0}) {
            r.deviation = std::max(
                r.deviation, kraus_completeness_defect(kraus_set(field, EvolutionParams(tau))));
        }
    }
    return r;
}

CheckResult check_channel_consistency(double tail_tol) {
    CheckResult r{"Kraus channel vs closed form on pure states", 0.0, 1e-9};
    const auto states = validation_states(12);
    for (double alpha : {0.5, 2.0}) {
        const CoherentField field = CoherentField::make(alpha, 0.0, tail_tol);
        for (double tau : {1.0, 3.7}) {
            const EvolutionParams params(tau);
            const KrausSet ks = kraus_set(field, params, 2);
            for (const PureQubit& q : states) {
                const BlochVector a = bloch_evolve(q, field, params);
                const BlochVector b =
                    bloch_from_density(apply_channel(density_from_pure(q), ks));
                r.deviation = std::max({r.deviation, std::abs(a.x - b.x),
                                        std::abs(a.y - b.y), std::abs(a.z - b.z)});
            }
        }
    }
    return r;
}

CheckResult check_phase_covariance(double tail_tol) {
    CheckResult r{"field-phase covariance (z-rotation conjugation)", 0.0, 1e-7};
    for (double phi : {M_PI / 4.0, M_PI / 2.0, M_PI}) {
        const IterationPlan plan{2.5 * M_PI, 0.6, phi, 1, tail_tol};
        r.deviation = std::max(r.deviation, meridian_rotation_check(plan, 30).max_deviation);
    }
    return r;
}

CheckResult check_dense_oracle(double tail_tol) {
    CheckResult r{"analytic vs dense-eigendecomposition oracle", 0.0, 1e-10};
    const CoherentField field = CoherentField::make(2.0, M_PI / 4.0, tail_tol);
    const PureQubit q{0.6, Complex(0.0, 0.8)};
    for (double tau : {0.7, 3.7}) {
        const JointState s0 = joint_initial_state(q, field);
        const JointState a = evolve_joint(s0, tau, OracleMethod::analytic);
        const JointState d = evolve_joint(s0, tau, OracleMethod::dense);
        for (size_t i = 0; i < a.ground.size(); ++i) {
            r.deviation = std::max(r.deviation, std::abs(a.ground[i] - d.ground[i]));
        }
        for (size_t i = 0; i < a.excited.size(); ++i) {
            r.deviation = std::max(r.deviation, std::abs(a.excited[i] - d.excited[i]));
        }
    }
    return r;
}

int run_validate(const CommonOpts& c) {
    const std::vector<CheckResult> checks = {
        check_closed_form_vs_oracle(c.tail_tol), check_kraus_completeness(c.tail_tol),
        check_channel_consistency(c.tail_tol), check_phase_covariance(c.tail_tol),
        check_dense_oracle(c.tail_tol)};
    bool all_pass = true;
    for (const CheckResult& r : checks) {
        std::printf("%-52s max deviation %.3e (tolerance %.1e): %s\n", r.name.c_str(),
                    r.deviation, r.tolerance, r.pass() ? "PASS" : "FAIL");
        all_pass = all_pass && r.pass();
    }
    if (!all_pass) {
        std::cerr << "error: validation-failure: one or more checks exceeded tolerance\n";
        return 3;
    }
    return 0;
}

}  // namespace

//=========================================================================
// Entry points
//=========================================================================

int run(const std::vector<std::string>& args) {
    CLI::App app{"Jaynes-Cummings qubit/coherent-field information-transfer simulator"};
    app.name("jcsim");
    app.require_subcommand(1);

    int exit_code = 0;

    // evolve
    auto ev = std::make_shared<CommonOpts>();
    std::string ev_tau, ev_tau_range, ev_alpha_range;
    double ev_alpha = 1.0;
    std::string ev_cg = "1", ev_ce = "0";
    CLI::App* evolve = app.add_subcommand("evolve", "Closed-form Bloch evolution");
    add_common(evolve, *ev, false);
    evolve->add_option("--alpha", ev_alpha, "Coherent amplitude (real, >= 0)");
    evolve->add_option("--alpha-range", ev_alpha_range, "start:stop:count sweep");
    evolve->add_option("--tau", ev_tau, "Scaled interaction time");
    evolve->add_option("--tau-range", ev_tau_range, "start:stop:count sweep");
    evolve->add_option("--cg", ev_cg, "Ground amplitude re[,im]")->capture_default_str();
    evolve->add_option("--ce", ev_ce, "Excited amplitude re[,im]")->capture_default_str();
    evolve->callback([&, ev]() {
        std::vector<double> taus;
        if (!ev_tau_range.empty()) {
            taus = parse_range(ev_tau_range, "--tau-range");
        } else if (!ev_tau.empty()) {
            taus = {std::stod(ev_tau)};
        } else {
            throw CLI::RequiredError("evolve: --tau or --tau-range");
        }
        const std::vector<double> alphas = ev_alpha_range.empty()
                                               ? std::vector<double>{ev_alpha}
                                               : parse_range(ev_alpha_range, "--alpha-range");
        exit_code = run_evolve(*ev, taus, alphas, parse_complex(ev_cg, "--cg"),
                               parse_complex(ev_ce, "--ce"));
    });

    // aig-map / fig2-map
    for (const std::string name : {"aig-map", "fig2-map"}) {
        auto mc = std::make_shared<CommonOpts>();
        auto tau_range = std::make_shared<std::string>();
        auto alpha_range = std::make_shared<std::string>();
        auto theta_nodes = std::make_shared<int>(64);
        auto phi_nodes = std::make_shared<int>(64);
        auto guard = std::make_shared<bool>(false);
        CLI::App* sub = app.add_subcommand(
            name, name == "aig-map" ? "Average information gain over the (tau, alpha) plane"
                                    : "Information gain vs squared average-state radius");
        add_common(sub, *mc, true);
        sub->add_option("--tau-range", *tau_range, "start:stop:count")->required();
        sub->add_option("--alpha-range", *alpha_range, "start:stop:count")->required();
        sub->add_option("--theta-nodes", *theta_nodes, "Gauss-Legendre nodes in cos(theta)")
            ->capture_default_str();
        sub->add_option("--phi-nodes", *phi_nodes, "Uniform azimuthal nodes")
            ->capture_default_str();
        sub->add_flag("--guard", *guard, "Enable the quadrature convergence guard");
        sub->callback([&, name, mc, tau_range, alpha_range, theta_nodes, phi_nodes, guard]() {
            exit_code = run_map(*mc, name, parse_range(*tau_range, "--tau-range"),
                                parse_range(*alpha_range, "--alpha-range"), *theta_nodes,
                                *phi_nodes, *guard);
        });
    }

    // ball-image
    auto bc = std::make_shared<CommonOpts>();
    std::vector<double> bi_alphas;
    double bi_tau = 0.0, bi_phase = 0.0;
    int bi_tau_k = 0, bi_iters = 1, bi_points = 500;
    CLI::App* ball = app.add_subcommand("ball-image", "Bloch-ball image of the iterated channel");
    add_common(ball, *bc, false);
    ball->add_option("--tau", bi_tau, "Scaled interaction time");
    ball->add_option("--tau-k", bi_tau_k, "Shorthand: tau = (k - 1/2) pi");
    ball->add_option("--alpha", bi_alphas, "Coherent amplitude(s), comma separated")
        ->required()
        ->delimiter(',');
    ball->add_option("--iters", bi_iters, "Channel applications")->capture_default_str();
    ball->add_option("--points", bi_points, "Sphere sample size")->capture_default_str();
    ball->add_option("--phase", bi_phase, "Field phase (radians)")->capture_default_str();
    ball->callback([&, bc]() {
        const double tau = bi_tau_k > 0 ? (bi_tau_k - 0.5) * M_PI : bi_tau;
        exit_code = run_ball_image(*bc, tau, bi_alphas, bi_iters, bi_points, bi_phase);
    });

    // init-search
    auto ic = std::make_shared<CommonOpts>();
    double is_theta = 0.0, is_phi = 0.0, is_amin = 0.02, is_amax = 1.0;
    int is_k = 3, is_iters = 3, is_sample = 200;
    CLI::App* init = app.add_subcommand("init-search",
                                        "Find (alpha, phase) steering the channel fixed "
                                        "point to a target state");
    add_common(init, *ic, false);
    init->add_option("--theta", is_theta, "Target polar angle, [0, pi/2]")->required();
    init->add_option("--phi", is_phi, "Target azimuth")->capture_default_str();
    init->add_option("--k", is_k, "Interaction-time index, tau = (k - 1/2) pi")
        ->capture_default_str();
    init->add_option("--iters", is_iters, "Channel applications")->capture_default_str();
    init->add_option("--alpha-min", is_amin, "Search range lower edge")->capture_default_str();
    init->add_option("--alpha-max", is_amax, "Search range upper edge")->capture_default_str();
    init->add_option("--sample", is_sample, "Sphere sample size")->capture_default_str();
    init->callback([&, ic]() {
        exit_code = run_init_search(*ic, is_theta, is_phi, is_k, is_iters, is_amin, is_amax,
                                    is_sample);
    });

    // validate
    auto vc = std::make_shared<CommonOpts>();
    CLI::App* validate =
        app.add_subcommand("validate", "Run the oracle-equivalence suite and print deviations");
    add_common(validate, *vc, false);
    validate->callback([&, vc]() { exit_code = run_validate(*vc); });

    std::vector<std::string> merged;
    try {
        merged = merge_config_args(args);
    } catch (const std::exception& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }
    std::reverse(merged.begin(), merged.end());  // CLI11 consumes reversed args

    try {
        app.parse(std::move(merged));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: numeric-failure: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace jcsim::cli
