#include "dengue/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dengue/config.hpp"
#include "dengue/errors.hpp"
#include "dengue/io.hpp"
#include "dengue/pdesim.hpp"
#include "dengue/stability.hpp"
#include "dengue/symmetry.hpp"
#include "dengue/wavespeed.hpp"

namespace dengue {

namespace {

struct Source {
    std::string preset;
    std::string config;
    std::vector<std::string> overrides;
    bool force_q0_one = false;
};

void add_source_options(CLI::App* cmd, Source& s, const std::string& default_preset)
{
    s.preset = default_preset;
    cmd->add_option("--preset", s.preset, "built-in parameter set (table3-15C, table3-30C)")
        ->capture_default_str();
    cmd->add_option("--config", s.config, "YAML parameter file (overrides --preset)");
    cmd->add_option("--set", s.overrides, "override a dimensional parameter, key=value")->take_all();
    cmd->add_flag("--force-q0-one,!--no-force-q0-one", s.force_q0_one,
                  "replace mu2_bar by the value giving Q0 = 1");
}

RunConfig resolve(const Source& s)
{
    RunConfig cfg = s.config.empty() ? config_from_preset(s.preset) : load_config_file(s.config);
    for (const auto& kv : s.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw ConfigError("--set " + key + " needs a number, got '" + value + "'");
        }
        set_dimensional_field(cfg.dim, key, v);
        cfg.provenance += ", " + key + "=" + value;
    }
    try {
        cfg.dim.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (s.force_q0_one) cfg.apply_force_q0_one();
    return cfg;
}

RunManifest manifest_for(const std::string& sub, const RunConfig& cfg)
{
    RunManifest m;
    m.subcommand = sub;
    m.provenance = cfg.provenance;
    for (const auto& name : dimensional_field_names()) m.add(name, get_dimensional_field(cfg.dim, name));
    if (cfg.mu2_replaced) m.add("mu2_bar_replaced", *cfg.mu2_replaced);
    return m;
}

std::string num(double v)
{
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

void print_params_line(std::ostream& out, const RunConfig& cfg)
{
    out << "parameters: " << cfg.provenance << "\n";
    if (cfg.mu2_replaced) {
        out << "mu2_bar: " << num(cfg.dim.mu2_bar) << " (replaces " << num(*cfg.mu2_replaced)
            << " so that Q0 = 1)\n";
    }
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    Source src;
    double v_star = 0.7;
    double h_star = 1.0;
    bool printed_constant = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out)
{
    RunConfig cfg = resolve(a.src);
    cfg.variant = ModelVariant::malthus2();
    const NondimParams n = cfg.nondim();
    const auto ind = basic_reproduction(n, a.v_star, a.h_star);
    const auto sets = equilibria(n, cfg.variant);

    print_params_line(out, cfg);
    out << "Q0: " << num(ind.Q0) << "\n";
    out << "R0: " << num(ind.R0) << " (v_star=" << num(a.v_star) << ", h_star=" << num(a.h_star)
        << ", u_star=" << num(ind.u_star) << ")\n";
    out << "det_A: " << num(sets.det_A) << "\n";
    out << "equilibrium_sets:";
    for (auto s : sets.sets) out << " " << to_string(s);
    out << "\n";

    out << "\n[E0 h_star=" << num(a.h_star) << ", full6]\n" << to_text(classify(make_E0(a.h_star), n, Scope::Full6));
    if (sets.contains(EquilibriumSet::E1)) {
        out << "\n[E1 v_star=" << num(a.v_star) << " h_star=" << num(a.h_star) << ", full6]\n"
            << to_text(classify(make_E1(n, a.h_star, a.v_star), n, Scope::Full6));
        out << "\n[Eprime v_star=" << num(a.v_star) << ", mosquito2]\n"
            << to_text(classify(make_Eprime(n, a.v_star), n, Scope::Mosquito2));
    }
    out << "\n[origin, mosquito2]\n" << to_text(classify(make_Eprime(n, 0.0), n, Scope::Mosquito2));
    const auto ms = mosquito_jacobian_spectrum(
        n, a.printed_constant ? MosquitoConstant::AsPrinted : MosquitoConstant::CharacteristicPolynomial);
    out << "mosquito_constant_form: " << (a.printed_constant ? "printed" : "characteristic-polynomial") << "\n";
    out << "mosquito_eigenvalues:";
    for (const auto& z : ms.closed_form.eigenvalues) out << " (" << num(z.real()) << ", " << num(z.imag()) << ")";
    out << "\n";
    return kExitOk;
}

// -------------------------------------------------------------- wavespeed

struct WaveArgs {
    Source src;
    std::string kind = "mosquito";
    bool wind = false;
    double v_star = 0.7;
    double h_star = 1.0;
    std::string curve;
    std::size_t curve_points = 200;
};

int cmd_wavespeed(const WaveArgs& a, std::ostream& out)
{
    RunConfig cfg = resolve(a.src);
    const FrontKind kind = parse_front_kind(a.kind);
    if (!a.wind) cfg.dim.nu2_bar = 0.0;
    cfg.variant = ModelVariant::malthus2();
    const NondimParams n = cfg.nondim();
    const auto front = linear_front(n, kind, a.v_star, a.h_star);
    const auto res = min_wave_speed(front, kind, speed_scale(cfg.dim));

    print_params_line(out, cfg);
    out << "kind: " << to_string(kind) << "\n";
    out << "wind_km_per_year: " << num(km_per_day_to_km_per_year(cfg.dim.nu2_bar)) << "\n";
    if (kind == FrontKind::MosquitoInvasion) {
        out << "Q0: " << num(basic_offspring(n)) << "\n";
    } else {
        out << "R0: " << num(basic_reproduction(n, a.v_star, a.h_star).R0) << " (v_star=" << num(a.v_star)
            << ", h_star=" << num(a.h_star) << ")\n";
    }
    out << "c_min: " << num(res.c_min) << "\n";
    out << "m_star: " << num(res.m_star) << "\n";
    out << "c_bar_km_per_day: " << num(*res.c_bar_day) << "\n";
    out << "c_bar_km_per_year: " << num(*res.c_bar_year) << "\n";
    out << "tangency_residual_value: " << num(res.residual_value) << "\n";
    out << "tangency_residual_derivative: " << num(res.residual_derivative) << "\n";

    if (!a.curve.empty()) {
        const auto pts = dispersion_curve(front, res.m_star / 20.0, res.m_star * 20.0, a.curve_points);
        RunManifest m = manifest_for("wavespeed", cfg);
        m.add("kind", to_string(kind));
        m.add("v_star", a.v_star);
        m.add("h_star", a.h_star);
        m.add("c_min", res.c_min);
        m.add("m_star", res.m_star);
        std::string body = m.header() + "m,c\n";
        for (const auto& p : pts) body += format_double(p.m) + "," + format_double(p.c) + "\n";
        write_file_atomic(a.curve, body);
        out << "curve: " << a.curve << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
    Source src;
    double vmin = 0.1, vmax = 1.0, vstep = 0.1;
    double h_star = 1.0;
    std::string out_path;
};

int cmd_sweep(SweepArgs a, std::ostream& out)
{
    RunConfig cfg = resolve(a.src);
    if (!(a.vstep > 0.0)) throw ConfigError("--vstep must be positive");
    std::vector<double> vs;
    if (a.vmax >= a.vmin) {
        const auto count = static_cast<std::size_t>(std::floor((a.vmax - a.vmin) / a.vstep + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            // Round away the accumulated binary error so 0.1 + 2*0.1 prints as 0.3.
            vs.push_back(std::round((a.vmin + static_cast<double>(i) * a.vstep) * 1e12) / 1e12);
        }
    }
    const auto rows = sweep_vstar(cfg.dim, vs, {0.0, cfg.dim.nu2_bar}, a.h_star);
    RunManifest m = manifest_for("sweep", cfg);
    m.add("h_star", a.h_star);
    m.add("wind_km_per_year", km_per_day_to_km_per_year(cfg.dim.nu2_bar));
    const std::string body = m.header() + sweep_csv(rows);
    if (a.out_path.empty()) {
        out << body;
    } else {
        write_file_atomic(a.out_path, body);
        out << "rows: " << rows.size() << "\nwritten: " << a.out_path << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- simulate

struct SimArgs {
    Source src;
    std::string kind = "mosquito";
    std::string variant = "saturated";
    bool wind = false;
    bool dry_run = false;
    std::string scheme = "euler";
    std::string direction = "right";
    std::string boundary = "zero-flux";
    std::string out_dir;
    SimConfig sim;
};

int cmd_simulate(const SimArgs& a, std::ostream& out, std::ostream& err)
{
    RunConfig cfg = resolve(a.src);
    if (!a.wind) cfg.dim.nu2_bar = 0.0;
    cfg.variant = parse_variant(a.variant);
    SimConfig sim = a.sim;
    sim.kind = parse_front_kind(a.kind);
    if (a.scheme == "euler") {
        sim.scheme = TimeScheme::Euler;
    } else if (a.scheme == "rk2") {
        sim.scheme = TimeScheme::RK2;
    } else {
        throw ConfigError("--scheme must be euler or rk2");
    }
    if (a.direction == "right") {
        sim.direction = Direction::Rightward;
    } else if (a.direction == "left") {
        sim.direction = Direction::Leftward;
    } else {
        throw ConfigError("--direction must be right or left");
    }
    if (a.boundary == "zero-flux") {
        sim.boundary = Boundary::ZeroFlux;
    } else if (a.boundary == "fixed-value") {
        sim.boundary = Boundary::FixedValue;
    } else {
        throw ConfigError("--boundary must be zero-flux or fixed-value");
    }
    sim.validate();
    const NondimParams n = cfg.nondim();

    print_params_line(out, cfg);
    out << "variant: " << cfg.variant.name() << "\n";
    out << "wind_km_per_year: " << num(km_per_day_to_km_per_year(cfg.dim.nu2_bar)) << "\n";
    if (a.dry_run) {
        out << sim.describe() << "dry_run: nothing simulated\n";
        return kExitOk;
    }

    const auto res = simulate_front(sim, n, cfg.variant);
    if (res.trace.status == FrontStatus::NoFront) {
        err << "error code=" << kExitNumerical << " kind=no-front: no threshold crossing was detected\n";
        return kExitNumerical;
    }
    const double scale = km_per_day_to_km_per_year(speed_scale(cfg.dim));
    out << "status: measured\n";
    out << "dt: " << num(res.dt) << "\n";
    out << "steps: " << res.steps << "\n";
    out << "measured_speed: " << num(res.trace.speed) << "\n";
    out << "measured_km_per_year: " << num(res.trace.speed * scale) << "\n";
    out << "fit_r_squared: " << num(res.trace.r_squared) << "\n";
    try {
        const auto expect = expected_front_speed(sim, n, cfg.variant);
        out << "analytic_c_min: " << num(expect.c_min) << "\n";
        out << "analytic_km_per_year: " << num(expect.c_min * scale) << "\n";
        out << "relative_gap: " << num((res.trace.speed - expect.c_min) / expect.c_min) << "\n";
    } catch (const NotImplementedError& e) {
        out << "analytic_c_min: unavailable (" << e.what() << ")\n";
    }
    out << "max_simplex_error: " << num(res.max_simplex_error) << "\n";
    out << "negative_density_steps: " << res.negative_samples << "\n";

    if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        RunManifest m = manifest_for("simulate", cfg);
        m.add("variant", cfg.variant.name());
        std::istringstream lines(sim.describe());
        for (std::string line; std::getline(lines, line);) {
            const auto eq = line.find(" = ");
            m.add(line.substr(0, eq), line.substr(eq + 3));
        }
        m.add("measured_speed", res.trace.speed);
        const std::string head = m.header();
        const auto dir = std::filesystem::path(a.out_dir);
        write_file_atomic((dir / "front_trace.csv").string(), head + trace_csv(res.trace));
        for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
            write_file_atomic((dir / ("snapshot_" + std::to_string(k) + ".csv")).string(),
                              head + "# t: " + format_double(res.snapshots[k].t) + "\n" +
                                  snapshot_csv(res.snapshots[k]));
        }
        out << "written: " << a.out_dir << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- symcheck

struct SymArgs {
    Source src;
    std::string which = "translations";
    double a = 0.1;
    std::string sample = "wave";
    bool skip_admissibility = false;
    double tol_sol = 1e-6;
    std::optional<double> beta1, beta2, nu, mu3, sigma, p, q1, q2, epsilon;
};

// Parameters of the constraint row not pinned by the user are set so the case is admitted.
NondimParams admitted_params(const SymmetryGenerator& g, NondimParams n, const SymArgs& a)
{
    auto pinned = [&](const std::string& name) {
        if (name == "beta1") return a.beta1.has_value();
        if (name == "beta2") return a.beta2.has_value();
        if (name == "nu") return a.nu.has_value();
        if (name == "mu3") return a.mu3.has_value();
        if (name == "sigma") return a.sigma.has_value();
        if (name == "p") return a.p.has_value();
        if (name == "q1") return a.q1.has_value();
        if (name == "q2") return a.q2.has_value();
        return false;
    };
    auto slot = [&](const std::string& name) -> double& {
        if (name == "beta1") return n.beta1;
        if (name == "beta2") return n.beta2;
        if (name == "nu") return n.nu;
        if (name == "mu3") return n.mu3;
        if (name == "sigma") return n.sigma;
        if (name == "p") return n.p;
        if (name == "q1") return n.q1;
        return n.q2;
    };
    for (const auto& c : g.constraints) {
        if (pinned(c.parameter) || c.holds(n)) continue;
        switch (c.kind) {
        case Constraint::Kind::Zero: slot(c.parameter) = 0.0; break;
        case Constraint::Kind::NonZero: slot(c.parameter) = 0.01; break;
        case Constraint::Kind::HalfP: slot(c.parameter) = 0.5 * n.p; break;
        }
    }
    return n;
}

int cmd_symcheck(const SymArgs& a, std::ostream& out)
{
    const RunConfig cfg = resolve(a.src);
    NondimParams base = nondimensionalize(cfg.dim);
    auto set = [](double& slot, const std::optional<double>& v) {
        if (v) slot = *v;
    };
    set(base.beta1, a.beta1);
    set(base.beta2, a.beta2);
    set(base.nu, a.nu);
    set(base.mu3, a.mu3);
    set(base.sigma, a.sigma);
    set(base.p, a.p);
    set(base.q1, a.q1);
    set(base.q2, a.q2);
    set(base.epsilon, a.epsilon);
    base.validate(true);

    std::vector<SymmetryCase> cases;
    if (a.which == "translations") {
        cases = {SymmetryCase::TranslationX, SymmetryCase::TranslationT};
    } else if (a.which == "all") {
        for (const auto& g : symmetry_catalog()) cases.push_back(g.id);
    } else {
        cases = {parse_symmetry_case(a.which)};
    }
    SampleKind kind;
    if (a.sample == "wave") {
        kind = SampleKind::TravelingWave;
    } else if (a.sample == "homog") {
        kind = SampleKind::Homogeneous;
    } else {
        throw ConfigError("--sample must be wave or homog");
    }

    print_params_line(out, cfg);
    bool all_pass = true;
    for (const auto c : cases) {
        const auto& g = symmetry_generator(c);
        const NondimParams n = admitted_params(g, base, a);
        EquivarianceOptions opt;
        opt.tol_sol = a.tol_sol;
        opt.apply.check_admissibility = !a.skip_admissibility;
        if (opt.apply.check_admissibility) g.require_admitted(n);
        const auto rep = check_equivariance(g, n, solution_sample(n, kind), a.a, opt);
        out << "\n[" << to_string(c) << ": " << g.label << " = " << g.formula << "]\n";
        out << "active: beta1=" << num(n.beta1) << " beta2=" << num(n.beta2) << " nu=" << num(n.nu)
            << " mu3=" << num(n.mu3) << " sigma=" << num(n.sigma) << " p=" << num(n.p) << " q1=" << num(n.q1)
            << " q2=" << num(n.q2) << " epsilon=" << num(n.epsilon) << "\n";
        out << to_text(rep);
        all_pass = all_pass && rep.pass;
    }
    out << "\noverall: " << (all_pass ? "pass" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- errors

std::string one_line(std::string s)
{
    for (char& ch : s) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

std::pair<int, std::string> classify_error(const std::exception& e)
{
    if (dynamic_cast<const AdmissibilityError*>(&e)) return {kExitConfig, "admissibility"};
    if (dynamic_cast<const DomainError*>(&e)) return {kExitConfig, "domain"};
    if (dynamic_cast<const ConfigError*>(&e)) return {kExitConfig, "config"};
    if (dynamic_cast<const NotImplementedError*>(&e)) return {kExitConfig, "not-implemented"};
    if (dynamic_cast<const NoFrontError*>(&e)) return {kExitNumerical, "no-front"};
    if (dynamic_cast<const NoSolutionError*>(&e)) return {kExitNumerical, "no-solution"};
    if (dynamic_cast<const BracketError*>(&e)) return {kExitNumerical, "bracket"};
    if (dynamic_cast<const StiffnessError*>(&e)) return {kExitNumerical, "stiffness"};
    if (dynamic_cast<const TruncationError*>(&e)) return {kExitNumerical, "truncation"};
    if (dynamic_cast<const DivergenceError*>(&e)) return {kExitNumerical, "divergence"};
    if (dynamic_cast<const DegenerateError*>(&e)) return {kExitNumerical, "degenerate"};
    if (dynamic_cast<const NumericalError*>(&e)) return {kExitNumerical, "numerical"};
    return {kExitNumerical, "internal"};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dengue reaction-diffusion toolkit: stability, wave speeds, fronts, symmetries"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolkitVersion));

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Q0, R0, equilibrium sets and their stability");
    add_source_options(analyze, an.src, "table3-30C");
    analyze->add_option("--vstar", an.v_star, "aquatic equilibrium density v*")->capture_default_str();
    analyze->add_option("--hstar", an.h_star, "susceptible fraction h*")->capture_default_str();
    analyze->add_flag("--printed-constant", an.printed_constant,
                      "use the published constant term for the mosquito-plane eigenvalues");

    WaveArgs wa;
    auto* wave = app.add_subcommand("wavespeed", "minimum traveling-wave speed");
    add_source_options(wave, wa.src, "table3-30C");
    wave->add_option("--kind", wa.kind, "mosquito or dengue")->capture_default_str();
    wave->add_flag("--wind", wa.wind, "apply the configured wind 2*nu_bar (otherwise no wind)");
    wave->add_option("--vstar", wa.v_star, "v* for dengue fronts")->capture_default_str();
    wave->add_option("--hstar", wa.h_star, "h* for dengue fronts")->capture_default_str();
    wave->add_option("--emit-curve", wa.curve, "write (m, c(m)) samples to this CSV file");
    wave->add_option("--curve-points", wa.curve_points, "number of curve samples")->capture_default_str();

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "dengue c_min over a range of v* (with and without wind)");
    add_source_options(sweep, sw.src, "table3-15C");
    sw.src.force_q0_one = true;
    sweep->add_option("--vmin", sw.vmin)->capture_default_str();
    sweep->add_option("--vmax", sw.vmax)->capture_default_str();
    sweep->add_option("--vstep", sw.vstep)->capture_default_str();
    sweep->add_option("--hstar", sw.h_star)->capture_default_str();
    sweep->add_option("--out", sw.out_path, "CSV output file (default: stdout)");

    SimArgs si;
    auto* simulate = app.add_subcommand("simulate", "1-D front simulation with speed measurement");
    add_source_options(simulate, si.src, "table3-30C");
    simulate->add_option("--kind", si.kind, "mosquito or dengue")->capture_default_str();
    simulate->add_option("--variant", si.variant, "saturated, malthus1, malthus2")->capture_default_str();
    simulate->add_flag("--wind", si.wind, "apply the configured wind 2*nu_bar");
    simulate->add_flag("--dry-run", si.dry_run, "print the resolved configuration only");
    simulate->add_option("--L", si.sim.L, "domain length")->capture_default_str();
    simulate->add_option("--N", si.sim.N, "grid cells")->capture_default_str();
    simulate->add_option("--T", si.sim.T, "end time")->capture_default_str();
    simulate->add_option("--dt", si.sim.dt, "time step (0: stability bound)")->capture_default_str();
    simulate->add_option("--safety", si.sim.safety, "explicit-step safety factor")->capture_default_str();
    simulate->add_option("--scheme", si.scheme, "euler or rk2")->capture_default_str();
    simulate->add_option("--direction", si.direction, "right or left")->capture_default_str();
    simulate->add_option("--boundary", si.boundary, "zero-flux or fixed-value")->capture_default_str();
    simulate->add_option("--theta", si.sim.theta, "front threshold fraction")->capture_default_str();
    simulate->add_option("--seed-amplitude", si.sim.seed.amplitude)->capture_default_str();
    simulate->add_option("--seed-width", si.sim.seed.width)->capture_default_str();
    simulate->add_option("--seed-position", si.sim.seed.position, "default: the starting boundary");
    simulate->add_option("--background-v", si.sim.background_v, "v* of a Malthusian dengue background")
        ->capture_default_str();
    simulate->add_option("--sample-interval", si.sim.sample_interval)->capture_default_str();
    simulate->add_option("--fit-fraction", si.sim.fit_fraction)->capture_default_str();
    simulate->add_option("--snapshots", si.sim.snapshots)->capture_default_str();
    simulate->add_option("--out-dir", si.out_dir, "write front_trace.csv and snapshot_k.csv here");

    SymArgs sy;
    auto* symcheck = app.add_subcommand("symcheck", "numerical equivariance of the Lie point symmetries");
    add_source_options(symcheck, sy.src, "table3-30C");
    symcheck->add_option("--case", sy.which, "x, t, 1-7, translations or all")->capture_default_str();
    symcheck->add_option("--a", sy.a, "group parameter")->capture_default_str();
    symcheck->add_option("--sample", sy.sample, "wave or homog")->capture_default_str();
    symcheck->add_flag("--skip-admissibility", sy.skip_admissibility, "negative control: ignore the constraint row");
    symcheck->add_option("--tol-sol", sy.tol_sol)->capture_default_str();
    symcheck->add_option("--beta1", sy.beta1);
    symcheck->add_option("--beta2", sy.beta2);
    symcheck->add_option("--nu", sy.nu);
    symcheck->add_option("--mu3", sy.mu3);
    symcheck->add_option("--sigma", sy.sigma);
    symcheck->add_option("--p", sy.p);
    symcheck->add_option("--q1", sy.q1);
    symcheck->add_option("--q2", sy.q2);
    symcheck->add_option("--epsilon", sy.epsilon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help_out, help_err;
            app.exit(e, help_out, help_err);
            out << help_out.str() << help_err.str();
            return kExitOk;
        }
        err << "error code=" << kExitConfig << " kind=usage: " << one_line(e.what()) << "\n";
        return kExitConfig;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(an, out);
        if (wave->parsed()) return cmd_wavespeed(wa, out);
        if (sweep->parsed()) return cmd_sweep(sw, out);
        if (simulate->parsed()) return cmd_simulate(si, out, err);
        if (symcheck->parsed()) return cmd_symcheck(sy, out);
    } catch (const std::exception& e) {
        const auto [code, kind] = classify_error(e);
        err << "error code=" << code << " kind=" << kind << ": " << one_line(e.what()) << "\n";
        return code;
    }
    return kExitOk;
}

}  // namespace dengue
