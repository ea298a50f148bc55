#include "dengue/pdesim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dengue/errors.hpp"

#if defined(__SSE__)
#include <xmmintrin.h>
#endif

namespace dengue {

namespace {

// Flush denormals to zero while stepping: the far tail of a pulled front
// otherwise spends most of the run in subnormal arithmetic.
class FlushDenormals {
public:
    FlushDenormals()
    {
#if defined(__SSE__)
        saved_ = _mm_getcsr();
        _mm_setcsr(saved_ | 0x8040u);
#endif
    }
    ~FlushDenormals()
    {
#if defined(__SSE__)
        _mm_setcsr(saved_);
#endif
    }
    FlushDenormals(const FlushDenormals&) = delete;
    FlushDenormals& operator=(const FlushDenormals&) = delete;

private:
    unsigned saved_ = 0;
};

}  // namespace

HomogTrajectory integrate_homog(const HomogState& s0, const NondimParams& n, const ModelVariant& m, double T,
                                double tol)
{
    if (!(T >= 0.0)) throw DomainError("integration horizon must be non-negative");
    OdeOptions opt;
    opt.tol = tol;
    auto f = [&](double, const std::array<double, 6>& y) {
        return homog_rhs(HomogState::from_array(y), n, m).to_array();
    };
    HomogTrajectory out;
    if (T == 0.0) {
        out.t.push_back(0.0);
        out.states.push_back(s0);
        return out;
    }
    const auto sol = dormand_prince_trajectory(f, 0.0, s0.to_array(), T, opt);
    out.t = sol.t;
    out.states.reserve(sol.y.size());
    for (const auto& y : sol.y) out.states.push_back(HomogState::from_array(y));
    out.accepted = sol.accepted;
    out.rejected = sol.rejected;
    return out;
}

std::vector<HomogState> integrate_homog_at(const HomogState& s0, const NondimParams& n, const ModelVariant& m,
                                           const std::vector<double>& times, double tol)
{
    OdeOptions opt;
    opt.tol = tol;
    for (double t : times) {
        if (!(t >= 0.0)) throw DomainError("output times must be non-negative");
    }
    auto f = [&](double, const std::array<double, 6>& y) {
        return homog_rhs(HomogState::from_array(y), n, m).to_array();
    };
    const auto sol = dormand_prince(f, 0.0, s0.to_array(), times, opt);
    std::vector<HomogState> out;
    out.reserve(sol.y.size());
    for (const auto& y : sol.y) out.push_back(HomogState::from_array(y));
    return out;
}

namespace {

auto wave_field(double c, const NondimParams& n)
{
    return [c, &n](double z, const std::array<double, 8>& y) {
        return travelwave_rhs(WaveState::from_array(y, z, c), n).to_array();
    };
}

OdeOptions profile_options(double tol)
{
    OdeOptions opt;
    opt.tol = tol;
    opt.max_norm = 1e12;
    return opt;
}

}  // namespace

ProfileTrajectory integrate_profile(double c, const NondimParams& n, WaveState start, double z_end, double tol)
{
    if (c == 0.0) throw DomainError("profile integration needs c != 0");
    start.c = c;
    ProfileTrajectory out;
    if (z_end == start.z) {
        out.points.push_back(start);
        return out;
    }
    const auto sol = dormand_prince_trajectory(wave_field(c, n), start.z, start.to_array(), z_end,
                                               profile_options(tol));
    for (std::size_t i = 0; i < sol.t.size(); ++i) out.points.push_back(WaveState::from_array(sol.y[i], sol.t[i], c));
    out.accepted = sol.accepted;
    out.rejected = sol.rejected;
    return out;
}

std::vector<WaveState> integrate_profile_at(double c, const NondimParams& n, WaveState start,
                                            const std::vector<double>& z_values, double tol)
{
    if (c == 0.0) throw DomainError("profile integration needs c != 0");
    start.c = c;
    const auto sol = dormand_prince(wave_field(c, n), start.z, start.to_array(), z_values, profile_options(tol));
    std::vector<WaveState> out;
    out.reserve(sol.t.size());
    for (std::size_t i = 0; i < sol.t.size(); ++i) out.push_back(WaveState::from_array(sol.y[i], sol.t[i], c));
    return out;
}

std::string to_string(TimeScheme s) { return s == TimeScheme::Euler ? "euler" : "rk2"; }
std::string to_string(Direction d) { return d == Direction::Rightward ? "right" : "left"; }

double SimConfig::dt_bound(const NondimParams& n, const ModelVariant& m, double max_M) const
{
    double coef = 1.0;
    if (m.tag != Variant::Saturated && n.p != 0.0) {
        if (!(max_M > 0.0)) throw DegenerateError("step bound undefined: max M = 0 with p != 0");
        coef = std::pow(max_M, n.p);
    }
    const double h = dx();
    return safety * h * h / (2.0 * coef);
}

void SimConfig::validate() const
{
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("domain length L must be positive");
    if (N < 5) throw DomainError("simulation needs at least 5 grid cells");
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("end time T must be positive");
    if (!(dt >= 0.0)) throw DomainError("dt must be non-negative (0 selects the stability bound)");
    if (!(safety > 0.0 && safety <= 1.0)) throw DomainError("safety factor must lie in (0, 1]");
    if (!(seed.amplitude >= 0.0)) throw DomainError("seed amplitude must be non-negative");
    if (!(seed.width > 0.0)) throw DomainError("seed width must be positive");
    if (seed.position && !(*seed.position >= 0.0 && *seed.position <= L)) {
        throw DomainError("seed position must lie inside [0, L]");
    }
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError("threshold theta must lie in (0, 1)");
    if (!(sample_interval > 0.0)) throw DomainError("sample interval must be positive");
    if (!(fit_fraction > 0.0 && fit_fraction <= 1.0)) throw DomainError("fit fraction must lie in (0, 1]");
    if (!(background_v > 0.0)) throw DomainError("background v* must be positive");
}

std::string SimConfig::describe() const
{
    std::ostringstream os;
    os.precision(10);
    os << "L = " << L << "\n"
       << "N = " << N << "\n"
       << "dx = " << dx() << "\n"
       << "dt = " << (dt > 0.0 ? std::to_string(dt) : std::string("auto")) << "\n"
       << "safety = " << safety << "\n"
       << "T = " << T << "\n"
       << "boundary = " << (boundary == Boundary::ZeroFlux ? "zero-flux" : "fixed-value") << "\n"
       << "scheme = " << to_string(scheme) << "\n"
       << "direction = " << to_string(direction) << "\n"
       << "kind = " << to_string(kind) << "\n"
       << "seed.amplitude = " << seed.amplitude << "\n"
       << "seed.width = " << seed.width << "\n"
       << "seed.position = " << (seed.position ? std::to_string(*seed.position) : std::string("boundary")) << "\n"
       << "theta = " << theta << "\n"
       << "sample_interval = " << sample_interval << "\n"
       << "fit_fraction = " << fit_fraction << "\n"
       << "snapshots = " << snapshots << "\n";
    return os.str();
}

HomogState saturated_plateau(const NondimParams& n)
{
    const double A = n.gamma + n.mu2;
    const double M = (n.gamma - n.mu1 * A) / (n.gamma + n.mu1 * n.k);
    if (!(M > 0.0)) throw NoFrontError("saturated model has no positive plateau (Q0 <= 1)");
    return {M, 0.0, n.k * M / (n.k * M + A), 1.0, 0.0, 0.0};
}

namespace {

HomogState dengue_background(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m)
{
    if (m.tag == Variant::Saturated) return saturated_plateau(n);
    if (m.family_epsilon() != 0.0) {
        throw NotImplementedError("dengue fronts need an equilibrium background; only eps = 0 provides one");
    }
    if (!(std::abs(basic_offspring(n) - 1.0) < kTolQ)) {
        throw DomainError("Malthusian dengue background needs Q0 = 1 (use mu2_for_unit_Q0)");
    }
    const double v = cfg.background_v;
    return {v * n.gamma / (n.k * n.mu1), 0.0, v, 1.0, 0.0, 0.0};
}

double seed_centre(const SimConfig& cfg)
{
    if (cfg.seed.position) return *cfg.seed.position;
    return cfg.direction == Direction::Rightward ? 0.0 : cfg.L;
}

}  // namespace

GridFields initial_fields(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m)
{
    cfg.validate();
    const double dx = cfg.dx();
    const HomogState background = cfg.kind == FrontKind::MosquitoInvasion ? HomogState{0, 0, 0, 1, 0, 0}
                                                                           : dengue_background(cfg, n, m);
    GridFields f = GridFields::constant(cfg.N, dx, background);
    const double x0 = seed_centre(cfg);
    for (std::size_t i = 0; i < cfg.N; ++i) {
        if (std::abs(f.x(i) - x0) > cfg.seed.width) continue;
        if (cfg.kind == FrontKind::MosquitoInvasion) {
            f.u[i] = cfg.seed.amplitude;
        } else {
            f.w[i] = cfg.seed.amplitude;
        }
    }
    return f;
}

WaveSpeedResult expected_front_speed(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m)
{
    if (m.tag != Variant::Saturated && m.family_epsilon() != 0.0) {
        throw NotImplementedError("linear spreading speed is only derived for the saturated and eps = 0 models");
    }
    const double sign = cfg.direction == Direction::Rightward ? 1.0 : -1.0;
    LinearFront f;
    if (cfg.kind == FrontKind::MosquitoInvasion) {
        f = linear_front(n, FrontKind::MosquitoInvasion);
    } else {
        const auto bg = dengue_background(cfg, n, m);
        f.A = n.sigma;
        f.K = n.beta1 * n.beta2 * bg.u * bg.h;
        f.mu1 = n.mu1;
    }
    f.two_nu = sign * n.two_nu();
    return min_wave_speed(f, cfg.kind);
}

namespace {

std::optional<double> front_position(const std::vector<double>& field, double thr, double dx, Direction dir)
{
    const std::size_t N = field.size();
    auto x = [&](std::size_t i) { return (static_cast<double>(i) + 0.5) * dx; };
    if (dir == Direction::Rightward) {
        for (std::size_t k = N; k-- > 0;) {
            if (field[k] < thr) continue;
            if (k + 1 == N) return x(k);
            return x(k) + (field[k] - thr) / (field[k] - field[k + 1]) * dx;
        }
    } else {
        for (std::size_t k = 0; k < N; ++k) {
            if (field[k] < thr) continue;
            if (k == 0) return x(k);
            return x(k) - (field[k] - thr) / (field[k] - field[k - 1]) * dx;
        }
    }
    return std::nullopt;
}

void fit_trace(FrontTrace& tr, double fit_fraction, Direction dir)
{
    const std::size_t n = tr.t.size();
    if (n < 3) {
        tr.status = FrontStatus::NoFront;
        return;
    }
    tr.fit_first = static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1.0 - fit_fraction)));
    tr.fit_first = std::min(tr.fit_first, n - 3);
    double st = 0, sx = 0, stt = 0, stx = 0;
    const double cnt = static_cast<double>(n - tr.fit_first);
    for (std::size_t i = tr.fit_first; i < n; ++i) {
        st += tr.t[i];
        sx += tr.x[i];
    }
    const double tm = st / cnt, xm = sx / cnt;
    double sxx = 0;
    for (std::size_t i = tr.fit_first; i < n; ++i) {
        stt += (tr.t[i] - tm) * (tr.t[i] - tm);
        stx += (tr.t[i] - tm) * (tr.x[i] - xm);
        sxx += (tr.x[i] - xm) * (tr.x[i] - xm);
    }
    if (stt == 0.0) {
        tr.status = FrontStatus::NoFront;
        return;
    }
    const double slope = stx / stt;
    tr.intercept = xm - slope * tm;
    tr.r_squared = sxx > 0.0 ? stx * stx / (stt * sxx) : 1.0;
    tr.speed = dir == Direction::Rightward ? slope : -slope;
    tr.status = FrontStatus::Measured;
}

void axpy(GridFields& y, double a, const GridFields& x)
{
    const std::size_t N = y.size();
    for (std::size_t i = 0; i < N; ++i) {
        y.u[i] += a * x.u[i];
        y.w[i] += a * x.w[i];
        y.v[i] += a * x.v[i];
        y.h[i] += a * x.h[i];
        y.I[i] += a * x.I[i];
        y.r[i] += a * x.r[i];
    }
}

double simplex_error(const GridFields& f)
{
    double e = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) e = std::max(e, std::abs(f.h[i] + f.I[i] + f.r[i] - 1.0));
    return e;
}

}  // namespace

SimResult simulate_front(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m)
{
    cfg.validate();
    if (cfg.kind == FrontKind::MosquitoInvasion && !(basic_offspring(n) > 1.0)) {
        throw NoFrontError("mosquito invasion needs Q0 > 1");
    }
    GridFields f = initial_fields(cfg, n, m);
    const double dx = cfg.dx();

    double max_M = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) max_M = std::max(max_M, f.u[i] + f.w[i]);
    if (m.tag == Variant::Saturated) max_M = std::max(max_M, 1.0);
    const double bound = cfg.dt_bound(n, m, max_M > 0.0 ? max_M : 1.0);
    if (cfg.dt > bound * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "dt = " << cfg.dt << " exceeds the explicit stability bound " << bound;
        throw DomainError(os.str());
    }
    const double dt_target = cfg.dt > 0.0 ? cfg.dt : bound;
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.T / dt_target - 1e-9));
    const double dt = cfg.T / static_cast<double>(steps);
    const auto sample_every =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.sample_interval / dt)));

    SimResult res;
    res.dt = dt;
    res.steps = steps;
    FrontTrace& tr = res.trace;
    const bool saturated_mosquito = m.tag == Variant::Saturated && cfg.kind == FrontKind::MosquitoInvasion;
    tr.u_ref = saturated_mosquito ? saturated_plateau(n).u : 10.0 * cfg.seed.amplitude;
    tr.threshold = cfg.theta * tr.u_ref;
    const auto& tracked = cfg.kind == FrontKind::MosquitoInvasion ? f.u : f.w;

    std::vector<std::size_t> snap_steps;
    if (cfg.snapshots == 1) snap_steps.push_back(steps);
    for (std::size_t j = 0; cfg.snapshots > 1 && j < cfg.snapshots; ++j) {
        snap_steps.push_back(static_cast<std::size_t>(std::llround(static_cast<double>(steps) * static_cast<double>(j) /
                                                                   static_cast<double>(cfg.snapshots - 1))));
    }
    std::size_t next_snap = 0;

    SpatialOptions opt;
    opt.boundary = cfg.boundary;
    if (cfg.boundary == Boundary::FixedValue) {
        opt.left_value = f.at(0);
        opt.right_value = f.at(f.size() - 1);
    }
    GridFields k1, k2, stage;

    auto observe = [&](std::size_t step) {
        const double t = static_cast<double>(step) * dt;
        res.max_simplex_error = std::max(res.max_simplex_error, simplex_error(f));
        while (next_snap < snap_steps.size() && snap_steps[next_snap] == step) {
            res.snapshots.push_back({t, f});
            ++next_snap;
        }
        if (step % sample_every != 0 && step != steps) return;
        if (const auto xf = front_position(tracked, tr.threshold, dx, cfg.direction)) {
            const bool near_edge =
                cfg.direction == Direction::Rightward ? *xf > cfg.L - 5.0 * dx : *xf < 5.0 * dx;
            if (near_edge && !(cfg.seed.amplitude > 0.0 && step == 0)) {
                std::ostringstream os;
                os << "front reached x = " << *xf << " (within 5 dx of the boundary) at t = " << t
                   << " before T = " << cfg.T << "; increase L";
                throw TruncationError(os.str());
            }
            tr.t.push_back(t);
            tr.x.push_back(*xf);
        }
    };

    FlushDenormals ftz;
    observe(0);
    for (std::size_t step = 1; step <= steps; ++step) {
        const auto diag = pde_rhs(f, n, m, k1, opt);
        if (diag.negative_count > 0) ++res.negative_samples;
        if (cfg.scheme == TimeScheme::Euler) {
            axpy(f, dt, k1);
        } else {
            stage = f;
            axpy(stage, dt, k1);
            pde_rhs(stage, n, m, k2, opt);
            axpy(f, 0.5 * dt, k1);
            axpy(f, 0.5 * dt, k2);
        }
        observe(step);
    }
    fit_trace(tr, cfg.fit_fraction, cfg.direction);
    return res;
}

std::string trace_csv(const FrontTrace& trace)
{
    std::string out = "t,x_front\n";
    char buf[96];
    for (std::size_t i = 0; i < trace.t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g\n", trace.t[i], trace.x[i]);
        out += buf;
    }
    return out;
}

std::string snapshot_csv(const Snapshot& s)
{
    std::string out = "x,u,w,v,h,I,r\n";
    char buf[256];
    const auto& f = s.fields;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", f.x(i), f.u[i], f.w[i], f.v[i],
                      f.h[i], f.I[i], f.r[i]);
        out += buf;
    }
    return out;
}

}  // namespace dengue
