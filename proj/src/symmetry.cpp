#include "dengue/symmetry.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "dengue/errors.hpp"
#include "dengue/ode.hpp"
#include "dengue/pdesim.hpp"

namespace dengue {

std::string to_string(SymmetryCase c)
{
    switch (c) {
    case SymmetryCase::TranslationX: return "translation-x";
    case SymmetryCase::TranslationT: return "translation-t";
    case SymmetryCase::Case1: return "case1";
    case SymmetryCase::Case2: return "case2";
    case SymmetryCase::Case3: return "case3";
    case SymmetryCase::Case4: return "case4";
    case SymmetryCase::Case5: return "case5";
    case SymmetryCase::Case6: return "case6";
    case SymmetryCase::Case7: return "case7";
    }
    return "?";
}

SymmetryCase parse_symmetry_case(std::string_view s)
{
    if (s == "x" || s == "X" || s == "translation-x") return SymmetryCase::TranslationX;
    if (s == "t" || s == "T" || s == "translation-t") return SymmetryCase::TranslationT;
    std::string_view digits = s;
    if (digits.substr(0, 4) == "case") digits.remove_prefix(4);
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '7') {
        return static_cast<SymmetryCase>(static_cast<int>(SymmetryCase::Case1) + (digits[0] - '1'));
    }
    throw ConfigError("unknown symmetry case '" + std::string(s) + "' (expected x, t or 1-7)");
}

namespace {

double param(const NondimParams& n, const std::string& name)
{
    if (name == "beta1") return n.beta1;
    if (name == "beta2") return n.beta2;
    if (name == "nu") return n.nu;
    if (name == "mu3") return n.mu3;
    if (name == "sigma") return n.sigma;
    if (name == "p") return n.p;
    if (name == "q1") return n.q1;
    if (name == "q2") return n.q2;
    throw DomainError("unknown constraint parameter " + name);
}

}  // namespace

bool Constraint::holds(const NondimParams& n) const
{
    const double v = param(n, parameter);
    switch (kind) {
    case Kind::Zero: return v == 0.0;
    case Kind::NonZero: return v != 0.0;
    case Kind::HalfP: return v == 0.5 * n.p;
    }
    return false;
}

std::string Constraint::describe() const
{
    switch (kind) {
    case Kind::Zero: return parameter + " = 0";
    case Kind::NonZero: return parameter + " != 0";
    case Kind::HalfP: return parameter + " = p/2";
    }
    return parameter;
}

std::optional<Constraint> SymmetryGenerator::violated(const NondimParams& n) const
{
    for (const auto& c : constraints) {
        if (!c.holds(n)) return c;
    }
    return std::nullopt;
}

void SymmetryGenerator::require_admitted(const NondimParams& n) const
{
    if (const auto c = violated(n)) {
        std::ostringstream os;
        os << to_string(id) << " (" << label << ") requires " << c->describe() << ", got " << c->parameter
           << " = " << param(n, c->parameter);
        throw AdmissibilityError(os.str());
    }
}

Eigen::Matrix3d SymmetryGenerator::uwv_coefficients() const
{
    Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
    switch (id) {
    case SymmetryCase::Case1: C = Eigen::Matrix3d::Identity(); break;
    case SymmetryCase::Case2:
    case SymmetryCase::Case3: C = 2.0 * Eigen::Matrix3d::Identity(); break;
    case SymmetryCase::Case4:
        C(0, 0) = 1.0;
        C(0, 1) = 1.0;
        C(2, 2) = 1.0;
        break;
    case SymmetryCase::Case5:
        C(0, 1) = 1.0;
        C(1, 1) = -1.0;
        break;
    default: break;
    }
    return C;
}

const std::vector<SymmetryGenerator>& symmetry_catalog()
{
    using K = Constraint::Kind;
    static const std::vector<SymmetryGenerator> catalog = {
        {SymmetryCase::TranslationX, "X", "d/dx", {}, ""},
        {SymmetryCase::TranslationT, "T", "d/dt", {}, ""},
        {SymmetryCase::Case1,
         "X2",
         "u d/du + w d/dw + v d/dv",
         {{"p", K::Zero}, {"beta2", K::Zero}, {"q1", K::Zero}, {"q2", K::Zero}},
         ""},
        {SymmetryCase::Case2,
         "X3",
         "p x d/dx + 2 (u d/du + w d/dw + v d/dv)",
         {{"beta2", K::Zero}, {"q1", K::HalfP}, {"q2", K::HalfP}},
         ""},
        {SymmetryCase::Case3, "X3", "p x d/dx + 2 (u d/du + w d/dw + v d/dv)", {{"beta2", K::Zero}, {"nu", K::Zero}}, ""},
        {SymmetryCase::Case4,
         "X4",
         "(u + w) d/du + v d/dv",
         {{"beta1", K::Zero}, {"p", K::Zero}, {"beta2", K::NonZero}, {"nu", K::Zero}},
         ""},
        {SymmetryCase::Case5,
         "X5",
         "w d/du - w d/dw",
         {{"beta1", K::Zero}, {"p", K::Zero}, {"beta2", K::Zero}, {"nu", K::Zero}},
         "beta2 = 0 enforced: the flow changes w, which enters the h and I equations through beta2 h w"},
        {SymmetryCase::Case6,
         "Xinf",
         "f d/dI + g d/dr, (f, g) solving the I and r equations",
         {{"beta1", K::Zero}, {"beta2", K::Zero}},
         "(f, g) = (F(x) e^{-(sigma+mu3) t}, e^{-mu3 t}(G(x) - F(x) e^{-sigma t})), F = 0.2 + 0.1 cos x, "
         "G = 0.1 sin x"},
        {SymmetryCase::Case7,
         "Xinf",
         "f1 d/du + ... + f6 d/dr, f solving the linear system",
         {{"beta1", K::Zero}, {"p", K::Zero}, {"beta2", K::Zero}, {"nu", K::Zero}},
         "f is a Fourier mode cos(x) e^{t(A - D)} f0 of the homogeneous linear system"},
    };
    return catalog;
}

const SymmetryGenerator& symmetry_generator(SymmetryCase c)
{
    for (const auto& g : symmetry_catalog()) {
        if (g.id == c) return g;
    }
    throw DomainError("symmetry case missing from catalog");
}

namespace {

using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;

Vector6d to_vec(const HomogState& s)
{
    Vector6d v;
    v << s.u, s.w, s.v, s.h, s.I, s.r;
    return v;
}

HomogState from_vec(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

// Homogeneous linear part of the system when beta1 = beta2 = p = nu = 0,
// with the -κ² diffusion of a cos(κx) mode on u and w.
Matrix6d linear_mode_matrix(const NondimParams& n, double kappa)
{
    const double growth = n.epsilon * n.gamma / n.k - n.mu1;
    Matrix6d A = Matrix6d::Zero();
    A(0, 0) = growth - kappa * kappa;
    A(0, 2) = n.gamma / n.k;
    A(1, 1) = growth - kappa * kappa;
    A(2, 0) = n.k;
    A(2, 1) = n.k;
    A(2, 2) = -(n.mu2 + n.gamma - n.epsilon * n.k);
    A(3, 3) = -n.mu3;
    A(4, 4) = -(n.sigma + n.mu3);
    A(5, 4) = n.sigma;
    A(5, 5) = -n.mu3;
    return A;
}

}  // namespace

FieldSample infinite_generator_solution(const SymmetryGenerator& g, const NondimParams& n)
{
    if (g.id == SymmetryCase::Case6) {
        const double sigma = n.sigma, mu3 = n.mu3;
        return [sigma, mu3](double x, double t) {
            const double F = 0.2 + 0.1 * std::cos(x);
            const double G = 0.1 * std::sin(x);
            HomogState s;
            s.I = F * std::exp(-(sigma + mu3) * t);
            s.r = std::exp(-mu3 * t) * (G - F * std::exp(-sigma * t));
            return s;
        };
    }
    if (g.id == SymmetryCase::Case7) {
        const Matrix6d A = linear_mode_matrix(n, 1.0);
        Vector6d f0;
        f0 << 0.1, 0.05, 0.08, 0.02, 0.03, 0.01;
        return [A, f0](double x, double t) {
            const Matrix6d E = (A * t).exp();
            return from_vec(std::cos(x) * (E * f0));
        };
    }
    throw DomainError(to_string(g.id) + " is not an infinite-dimensional generator");
}

std::array<double, 8> SymmetryGenerator::components(double x, double t, const HomogState& s,
                                                    const NondimParams& n) const
{
    std::array<double, 8> c{};
    switch (id) {
    case SymmetryCase::TranslationX: c[0] = 1.0; break;
    case SymmetryCase::TranslationT: c[1] = 1.0; break;
    case SymmetryCase::Case2:
    case SymmetryCase::Case3: c[0] = n.p * x; [[fallthrough]];
    case SymmetryCase::Case1:
    case SymmetryCase::Case4:
    case SymmetryCase::Case5: {
        const Eigen::Vector3d eta = uwv_coefficients() * Eigen::Vector3d(s.u, s.w, s.v);
        c[2] = eta[0];
        c[3] = eta[1];
        c[4] = eta[2];
        break;
    }
    case SymmetryCase::Case6:
    case SymmetryCase::Case7: {
        const auto f = infinite_generator_solution(*this, n)(x, t).to_array();
        for (std::size_t i = 0; i < 6; ++i) c[2 + i] = f[i];
        break;
    }
    }
    return c;
}

Eigen::Matrix3d uwv_group_matrix(const SymmetryGenerator& g, double a)
{
    const Eigen::Matrix3d C = g.uwv_coefficients();
    if (C.isZero()) return Eigen::Matrix3d::Identity();
    return (a * C).exp();
}

std::pair<double, double> transform_point(const SymmetryGenerator& g, double a, double x, double t,
                                          const NondimParams& n)
{
    switch (g.id) {
    case SymmetryCase::TranslationX: return {x + a, t};
    case SymmetryCase::TranslationT: return {x, t + a};
    case SymmetryCase::Case2:
    case SymmetryCase::Case3: return {std::exp(n.p * a) * x, t};
    default: return {x, t};
    }
}

FieldSample apply_group(const SymmetryGenerator& g, double a, FieldSample F, const NondimParams& n,
                        const ApplyOptions& opt)
{
    if (opt.check_admissibility) g.require_admitted(n);
    if (a == 0.0) return F;
    switch (g.id) {
    case SymmetryCase::TranslationX:
        return [F = std::move(F), a](double x, double t) { return F(x - a, t); };
    case SymmetryCase::TranslationT:
        return [F = std::move(F), a](double x, double t) { return F(x, t - a); };
    case SymmetryCase::Case6:
    case SymmetryCase::Case7: {
        auto f = infinite_generator_solution(g, n);
        return [F = std::move(F), f = std::move(f), a](double x, double t) {
            return from_vec(to_vec(F(x, t)) + a * to_vec(f(x, t)));
        };
    }
    default: break;
    }
    const Eigen::Matrix3d E = uwv_group_matrix(g, a);
    const double shrink = (g.id == SymmetryCase::Case2 || g.id == SymmetryCase::Case3) ? std::exp(-n.p * a) : 1.0;
    return [F = std::move(F), E, shrink](double x, double t) {
        HomogState s = F(shrink * x, t);
        const Eigen::Vector3d y = E * Eigen::Vector3d(s.u, s.w, s.v);
        s.u = y[0];
        s.w = y[1];
        s.v = y[2];
        return s;
    };
}

double ResidualSample::max() const
{
    double m = 0.0;
    for (double v : max_norm) m = std::max(m, v);
    return m;
}

ResidualSample residual(const FieldSample& F, const NondimParams& n, const SampleGrid& grid)
{
    if (grid.nx < 5 || grid.nt < 5) throw DomainError("residual grid needs at least 5 nodes in x and in t");
    if (!(grid.dx > 0.0 && grid.dt > 0.0)) throw DomainError("residual grid needs positive steps");

    const std::size_t nx = grid.nx, nt = grid.nt;
    std::vector<HomogState> val(nx * nt);
    for (std::size_t j = 0; j < nt; ++j) {
        for (std::size_t i = 0; i < nx; ++i) val[j * nx + i] = F(grid.x(i), grid.t(j));
    }
    auto at = [&](std::size_t i, std::size_t j) -> const HomogState& { return val[j * nx + i]; };

    ResidualSample out;
    out.grid = grid;
    out.nx_interior = nx - 4;
    out.nt_interior = nt - 4;
    for (auto& d : out.delta) d.reserve(out.nx_interior * out.nt_interior);

    const double ix1 = 1.0 / (12.0 * grid.dx), ix2 = 1.0 / (12.0 * grid.dx * grid.dx), it1 = 1.0 / (12.0 * grid.dt);
    auto d1 = [](double m2, double m1, double p1, double p2) { return m2 - 8.0 * m1 + 8.0 * p1 - p2; };
    auto d2 = [](double m2, double m1, double c, double p1, double p2) {
        return -m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2;
    };
    const double growth = n.epsilon * n.gamma / n.k - n.mu1;
    const double two_nu = n.two_nu();

    for (std::size_t j = 2; j + 2 < nt; ++j) {
        for (std::size_t i = 2; i + 2 < nx; ++i) {
            const HomogState& s = at(i, j);
            const auto &xm2 = at(i - 2, j), &xm1 = at(i - 1, j), &xp1 = at(i + 1, j), &xp2 = at(i + 2, j);
            const auto &tm2 = at(i, j - 2), &tm1 = at(i, j - 1), &tp1 = at(i, j + 1), &tp2 = at(i, j + 2);

            const double u_x = d1(xm2.u, xm1.u, xp1.u, xp2.u) * ix1;
            const double w_x = d1(xm2.w, xm1.w, xp1.w, xp2.w) * ix1;
            const double u_xx = d2(xm2.u, xm1.u, s.u, xp1.u, xp2.u) * ix2;
            const double w_xx = d2(xm2.w, xm1.w, s.w, xp1.w, xp2.w) * ix2;
            const double u_t = d1(tm2.u, tm1.u, tp1.u, tp2.u) * it1;
            const double w_t = d1(tm2.w, tm1.w, tp1.w, tp2.w) * it1;
            const double v_t = d1(tm2.v, tm1.v, tp1.v, tp2.v) * it1;
            const double h_t = d1(tm2.h, tm1.h, tp1.h, tp2.h) * it1;
            const double I_t = d1(tm2.I, tm1.I, tp1.I, tp2.I) * it1;
            const double r_t = d1(tm2.r, tm1.r, tp1.r, tp2.r) * it1;

            const double M = s.u + s.w;
            double diff_u = u_xx, diff_w = w_xx;
            if (n.p != 0.0) {
                const double Mp = std::pow(M, n.p);
                const double dMp = n.p * std::pow(M, n.p - 1.0) * (u_x + w_x);
                diff_u = Mp * u_xx + dMp * u_x;
                diff_w = Mp * w_xx + dMp * w_x;
            }
            const double adv_u = two_nu == 0.0 ? 0.0 : two_nu * (n.q1 == 0.0 ? 1.0 : std::pow(s.u, n.q1)) * u_x;
            const double adv_w = two_nu == 0.0 ? 0.0 : two_nu * (n.q2 == 0.0 ? 1.0 : std::pow(s.w, n.q2)) * w_x;
            const double infect_m = n.beta1 * s.u * s.I;
            const double infect_h = n.beta2 * s.h * s.w;

            out.delta[0].push_back(u_t - diff_u + adv_u - n.gamma / n.k * s.v - growth * s.u + infect_m);
            out.delta[1].push_back(w_t - diff_w + adv_w - growth * s.w - infect_m);
            out.delta[2].push_back(v_t - n.k * M + (n.mu2 + n.gamma - n.epsilon * n.k) * s.v);
            out.delta[3].push_back(h_t - (1.0 - s.h) * n.mu3 + infect_h);
            out.delta[4].push_back(I_t - infect_h + (n.sigma + n.mu3) * s.I);
            out.delta[5].push_back(r_t - n.sigma * s.I + n.mu3 * s.r);
        }
    }
    for (std::size_t e = 0; e < 6; ++e) {
        double m = 0.0;
        for (double v : out.delta[e]) m = std::max(m, std::abs(v));
        out.max_norm[e] = m;
    }
    return out;
}

Eigen::Matrix<double, 6, 6> expected_residual_map(const SymmetryGenerator& g, double a)
{
    Matrix6d L = Matrix6d::Identity();
    L.topLeftCorner<3, 3>() = uwv_group_matrix(g, a);
    return L;
}

FieldSample solution_sample(const NondimParams& n, SampleKind kind, double c)
{
    // Memoized: residual stencils revisit the same arguments.
    if (kind == SampleKind::Homogeneous) {
        const HomogState s0{0.6, 0.3, 0.4, 0.8, 0.1, 0.1};
        auto cache = std::make_shared<std::map<double, HomogState>>();
        const ModelVariant m = ModelVariant::family(n.epsilon);
        return [n, s0, m, cache](double, double t) {
            auto it = cache->find(t);
            if (it != cache->end()) return it->second;
            auto f = [&](double, const std::array<double, 6>& y) {
                return homog_rhs(HomogState::from_array(y), n, m).to_array();
            };
            OdeOptions opt;
            opt.tol = 1e-13;
            const auto sol = dormand_prince(f, 0.0, s0.to_array(), {t}, opt);
            const HomogState s = HomogState::from_array(sol.y.back());
            cache->emplace(t, s);
            return s;
        };
    }
    WaveState start;
    start.Phi1 = 0.6;
    start.Psi1 = -0.2;
    start.Phi2 = 0.3;
    start.Psi2 = 0.1;
    start.Phi3 = 0.4;
    start.Phi4 = 0.8;
    start.Phi5 = 0.1;
    start.Phi6 = 0.1;
    start.z = 0.0;
    start.c = c;
    auto cache = std::make_shared<std::map<double, HomogState>>();
    return [n, start, c, cache](double x, double t) {
        const double z = x - c * t;
        auto it = cache->find(z);
        if (it != cache->end()) return it->second;
        const auto pts = integrate_profile_at(c, n, start, {z}, 1e-13);
        const HomogState s = pts.back().fields();
        cache->emplace(z, s);
        return s;
    };
}

namespace {

FieldSample probe_of(FieldSample F, double amp)
{
    return [F = std::move(F), amp](double x, double t) {
        HomogState s = F(x, t);
        s.u += amp * (1.2 + std::sin(1.3 * x + 0.7 * t));
        s.w += amp * (1.1 + std::cos(0.9 * x - 0.4 * t));
        s.v += amp * std::sin(0.8 * x + 1.1 * t);
        s.h += amp * std::cos(1.7 * x + 0.3 * t);
        s.I += amp * std::sin(0.5 * x - 0.9 * t);
        s.r += amp * std::cos(0.6 * x + 0.2 * t);
        return s;
    };
}

SampleGrid image_grid(const SymmetryGenerator& g, double a, const SampleGrid& grid, const NondimParams& n)
{
    SampleGrid out = grid;
    const auto [x0, t0] = transform_point(g, a, grid.x0, grid.t0, n);
    out.x0 = x0;
    out.t0 = t0;
    if (g.id == SymmetryCase::Case2 || g.id == SymmetryCase::Case3) out.dx = std::exp(n.p * a) * grid.dx;
    return out;
}

}  // namespace

EquivarianceReport check_equivariance(const SymmetryGenerator& g, const NondimParams& n, const FieldSample& F,
                                      double a, const EquivarianceOptions& opt)
{
    EquivarianceReport rep;
    rep.id = g.id;
    rep.a = a;
    rep.tol_sol = opt.tol_sol;
    rep.admitted = !g.violated(n).has_value();
    if (opt.apply.check_admissibility) g.require_admitted(n);
    if (!g.note.empty()) rep.notes.push_back(g.note);
    if (!rep.admitted) rep.notes.push_back("admissibility check skipped: " + g.violated(n)->describe() + " violated");

    const auto base = residual(F, n, opt.grid);
    rep.sample_residual = base.max();
    if (!(rep.sample_residual <= opt.tol_sol)) {
        std::ostringstream os;
        os << "field sample is not a solution: max residual " << rep.sample_residual << " > tol_sol " << opt.tol_sol;
        throw DomainError(os.str());
    }

    const SampleGrid img = image_grid(g, a, opt.grid, n);
    const auto moved = residual(apply_group(g, a, F, n, opt.apply), n, img);

    const FieldSample probe = probe_of(F, opt.probe_amplitude);
    const auto probe_base = residual(probe, n, opt.grid);
    const auto probe_moved = residual(apply_group(g, a, probe, n, opt.apply), n, img);

    const Matrix6d L = expected_residual_map(g, a);
    const bool diagonal = L.isDiagonal();
    const std::size_t count = base.delta[0].size();
    rep.pass = true;
    for (std::size_t e = 0; e < 6; ++e) {
        EquationCheck& q = rep.equations[e];
        q.original_max = base.max_norm[e];
        q.transformed_max = moved.max_norm[e];
        q.expected_ratio = L(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(e));
        q.allowance = std::max(1.0, L.row(static_cast<Eigen::Index>(e)).cwiseAbs().sum()) * opt.tol_sol;
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            double expect = 0.0, expect_probe = 0.0;
            for (std::size_t j = 0; j < 6; ++j) {
                const double l = L(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(j));
                expect += l * base.delta[j][k];
                expect_probe += l * probe_base.delta[j][k];
            }
            q.deviation = std::max(q.deviation, std::abs(moved.delta[e][k] - expect));
            q.probe_deviation = std::max(q.probe_deviation, std::abs(probe_moved.delta[e][k] - expect_probe));
            num += probe_moved.delta[e][k] * probe_base.delta[e][k];
            den += probe_base.delta[e][k] * probe_base.delta[e][k];
        }
        q.ratio = den > 0.0 ? num / den : 1.0;

        double factor = std::max({q.transformed_max, q.deviation, q.probe_deviation}) / q.allowance;
        if (diagonal && den > 0.0) factor = std::max(factor, std::abs(q.ratio - q.expected_ratio) / opt.tol_sol);
        q.pass = factor <= 1.0;
        rep.failure_factor = std::max(rep.failure_factor, factor);
        rep.pass = rep.pass && q.pass;
    }
    return rep;
}

std::string to_text(const EquivarianceReport& r)
{
    std::ostringstream os;
    os.precision(10);
    os << "case: " << to_string(r.id) << "\n";
    os << "group_parameter: " << r.a << "\n";
    os << "admitted: " << (r.admitted ? "yes" : "no") << "\n";
    os << "tol_sol: " << r.tol_sol << "\n";
    os << "sample_residual: " << r.sample_residual << "\n";
    static const char* names[6] = {"Delta1", "Delta2", "Delta3", "Delta4", "Delta5", "Delta6"};
    for (std::size_t e = 0; e < 6; ++e) {
        const auto& q = r.equations[e];
        os << names[e] << ": ratio=" << q.ratio << " expected=" << q.expected_ratio
           << " transformed_max=" << q.transformed_max << " deviation=" << q.deviation
           << " probe_deviation=" << q.probe_deviation << " allowance=" << q.allowance << " "
           << (q.pass ? "pass" : "FAIL") << "\n";
    }
    os << "failure_factor: " << r.failure_factor << "\n";
    os << "result: " << (r.pass ? "pass" : "FAIL") << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace dengue
