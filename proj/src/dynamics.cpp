#include "dengue/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dengue/errors.hpp"

namespace dengue {

double ModelVariant::family_epsilon() const
{
    switch (tag) {
    case Variant::Malthus1: return 1.0;
    case Variant::Malthus2: return 0.0;
    case Variant::Family: return epsilon;
    case Variant::Saturated: break;
    }
    throw DomainError("the saturated model is not a member of the epsilon family");
}

std::string ModelVariant::name() const
{
    switch (tag) {
    case Variant::Saturated: return "saturated";
    case Variant::Malthus1: return "malthus1";
    case Variant::Malthus2: return "malthus2";
    case Variant::Family: {
        std::ostringstream os;
        os << "family(eps=" << epsilon << ")";
        return os.str();
    }
    }
    return "unknown";
}

ModelVariant parse_variant(std::string_view name, double epsilon)
{
    if (name == "saturated") return ModelVariant::saturated();
    if (name == "malthus1") return ModelVariant::malthus1();
    if (name == "malthus2") return ModelVariant::malthus2();
    if (name == "family") return ModelVariant::family(epsilon);
    throw ConfigError("unknown model variant '" + std::string(name) +
                      "' (expected saturated, malthus1, malthus2 or family)");
}

namespace {

struct Rates {
    double du, dw, dv, dh, dI, dr;
};

inline Rates reaction(double u, double w, double v, double h, double I, double r,
                      const NondimParams& n, bool saturated, double eps)
{
    const double M = u + w;
    const double infect_m = n.beta1 * u * I;
    const double infect_h = n.beta2 * h * w;
    Rates k;
    if (saturated) {
        k.du = n.gamma / n.k * v * (1.0 - M) - n.mu1 * u - infect_m;
        k.dw = -n.mu1 * w + infect_m;
        k.dv = n.k * (1.0 - v) * M - (n.mu2 + n.gamma) * v;
    } else {
        const double growth = eps * n.gamma / n.k - n.mu1;
        k.du = n.gamma / n.k * v + growth * u - infect_m;
        k.dw = growth * w + infect_m;
        k.dv = n.k * M - (n.mu2 + n.gamma - eps * n.k) * v;
    }
    k.dh = (1.0 - h) * n.mu3 - infect_h;
    k.dI = infect_h - (n.sigma + n.mu3) * I;
    k.dr = n.sigma * I - n.mu3 * r;
    return k;
}

}  // namespace

HomogState homog_rhs(const HomogState& s, const NondimParams& n, const ModelVariant& m)
{
    const bool sat = m.tag == Variant::Saturated;
    const double eps = sat ? 0.0 : m.family_epsilon();
    const Rates k = reaction(s.u, s.w, s.v, s.h, s.I, s.r, n, sat, eps);
    return {k.du, k.dw, k.dv, k.dh, k.dI, k.dr};
}

GridFields::GridFields(std::size_t n, double spacing)
    : dx(spacing), u(n, 0.0), w(n, 0.0), v(n, 0.0), h(n, 0.0), I(n, 0.0), r(n, 0.0)
{
}

void GridFields::set(std::size_t i, const HomogState& s)
{
    u[i] = s.u;
    w[i] = s.w;
    v[i] = s.v;
    h[i] = s.h;
    I[i] = s.I;
    r[i] = s.r;
}

GridFields GridFields::constant(std::size_t n, double spacing, const HomogState& s)
{
    GridFields f(n, spacing);
    for (std::size_t i = 0; i < n; ++i) f.set(i, s);
    return f;
}

namespace {

void resize_like(GridFields& out, std::size_t n, double dx)
{
    out.dx = dx;
    for (auto* vec : {&out.u, &out.w, &out.v, &out.h, &out.I, &out.r}) vec->resize(n);
}

void scan_negative(const GridFields& f, RhsDiagnostics& diag)
{
    const std::size_t n = f.size();
    diag.min_value = f.u.empty() ? 0.0 : f.u[0];
    for (const auto* vec : {&f.u, &f.w, &f.v, &f.h, &f.I, &f.r}) {
        for (std::size_t i = 0; i < n; ++i) {
            const double x = (*vec)[i];
            if (x < 0.0) ++diag.negative_count;
            if (x < diag.min_value) {
                diag.min_value = x;
                diag.min_index = i;
            }
        }
    }
}

/// Adds the transport terms of one winged field to `du`.
void transport(const std::vector<double>& c, double ghost_l, double ghost_r,
               const std::vector<double>& face_coef, bool unit_coef, double two_nu, double q,
               double dx, std::vector<double>& du)
{
    const std::size_t n = c.size();
    const double inv_dx2 = 1.0 / (dx * dx);
    const double inv_dx = 1.0 / dx;
    auto val = [&](std::ptrdiff_t i) {
        if (i < 0) return ghost_l;
        if (i >= static_cast<std::ptrdiff_t>(n)) return ghost_r;
        return c[static_cast<std::size_t>(i)];
    };

    if (unit_coef) {
        du[0] += (val(1) - 2.0 * c[0] + ghost_l) * inv_dx2;
        for (std::size_t i = 1; i + 1 < n; ++i) du[i] += (c[i + 1] - 2.0 * c[i] + c[i - 1]) * inv_dx2;
        if (n > 1) du[n - 1] += (ghost_r - 2.0 * c[n - 1] + c[n - 2]) * inv_dx2;
    } else {
        // face_coef[j] holds the averaged Mᵖ on the face between cells j-1 and j.
        for (std::size_t i = 0; i < n; ++i) {
            const auto ii = static_cast<std::ptrdiff_t>(i);
            const double flux_r = face_coef[i + 1] * (val(ii + 1) - c[i]);
            const double flux_l = face_coef[i] * (c[i] - val(ii - 1));
            du[i] += (flux_r - flux_l) * inv_dx2;
        }
    }

    if (two_nu == 0.0) return;
    const bool plain = q == 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        const double grad = two_nu > 0.0 ? (c[i] - val(ii - 1)) * inv_dx : (val(ii + 1) - c[i]) * inv_dx;
        const double speed = plain ? two_nu : two_nu * std::pow(c[i], q);
        du[i] -= speed * grad;
    }
}

}  // namespace

RhsDiagnostics pde_rhs(const GridFields& f, const NondimParams& n, const ModelVariant& m,
                       GridFields& out, const SpatialOptions& opt)
{
    const std::size_t N = f.size();
    if (N < 5) throw DomainError("pde_rhs needs at least 5 grid cells");
    if (!(f.dx > 0.0)) throw DomainError("pde_rhs needs dx > 0");
    for (const auto* vec : {&f.w, &f.v, &f.h, &f.I, &f.r}) {
        if (vec->size() != N) throw DomainError("pde_rhs: field arrays have different lengths");
    }

    RhsDiagnostics diag;
    scan_negative(f, diag);

    const bool sat = m.tag == Variant::Saturated;
    const double eps = sat ? 0.0 : m.family_epsilon();
    resize_like(out, N, f.dx);

    for (std::size_t i = 0; i < N; ++i) {
        const Rates k = reaction(f.u[i], f.w[i], f.v[i], f.h[i], f.I[i], f.r[i], n, sat, eps);
        out.u[i] = k.du;
        out.w[i] = k.dw;
        out.v[i] = k.dv;
        out.h[i] = k.dh;
        out.I[i] = k.dI;
        out.r[i] = k.dr;
    }

    const bool fixed = opt.boundary == Boundary::FixedValue;
    const double ul = fixed ? opt.left_value.u : f.u.front();
    const double ur = fixed ? opt.right_value.u : f.u.back();
    const double wl = fixed ? opt.left_value.w : f.w.front();
    const double wr = fixed ? opt.right_value.w : f.w.back();

    // Face diffusivities; the saturated model always has constant diffusion.
    const bool unit = sat || n.p == 0.0;
    std::vector<double> faces;
    if (!unit) {
        auto mp = [&](double M, std::size_t where) {
            if (M < 0.0) {
                std::ostringstream os;
                os << "pde_rhs: total winged density M = " << M << " < 0 at cell " << where;
                throw DomainError(os.str());
            }
            if (n.p < 0.0) {
                if (opt.regularize) return std::pow(std::max(M, opt.M_floor), n.p);
                if (M == 0.0) {
                    std::ostringstream os;
                    os << "pde_rhs: degenerate diffusion M^p with p = " << n.p << " and M = 0 at cell "
                       << where << " (enable regularization)";
                    throw DegenerateError(os.str());
                }
            }
            return std::pow(M, n.p);
        };
        std::vector<double> cell(N + 2);
        cell[0] = mp(ul + wl, 0);
        cell[N + 1] = mp(ur + wr, N - 1);
        for (std::size_t i = 0; i < N; ++i) cell[i + 1] = mp(f.u[i] + f.w[i], i);
        faces.resize(N + 1);
        for (std::size_t j = 0; j <= N; ++j) faces[j] = 0.5 * (cell[j] + cell[j + 1]);
    } else {
        for (std::size_t i = 0; i < N; ++i) {
            if (f.u[i] + f.w[i] < 0.0) {
                std::ostringstream os;
                os << "pde_rhs: total winged density M = " << f.u[i] + f.w[i] << " < 0 at cell " << i;
                throw DomainError(os.str());
            }
        }
    }

    transport(f.u, ul, ur, faces, unit, n.two_nu(), sat ? 0.0 : n.q1, f.dx, out.u);
    transport(f.w, wl, wr, faces, unit, n.two_nu(), sat ? 0.0 : n.q2, f.dx, out.w);
    return diag;
}

WaveState travelwave_rhs(const WaveState& s, const NondimParams& n)
{
    const double c = s.c;
    if (c == 0.0) throw DomainError("traveling-wave system is singular at c = 0");

    const double M = s.Phi1 + s.Phi2;
    double Mp = 1.0;
    double dMp_term = 0.0;  // p M^{p-1} (Ψ₁ + Ψ₂)
    if (n.p != 0.0) {
        if (!(M > 0.0)) {
            std::ostringstream os;
            os << "traveling-wave profile degenerate: Phi1 + Phi2 = " << M << " with p = " << n.p;
            throw DegenerateError(os.str());
        }
        Mp = std::pow(M, n.p);
        dMp_term = n.p * std::pow(M, n.p - 1.0) * (s.Psi1 + s.Psi2);
    }

    const double eps = n.epsilon;
    const double growth = eps * n.gamma / n.k - n.mu1;
    const double adv1 = n.q1 == 0.0 ? n.two_nu() : n.two_nu() * std::pow(s.Phi1, n.q1);
    const double adv2 = n.q2 == 0.0 ? n.two_nu() : n.two_nu() * std::pow(s.Phi2, n.q2);
    const double infect_m = n.beta1 * s.Phi1 * s.Phi5;
    const double infect_h = n.beta2 * s.Phi2 * s.Phi4;

    WaveState d;
    d.z = s.z;
    d.c = c;
    d.Phi1 = s.Psi1;
    d.Psi1 = ((adv1 - c) * s.Psi1 - dMp_term * s.Psi1 - n.gamma / n.k * s.Phi3 - growth * s.Phi1 + infect_m) / Mp;
    d.Phi2 = s.Psi2;
    d.Psi2 = ((adv2 - c) * s.Psi2 - dMp_term * s.Psi2 - growth * s.Phi2 - infect_m) / Mp;
    d.Phi3 = (-n.k * M + (n.mu2 + n.gamma - eps * n.k) * s.Phi3) / c;
    d.Phi4 = (infect_h - n.mu3 * (1.0 - s.Phi4)) / c;
    d.Phi5 = (-infect_h + (n.sigma + n.mu3) * s.Phi5) / c;
    d.Phi6 = (-n.sigma * s.Phi5 + n.mu3 * s.Phi6) / c;
    return d;
}

}  // namespace dengue
