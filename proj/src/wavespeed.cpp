#include "dengue/wavespeed.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dengue/errors.hpp"

namespace dengue {

std::string to_string(FrontKind k)
{
    return k == FrontKind::MosquitoInvasion ? "mosquito" : "dengue";
}

FrontKind parse_front_kind(std::string_view s)
{
    if (s == "mosquito" || s == "MosquitoInvasion") return FrontKind::MosquitoInvasion;
    if (s == "dengue" || s == "DengueDispersion") return FrontKind::DengueDispersion;
    throw ConfigError("unknown front kind '" + std::string(s) + "' (expected mosquito or dengue)");
}

LinearFront linear_front(const NondimParams& n, FrontKind kind, double v_star, double h_star)
{
    LinearFront f;
    f.mu1 = n.mu1;
    f.two_nu = n.two_nu();
    if (kind == FrontKind::MosquitoInvasion) {
        f.A = n.gamma + n.mu2;
        f.K = n.gamma;
    } else {
        const auto ind = basic_reproduction(n, v_star, h_star);
        f.A = n.sigma;
        f.K = n.mu1 * n.sigma * ind.R0;
    }
    return f;
}

namespace {

struct Root {
    double y;
    double dy;  ///< dy/dm
};

// Larger root of (y - B)(y + A) = K and its derivative in m.
Root dispersion_root(double m, const LinearFront& f)
{
    const double B = m * m + f.two_nu * m - f.mu1;
    const double s = std::sqrt((f.A + B) * (f.A + B) + 4.0 * f.K);
    const double y = (B - f.A >= 0.0) ? 0.5 * ((B - f.A) + s) : -2.0 * (f.A * B + f.K) / ((B - f.A) - s);
    const double dB = 2.0 * m + f.two_nu;
    return {y, dB * (y + f.A) / (2.0 * y + f.A - B)};
}

void check_front(const LinearFront& f, FrontKind kind)
{
    if (!f.has_front()) {
        throw NoFrontError(kind == FrontKind::MosquitoInvasion ? "no mosquito front: Q0 <= 1"
                                                                : "no dengue front: R0 <= 1");
    }
}

// Derivative of c(m) = y/m up to the factor 1/m².
double slope(double m, const LinearFront& f)
{
    const auto r = dispersion_root(m, f);
    return m * r.dy - r.y;
}

}  // namespace

double dispersion_speed(double m, const LinearFront& f)
{
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("decay rate m must be positive and finite");
    if (!f.has_front()) throw NoFrontError("no front: K <= mu1 A");
    return dispersion_root(m, f).y / m;
}

double dispersion_speed(double m, const NondimParams& n, FrontKind kind, double v_star, double h_star)
{
    const auto f = linear_front(n, kind, v_star, h_star);
    check_front(f, kind);
    return dispersion_speed(m, f);
}

CubicPoly cubic_phat(const LinearFront& f, double c, CubicTag tag)
{
    if (c == 0.0 || !std::isfinite(c)) throw DomainError("cubic_phat needs a finite nonzero speed");
    const double a = f.two_nu - c;
    const double b = f.A / c;
    CubicPoly p;
    p.a2 = -(a + b);
    p.a1 = a * b - f.mu1;
    p.a0 = (f.mu1 * f.A - f.K) / c;
    p.tag = tag;
    return p;
}

CubicPoly cubic_phat(const NondimParams& n, double c, FrontKind kind, double v_star, double h_star)
{
    return cubic_phat(linear_front(n, kind, v_star, h_star), c,
                      kind == FrontKind::MosquitoInvasion ? CubicTag::Phat1 : CubicTag::Phat3);
}

WaveSpeedResult min_wave_speed(const LinearFront& f, FrontKind kind, std::optional<double> scale_km_per_day)
{
    check_front(f, kind);
    auto speed = [&](double m) { return dispersion_speed(m, f); };

    constexpr int kMaxDoublings = 60;
    WaveSpeedResult res;
    res.kind = kind;

    // Bracket [lo, hi] around an interior point with a smaller speed.
    double lo = 1e-3, mid = 2e-3;
    double c_lo = speed(lo), c_mid = speed(mid);
    double hi = 0.0;
    int steps = 1;
    if (c_mid >= c_lo) {
        // Minimum lies below the starting point; halve instead.
        hi = mid;
        mid = lo;
        c_mid = c_lo;
        for (;;) {
            lo = 0.5 * mid;
            c_lo = speed(lo);
            if (c_lo > c_mid) break;
            hi = mid;
            mid = lo;
            c_mid = c_lo;
            if (++steps > kMaxDoublings) throw BracketError("could not bracket the minimum speed below m = 1e-3");
        }
    } else {
        for (;;) {
            hi = 2.0 * mid;
            const double c_hi = speed(hi);
            if (c_hi > c_mid) break;
            lo = mid;
            mid = hi;
            c_mid = c_hi;
            if (++steps > kMaxDoublings) {
                throw BracketError("could not bracket the minimum speed after 60 doublings");
            }
        }
    }
    res.doublings = steps;

    // Golden section.
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = speed(x1), f2 = speed(x2);
    while (b - a > 1e-10 * 0.5 * (a + b)) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = speed(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = speed(x2);
        }
    }
    double m = 0.5 * (a + b);

    // Secant polish on the stationarity condition.
    double m_prev = m * (1.0 + 1e-6);
    double s_prev = slope(m_prev, f), s = slope(m, f);
    for (int it = 0; it < 30 && s != 0.0 && s != s_prev; ++it) {
        const double next = m - s * (m - m_prev) / (s - s_prev);
        if (!(next > lo && next < hi)) break;
        const double s_next = slope(next, f);
        if (std::abs(s_next) >= std::abs(s)) break;
        m_prev = m;
        s_prev = s;
        m = next;
        s = s_next;
        if (std::abs(m - m_prev) <= 4e-16 * m) break;
    }

    res.m_star = m;
    res.c_min = speed(m);
    const auto cubic = cubic_phat(f, res.c_min,
                                  kind == FrontKind::MosquitoInvasion ? CubicTag::Phat1 : CubicTag::Phat3);
    res.residual_value = std::abs(cubic(-m));
    res.residual_derivative = std::abs(cubic.derivative(-m));
    if (res.residual_value > 1e-8 || res.residual_derivative > 1e-8) {
        std::ostringstream os;
        os << "tangency check failed at m* = " << m << ": |P| = " << res.residual_value
           << ", |dP/dlambda| = " << res.residual_derivative;
        throw NumericalError(os.str());
    }
    if (scale_km_per_day) {
        res.c_bar_day = res.c_min * *scale_km_per_day;
        res.c_bar_year = km_per_day_to_km_per_year(*res.c_bar_day);
    }
    return res;
}

WaveSpeedResult min_wave_speed(const NondimParams& n, FrontKind kind, double v_star, double h_star,
                               std::optional<double> scale_km_per_day)
{
    return min_wave_speed(linear_front(n, kind, v_star, h_star), kind, scale_km_per_day);
}

WaveSpeedResult min_wave_speed(const DimensionalParams& d, FrontKind kind, double v_star, double h_star)
{
    return min_wave_speed(nondimensionalize(d), kind, v_star, h_star, speed_scale(d));
}

namespace {

void require_wave_descriptor(const EquilibriumDescriptor& p, const NondimParams& n, double c)
{
    if (p.set != EquilibriumSet::Ehat0 && p.set != EquilibriumSet::Ehat1) {
        throw DomainError("wave Jacobian requested for " + to_string(p.set) + " descriptor");
    }
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("wave Jacobian needs c > 0");
    if (n.mu3 != 0.0 || n.epsilon != 0.0 || n.p != 0.0 || n.q1 != 0.0 || n.q2 != 0.0) {
        throw DomainError("wave Jacobians assume mu3 = 0, eps = 0 and p = q1 = q2 = 0");
    }
    if (p.set == EquilibriumSet::Ehat1) {
        if (!(std::abs(basic_offspring(n) - 1.0) < kTolQ)) throw DomainError("Ehat1 requires Q0 = 1");
        const double u = p.v_star * n.gamma / (n.k * n.mu1);
        if (std::abs(u - p.u_star) > 1e-12 * std::max(1.0, std::abs(u))) {
            throw DomainError("Ehat1 descriptor does not match parameters: u* != v* gamma / (k mu1)");
        }
    }
}

}  // namespace

Matrix8 wave_jacobian(const EquilibriumDescriptor& p, const NondimParams& n, double c)
{
    require_wave_descriptor(p, n, c);
    // Ordering (Φ₁, Ψ₁, Φ₂, Ψ₂, Φ₃, Φ₄, Φ₅, Φ₆).
    const double a = n.two_nu() - c;
    const double b1u = n.beta1 * p.u_star;
    const double b2h = n.beta2 * p.h_star;
    Matrix8 J = Matrix8::Zero();
    J(0, 1) = 1.0;
    J(1, 0) = n.mu1;
    J(1, 1) = a;
    J(1, 4) = -n.gamma / n.k;
    J(1, 6) = b1u;
    J(2, 3) = 1.0;
    J(3, 2) = n.mu1;
    J(3, 3) = a;
    J(3, 6) = -b1u;
    J(4, 0) = -n.k / c;
    J(4, 2) = -n.k / c;
    J(4, 4) = (n.gamma + n.mu2) / c;
    J(5, 2) = b2h / c;
    J(6, 2) = -b2h / c;
    J(6, 6) = n.sigma / c;
    J(7, 6) = -n.sigma / c;
    return J;
}

std::vector<Poly> wave_char_factors(const EquilibriumDescriptor& p, const NondimParams& n, double c)
{
    require_wave_descriptor(p, n, c);
    const auto mosquito = cubic_phat(linear_front(n, FrontKind::MosquitoInvasion), c, CubicTag::Phat1).poly();
    const Poly lambda_sq{0.0, 0.0, 1.0};
    if (p.set == EquilibriumSet::Ehat0) {
        const Poly p0{-n.mu1, -(n.two_nu() - c), 1.0};
        return {lambda_sq, Poly{-n.sigma / c, 1.0}, p0, mosquito};
    }
    LinearFront dengue;
    dengue.A = n.sigma;
    dengue.K = n.beta1 * n.beta2 * p.u_star * p.h_star;
    dengue.mu1 = n.mu1;
    dengue.two_nu = n.two_nu();
    return {lambda_sq, mosquito, cubic_phat(dengue, c, CubicTag::Phat3).poly()};
}

std::vector<CurvePoint> dispersion_curve(const LinearFront& f, double m_lo, double m_hi, std::size_t count)
{
    if (!(m_lo > 0.0 && m_hi > m_lo)) throw DomainError("curve range needs 0 < m_lo < m_hi");
    if (count < 2) throw DomainError("curve needs at least two samples");
    std::vector<CurvePoint> out;
    out.reserve(count);
    const double ratio = std::log(m_hi / m_lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double m = m_lo * std::exp(ratio * static_cast<double>(i));
        out.push_back({m, dispersion_speed(m, f)});
    }
    return out;
}

std::vector<SweepRow> sweep_vstar(const DimensionalParams& base, const std::vector<double>& v_list,
                                  const std::vector<double>& winds_km_per_day, double h_star)
{
    std::vector<SweepRow> rows(v_list.size());
    for (std::size_t i = 0; i < v_list.size(); ++i) {
        if (!(v_list[i] > 0.0)) throw DomainError("sweep values of v* must be positive");
        rows[i].v_star = v_list[i];
    }
    for (double wind : winds_km_per_day) {
        DimensionalParams d = base;
        d.nu2_bar = wind;
        const auto n = nondimensionalize(d);
        const double scale = speed_scale(d);
        for (auto& row : rows) {
            try {
                row.c_bar_year.push_back(*min_wave_speed(n, FrontKind::DengueDispersion, row.v_star, h_star, scale)
                                              .c_bar_year);
            } catch (const NoFrontError&) {
                row.c_bar_year.push_back(std::nullopt);
            }
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "v_star,c_min_nowind_km_per_year,c_min_wind_km_per_year\n";
    char buf[64];
    for (const auto& row : rows) {
        if (row.c_bar_year.size() != 2) throw DomainError("sweep table needs exactly two wind columns");
        std::snprintf(buf, sizeof buf, "%.4g", row.v_star);
        out += buf;
        for (const auto& v : row.c_bar_year) {
            if (v) {
                std::snprintf(buf, sizeof buf, ",%.4f", *v);
                out += buf;
            } else {
                out += ",no-front";
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace dengue
