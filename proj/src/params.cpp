#include "dengue/params.hpp"

#include <cmath>
#include <sstream>

#include "dengue/errors.hpp"

namespace dengue {

namespace {

void require(bool ok, const char* field, const char* what, double value)
{
    if (ok) return;
    std::ostringstream os;
    os << field << " must be " << what << " (got " << value << ")";
    throw DomainError(os.str());
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }
bool finite_nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void DimensionalParams::validate() const
{
    require(finite_positive(D_bar), "D_bar", "positive", D_bar);
    require(finite_nonnegative(nu2_bar), "nu2_bar", "non-negative", nu2_bar);
    require(finite_positive(r0_bar), "r0_bar", "positive", r0_bar);
    require(finite_positive(k1), "k1", "positive", k1);
    require(finite_positive(k2), "k2", "positive", k2);
    require(finite_positive(gamma_bar), "gamma_bar", "positive", gamma_bar);
    require(finite_positive(mu1_bar), "mu1_bar", "positive", mu1_bar);
    require(finite_positive(mu2_bar), "mu2_bar", "positive", mu2_bar);
    require(finite_nonnegative(mu3_bar), "mu3_bar", "non-negative", mu3_bar);
    require(finite_positive(beta1_bar), "beta1_bar", "positive", beta1_bar);
    require(finite_positive(beta2_bar), "beta2_bar", "positive", beta2_bar);
    require(finite_positive(sigma_bar), "sigma_bar", "positive", sigma_bar);
    require(finite_positive(N_bar), "N_bar", "positive", N_bar);
}

void NondimParams::validate(bool allow_any_epsilon) const
{
    require(finite_positive(gamma), "gamma", "positive", gamma);
    require(finite_positive(mu1), "mu1", "positive", mu1);
    require(finite_positive(mu2), "mu2", "positive", mu2);
    require(finite_positive(sigma), "sigma", "positive", sigma);
    require(finite_positive(k), "k", "positive", k);
    require(finite_nonnegative(mu3), "mu3", "non-negative", mu3);
    require(finite_nonnegative(nu), "nu", "non-negative", nu);
    require(finite_nonnegative(beta1), "beta1", "non-negative", beta1);
    require(finite_nonnegative(beta2), "beta2", "non-negative", beta2);
    require(std::isfinite(p) && std::isfinite(q1) && std::isfinite(q2), "p, q1, q2", "finite", p);
    if (!allow_any_epsilon) {
        require(epsilon == 0.0 || epsilon == 1.0, "epsilon", "0 or 1", epsilon);
    }
}

NondimParams nondimensionalize(const DimensionalParams& d, double p, double q1, double q2,
                               int epsilon)
{
    if (!(d.r0_bar > 0.0)) throw DomainError("r0_bar must be positive to nondimensionalize");
    if (!(d.D_bar > 0.0)) throw DomainError("D_bar must be positive to nondimensionalize");
    if (epsilon != 0 && epsilon != 1) throw DomainError("epsilon must be 0 or 1");
    d.validate();

    NondimParams n;
    n.gamma = d.gamma_bar / d.r0_bar;
    n.mu1 = d.mu1_bar / d.r0_bar;
    n.mu2 = d.mu2_bar / d.r0_bar;
    n.mu3 = d.mu3_bar / d.r0_bar;
    n.sigma = d.sigma_bar / d.r0_bar;
    n.k = d.k1 / d.k2;
    n.beta1 = d.beta1_bar * d.N_bar / d.r0_bar;
    n.beta2 = d.beta2_bar * d.k1 / d.r0_bar;
    n.nu = 0.5 * d.nu2_bar / std::sqrt(d.r0_bar * d.D_bar);
    n.p = p;
    n.q1 = q1;
    n.q2 = q2;
    n.epsilon = epsilon;
    return n;
}

double speed_scale(const DimensionalParams& d)
{
    if (!(d.r0_bar > 0.0) || !(d.D_bar > 0.0)) {
        throw DomainError("speed scale needs positive r0_bar and D_bar");
    }
    return std::sqrt(d.r0_bar * d.D_bar);
}

double basic_offspring(const NondimParams& n)
{
    const double denom = n.mu1 * (n.gamma + n.mu2);
    if (denom == 0.0) throw DomainError("basic offspring number undefined: mu1 (gamma + mu2) = 0");
    return n.gamma / denom;
}

double basic_offspring(const DimensionalParams& d)
{
    const double denom = (d.gamma_bar + d.mu2_bar) * d.mu1_bar;
    if (denom == 0.0) throw DomainError("basic offspring number undefined: (gamma_bar + mu2_bar) mu1_bar = 0");
    return d.gamma_bar * d.r0_bar / denom;
}

double basic_offspring_eps(const NondimParams& n, double eps)
{
    const double first = n.k * n.mu1 - eps * n.gamma;
    const double second = n.gamma + n.mu2 - eps * n.k;
    if (first == 0.0) throw DomainError("Q_eps pole: k mu1 - eps gamma vanishes");
    if (second == 0.0) throw DomainError("Q_eps pole: gamma + mu2 - eps k vanishes");
    return n.k * n.gamma / (first * second);
}

Indicators basic_reproduction(const NondimParams& n, double v_star, double h_star)
{
    if (!(v_star >= 0.0)) throw DomainError("v_star must be non-negative");
    if (!(h_star >= 0.0 && h_star <= 1.0)) throw DomainError("h_star must lie in [0, 1]");
    if (n.mu1 * n.sigma == 0.0) throw DomainError("R0 undefined: mu1 sigma = 0");

    Indicators ind;
    ind.Q0 = basic_offspring(n);
    ind.v_star = v_star;
    ind.h_star = h_star;
    ind.u_star = v_star * n.gamma / (n.k * n.mu1);
    ind.R0 = n.beta1 * n.beta2 * h_star * ind.u_star / (n.mu1 * n.sigma);
    return ind;
}

double mu2_for_unit_Q0(const DimensionalParams& d)
{
    if (!(d.mu1_bar > 0.0)) throw DomainError("mu1_bar must be positive");
    if (!(d.r0_bar > d.mu1_bar)) {
        throw NoSolutionError("Q0 = 1 has no positive mu2_bar solution when r0_bar <= mu1_bar");
    }
    return d.gamma_bar * (d.r0_bar - d.mu1_bar) / d.mu1_bar;
}

namespace {

DimensionalParams table3_common()
{
    DimensionalParams d;
    d.D_bar = 1.25e-2;
    d.nu2_bar = 5e-2;
    d.k1 = 25.0;
    d.k2 = 100.0;
    d.beta1_bar = 0.0033;
    d.beta2_bar = 0.0025;
    d.sigma_bar = 1.0 / 7.0;
    d.N_bar = 150.0;
    d.mu3_bar = 0.0;
    return d;
}

}  // namespace

DimensionalParams preset(std::string_view name)
{
    DimensionalParams d = table3_common();
    if (name == "table3-15C") {
        d.r0_bar = 1.52;
        d.gamma_bar = 1.0 / 52.63;
        d.mu1_bar = 1.0 / 26.3;
        d.mu2_bar = 1.0 / 50.0;
        return d;
    }
    if (name == "table3-30C") {
        d.r0_bar = 10.0;
        d.gamma_bar = 1.0 / 5.0;
        d.mu1_bar = 1.0 / 35.0;
        d.mu2_bar = 1.0 / 18.0;
        return d;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (known: table3-15C, table3-30C)");
}

std::vector<std::string> preset_names() { return {"table3-15C", "table3-30C"}; }

}  // namespace dengue
