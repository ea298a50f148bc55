#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dengue {

/// Days per year used for every km/year conversion.
inline constexpr double kDaysPerYear = 365.0;

/**
 * Biological parameters in physical units.
 *
 * Rates are per day, densities per km², D_bar in km²/day. The wind is
 * stored as printed in the field tables, i.e. as the full advection speed
 * 2ν̄ (km/day); ν̄ itself is nu2_bar / 2.
 */
struct DimensionalParams {
    double D_bar = 0.0;      ///< diffusion coefficient (km²/day)
    double nu2_bar = 0.0;    ///< advection speed 2ν̄ (km/day)
    double r0_bar = 0.0;     ///< intrinsic oviposition rate (1/day)
    double k1 = 0.0;         ///< winged carrying capacity (1/km²)
    double k2 = 0.0;         ///< aquatic carrying capacity (1/km²)
    double gamma_bar = 0.0;  ///< aquatic -> winged maturation rate (1/day)
    double mu1_bar = 0.0;    ///< winged mortality (1/day)
    double mu2_bar = 0.0;    ///< aquatic mortality (1/day)
    double mu3_bar = 0.0;    ///< human mortality (1/day)
    double beta1_bar = 0.0;  ///< human -> mosquito transmission (km²/day)
    double beta2_bar = 0.0;  ///< mosquito -> human transmission (km²/day)
    double sigma_bar = 0.0;  ///< recovery rate (1/day)
    double N_bar = 0.0;      ///< human density (1/km²)

    /// Throws DomainError naming the first offending field.
    void validate() const;
};

/**
 * Dimensionless parameters of the family of Malthusian systems.
 *
 * epsilon selects the member: 0 removes the mosquito saturation entirely,
 * 1 is the modified-oviposition model. Other values are only meaningful for
 * the ε-dependent offspring number.
 */
struct NondimParams {
    double gamma = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double sigma = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double nu = 0.0;  ///< advection enters the equations as 2ν
    double k = 0.0;   ///< k1 / k2
    double p = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double epsilon = 0.0;

    double two_nu() const { return 2.0 * nu; }

    /// Checks positivity constraints; epsilon must be 0 or 1 unless
    /// allow_any_epsilon is set.
    void validate(bool allow_any_epsilon = false) const;
};

struct Indicators {
    double Q0 = 0.0;
    double R0 = 0.0;
    double u_star = 0.0;
    double v_star = 0.0;
    double h_star = 0.0;
};

NondimParams nondimensionalize(const DimensionalParams& d, double p = 0.0, double q1 = 0.0,
                               double q2 = 0.0, int epsilon = 0);

/// Dimensional speed of one nondimensional speed unit, √(r̄₀D̄) in km/day.
double speed_scale(const DimensionalParams& d);

inline double km_per_day_to_km_per_year(double v) { return v * kDaysPerYear; }
inline double km_per_year_to_km_per_day(double v) { return v / kDaysPerYear; }

/// Q₀ = γ / (μ₁(γ + μ₂)).
double basic_offspring(const NondimParams& n);

/// Same quantity from the barred parameters: γ̄r̄₀ / ((γ̄ + μ̄₂)μ̄₁).
double basic_offspring(const DimensionalParams& d);

/// Q_ε = kγ / ((kμ₁ - εγ)(γ + μ₂ - εk)); reduces to Q₀ at ε = 0.
double basic_offspring_eps(const NondimParams& n, double eps);

/// R₀ = β₁β₂h*u*/(μ₁σ) with u* = v*γ/(kμ₁).
Indicators basic_reproduction(const NondimParams& n, double v_star, double h_star);

/// Aquatic mortality μ̄₂ that makes Q₀ exactly one with everything else fixed.
double mu2_for_unit_Q0(const DimensionalParams& d);

/// Built-in parameter sets: "table3-15C" and "table3-30C".
DimensionalParams preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace dengue
