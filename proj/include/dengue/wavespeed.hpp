#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dengue/params.hpp"
#include "dengue/polynomial.hpp"
#include "dengue/stability.hpp"

namespace dengue {

enum class FrontKind { MosquitoInvasion, DengueDispersion };

std::string to_string(FrontKind k);
/// Accepts "mosquito" and "dengue" (and the enumerator names).
FrontKind parse_front_kind(std::string_view s);

/**
 * Linear front ahead of an invasion: e^{-m z} perturbations satisfy
 * (y - B)(y + A) = K with y = c m and B = m² + 2νm - μ₁.
 */
struct LinearFront {
    double A = 0.0;
    double K = 0.0;
    double mu1 = 0.0;
    double two_nu = 0.0;

    /// Front exists only when K > μ₁A (Q₀ > 1 resp. R₀ > 1).
    bool has_front() const { return K > mu1 * A; }
};

/// (A, K) = (γ+μ₂, γ) for mosquito invasion, (σ, μ₁σR₀) for dengue dispersion.
LinearFront linear_front(const NondimParams& n, FrontKind kind, double v_star = 0.7, double h_star = 1.0);

/// c(m): the larger dispersion root divided by m.
double dispersion_speed(double m, const LinearFront& f);
double dispersion_speed(double m, const NondimParams& n, FrontKind kind, double v_star = 0.7,
                        double h_star = 1.0);

enum class CubicTag { Phat1, Phat3, Custom };

/// λ³ + a2λ² + a1λ + a0.
struct CubicPoly {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
    CubicTag tag = CubicTag::Custom;

    double operator()(double lambda) const { return ((lambda + a2) * lambda + a1) * lambda + a0; }
    double derivative(double lambda) const { return (3.0 * lambda + 2.0 * a2) * lambda + a1; }
    Poly poly() const { return Poly{a0, a1, a2, 1.0}; }
};

/// Characteristic polynomial of the 3×3 front block of the wave Jacobian.
CubicPoly cubic_phat(const LinearFront& f, double c, CubicTag tag = CubicTag::Custom);
CubicPoly cubic_phat(const NondimParams& n, double c, FrontKind kind, double v_star = 0.7, double h_star = 1.0);

struct WaveSpeedResult {
    FrontKind kind = FrontKind::MosquitoInvasion;
    double c_min = 0.0;
    double m_star = 0.0;
    std::optional<double> c_bar_day;   ///< set when a speed scale is known
    std::optional<double> c_bar_year;
    double residual_value = 0.0;       ///< |P̂(-m*, c_min)|
    double residual_derivative = 0.0;  ///< |∂P̂/∂λ(-m*, c_min)|
    int doublings = 0;
};

/**
 * Minimum speed over m > 0 of dispersion_speed.
 *
 * Bracket by doubling from m = 1e-3, golden section to relative 1e-10, then
 * a secant polish on d c/d m = 0. Throws NoFrontError without a front and
 * BracketError after 60 doublings.
 */
WaveSpeedResult min_wave_speed(const LinearFront& f, FrontKind kind,
                               std::optional<double> scale_km_per_day = std::nullopt);
WaveSpeedResult min_wave_speed(const NondimParams& n, FrontKind kind, double v_star = 0.7, double h_star = 1.0,
                               std::optional<double> scale_km_per_day = std::nullopt);
/// Nondimensionalizes d (p = q = ε = 0) and attaches dimensional speeds.
WaveSpeedResult min_wave_speed(const DimensionalParams& d, FrontKind kind, double v_star = 0.7,
                               double h_star = 1.0);

/// Jacobian of the first-order wave system at an Ehat0 or Ehat1 point.
Matrix8 wave_jacobian(const EquilibriumDescriptor& p, const NondimParams& n, double c);

/**
 * Factorization of det(λI - J) of wave_jacobian.
 *
 * Ehat0: {λ², λ - σ/c, P̂₀, mosquito cubic}; Ehat1: {λ², mosquito cubic at
 * Q₀ = 1 (root 0), dengue cubic}. P̂₀ = λ² - (2ν - c)λ - μ₁.
 */
std::vector<Poly> wave_char_factors(const EquilibriumDescriptor& p, const NondimParams& n, double c);

struct CurvePoint {
    double m = 0.0;
    double c = 0.0;
};

/// Samples of c(m) on a geometric grid in [m_lo, m_hi].
std::vector<CurvePoint> dispersion_curve(const LinearFront& f, double m_lo, double m_hi, std::size_t count);

struct SweepRow {
    double v_star = 0.0;
    /// km/year per wind, nullopt when no front exists.
    std::vector<std::optional<double>> c_bar_year;
};

/// Dengue c̄_min (km/year) for each v*, one column per wind 2ν̄ (km/day).
std::vector<SweepRow> sweep_vstar(const DimensionalParams& base, const std::vector<double>& v_list,
                                  const std::vector<double>& winds_km_per_day, double h_star = 1.0);

/// CSV with header `v_star,c_min_nowind_km_per_year,c_min_wind_km_per_year`.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace dengue
