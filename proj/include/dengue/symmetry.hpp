#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dengue/dynamics.hpp"
#include "dengue/params.hpp"

namespace dengue {

/// Smooth fields (u, w, v, h, I, r) as functions of (x, t).
using FieldSample = std::function<HomogState(double x, double t)>;

enum class SymmetryCase { TranslationX, TranslationT, Case1, Case2, Case3, Case4, Case5, Case6, Case7 };

std::string to_string(SymmetryCase c);
/// "x", "t", "1" … "7" (also "case1", "translation-x", …).
SymmetryCase parse_symmetry_case(std::string_view s);

/// One row entry of a constraint table, e.g. β₂ = 0 or q₁ = p/2.
struct Constraint {
    enum class Kind { Zero, NonZero, HalfP };
    std::string parameter;  ///< NondimParams field name
    Kind kind = Kind::Zero;

    bool holds(const NondimParams& n) const;
    std::string describe() const;
};

/**
 * Lie point symmetry generator of the ε-family together with the parameter
 * constraints under which it is admitted.
 */
struct SymmetryGenerator {
    SymmetryCase id = SymmetryCase::TranslationX;
    std::string label;    ///< e.g. "X2"
    std::string formula;  ///< generator in ∂-notation
    std::vector<Constraint> constraints;
    std::string note;  ///< reading adopted where the printed table is ambiguous

    /// First violated constraint, if any.
    std::optional<Constraint> violated(const NondimParams& n) const;
    void require_admitted(const NondimParams& n) const;

    /// (ξ, τ, η¹ … η⁶) at a point.
    std::array<double, 8> components(double x, double t, const HomogState& s, const NondimParams& n) const;

    /// Coefficient matrix of the linear action on (u, w, v); zero when there is none.
    Eigen::Matrix3d uwv_coefficients() const;
};

const std::vector<SymmetryGenerator>& symmetry_catalog();
const SymmetryGenerator& symmetry_generator(SymmetryCase c);

struct ApplyOptions {
    /// Off only for negative controls: apply the group outside its constraint row.
    bool check_admissibility = true;
};

/// exp(a C) for the (u, w, v) coefficient matrix of g.
Eigen::Matrix3d uwv_group_matrix(const SymmetryGenerator& g, double a);

/// Image of the point (x, t) under the group element exp(aX).
std::pair<double, double> transform_point(const SymmetryGenerator& g, double a, double x, double t,
                                          const NondimParams& n);

/// Fields transformed by exp(aX): the new fields at the image of (x, t) are the transformed old values.
FieldSample apply_group(const SymmetryGenerator& g, double a, FieldSample F, const NondimParams& n,
                        const ApplyOptions& opt = {});

/// The solution added by the infinite-dimensional generators of cases 6 and 7.
FieldSample infinite_generator_solution(const SymmetryGenerator& g, const NondimParams& n);

/// Uniform evaluation grid; residuals are reported on the interior nodes.
struct SampleGrid {
    double x0 = 0.5;
    double dx = 0.02;
    std::size_t nx = 51;
    double t0 = 0.0;
    double dt = 0.02;
    std::size_t nt = 26;

    double x(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    double t(std::size_t j) const { return t0 + dt * static_cast<double>(j); }
};

/// Δ₁ … Δ₆ on the interior nodes, row-major in (t, x).
struct ResidualSample {
    SampleGrid grid;
    std::size_t nx_interior = 0;
    std::size_t nt_interior = 0;
    std::array<std::vector<double>, 6> delta;
    std::array<double, 6> max_norm{};

    double max() const;
};

/// Fourth-order central differences of the family residuals on `grid`.
ResidualSample residual(const FieldSample& F, const NondimParams& n, const SampleGrid& grid);

/// Linear map L with Δ(transformed) = L Δ(original) at corresponding points.
Eigen::Matrix<double, 6, 6> expected_residual_map(const SymmetryGenerator& g, double a);

enum class SampleKind { TravelingWave, Homogeneous };

/// Test solution: a wave profile u(x - ct) or a spatially constant ODE solution.
FieldSample solution_sample(const NondimParams& n, SampleKind kind = SampleKind::TravelingWave, double c = 0.8);

struct EquationCheck {
    double original_max = 0.0;     ///< max |Δᵢ| of the solution sample
    double transformed_max = 0.0;  ///< max |Δᵢ| after the transformation
    double deviation = 0.0;        ///< max |Δᵢ* - (LΔ)ᵢ| on the solution sample
    double allowance = 0.0;        ///< C·tol_sol
    double expected_ratio = 1.0;   ///< Lᵢᵢ
    double ratio = 0.0;            ///< Σ Δᵢ*Δᵢ / Σ Δᵢ² on the perturbed probe
    double probe_deviation = 0.0;  ///< max |Δᵢ* - (LΔ)ᵢ| on the probe
    bool pass = false;
};

struct EquivarianceReport {
    SymmetryCase id = SymmetryCase::TranslationX;
    double a = 0.0;
    double tol_sol = 1e-6;
    double sample_residual = 0.0;
    std::array<EquationCheck, 6> equations;
    /// Largest violation relative to its allowance; < 1 passes.
    double failure_factor = 0.0;
    bool admitted = true;
    bool pass = false;
    std::vector<std::string> notes;
};

struct EquivarianceOptions {
    double tol_sol = 1e-6;
    SampleGrid grid{};
    ApplyOptions apply{};
    double probe_amplitude = 1e-2;
};

/**
 * Residual-equivariance test of one group element.
 *
 * The transformed fields are evaluated on the image of the sample grid, so
 * finite differences commute with the group action up to rounding. A probe
 * (sample plus a smooth perturbation) measures the residual ratios away
 * from the noise floor of an exact solution.
 */
EquivarianceReport check_equivariance(const SymmetryGenerator& g, const NondimParams& n, const FieldSample& F,
                                      double a, const EquivarianceOptions& opt = {});

/// Structured text: per-equation ratios, expected ratios, pass/fail.
std::string to_text(const EquivarianceReport& r);

}  // namespace dengue
