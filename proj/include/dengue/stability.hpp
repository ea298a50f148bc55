#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dengue/dynamics.hpp"
#include "dengue/params.hpp"
#include "dengue/polynomial.hpp"

namespace dengue {

/// Tolerance on |Q₀ - 1| for membership in the bifurcation sets.
inline constexpr double kTolQ = 1e-9;

enum class EquilibriumSet { E0, E1, Eprime, Ehat0, Ehat1 };
std::string to_string(EquilibriumSet s);

/**
 * One point of an equilibrium family.
 *
 * E0/Ehat0 are parametrized by h*, E1/Ehat1 by (h*, v*), Eprime by v* alone
 * (the origin of the mosquito plane is v* = 0). Build through the make_*
 * functions so that the Q₀ = 1 requirement is checked once.
 */
struct EquilibriumDescriptor {
    EquilibriumSet set = EquilibriumSet::E0;
    double h_star = 1.0;
    double v_star = 0.0;
    double u_star = 0.0;  ///< v*γ/(kμ₁), zero on E0

    HomogState homog_point() const;
    /// (Φ₁, Ψ₁, Φ₂, Ψ₂, Φ₃, Φ₄, Φ₅, Φ₆) of the traveling-wave equilibrium.
    WaveState wave_point(double c) const;
};

EquilibriumDescriptor make_E0(double h_star);
EquilibriumDescriptor make_E1(const NondimParams& n, double h_star, double v_star, double tol_Q = kTolQ);
EquilibriumDescriptor make_Eprime(const NondimParams& n, double v_star, double tol_Q = kTolQ);
EquilibriumDescriptor make_Ehat0(double h_star);
EquilibriumDescriptor make_Ehat1(const NondimParams& n, double h_star, double v_star, double tol_Q = kTolQ);

struct EquilibriumSets {
    double Q0 = 0.0;
    double det_A = 0.0;  ///< 1 - Q₀
    std::vector<EquilibriumSet> sets;

    bool contains(EquilibriumSet s) const;
};

/// Equilibrium families of the homogeneous system (Malthus2, μ₃ = 0 only).
EquilibriumSets equilibria(const NondimParams& n, const ModelVariant& m, double tol_Q = kTolQ);

using Matrix2 = Eigen::Matrix2d;
using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Eigenvalues = std::vector<std::complex<double>>;

/// Closed-form Jacobian of the homogeneous system at an E0 or E1 point.
Matrix6 jacobian_homog(const EquilibriumDescriptor& p, const NondimParams& n);

/**
 * Factorization of det(λI - J) at an E0 or E1 point.
 *
 * E0: {λ², λ + μ₁, λ + σ, P₁}; E1: {λ², P₂, P₃}.
 */
std::vector<Poly> char_factors_homog(const EquilibriumDescriptor& p, const NondimParams& n);

enum class SpectrumSource { ClosedForm, DenseSolver };

struct Spectrum {
    Eigenvalues eigenvalues;
    SpectrumSource source = SpectrumSource::ClosedForm;
    std::vector<Poly> factors;  ///< empty for dense spectra
};

Spectrum closed_form_spectrum(std::vector<Poly> factors);
Spectrum dense_spectrum(const Eigen::MatrixXd& J);

/// Largest pairwise distance under the matching that minimizes it.
double spectrum_distance(const Eigenvalues& a, const Eigenvalues& b);

/// How the constant term of the mosquito-plane polynomial is formed.
enum class MosquitoConstant {
    CharacteristicPolynomial,  ///< -μ₁(γ+μ₂)(Q₀-1), from det(λI - J)
    AsPrinted,                 ///< -μ₁(γ+μ₁)(Q₀-1), the published form
};

struct MosquitoSpectrum {
    Spectrum closed_form;
    Spectrum dense;
    double mismatch = 0.0;  ///< spectrum_distance(closed_form, dense)
    double constant_direct = 0.0;
    double constant_printed = 0.0;
    MosquitoConstant form = MosquitoConstant::CharacteristicPolynomial;
};

Matrix2 mosquito_jacobian(const NondimParams& n);
MosquitoSpectrum mosquito_jacobian_spectrum(const NondimParams& n,
                                            MosquitoConstant form = MosquitoConstant::CharacteristicPolynomial);

enum class Classification { AsymptoticallyStable, Stable, Unstable, Inconclusive };
enum class Scope { Full6, Mosquito2 };

std::string to_string(Classification c);
std::string to_string(Scope s);

struct StabilityReport {
    Classification classification = Classification::Inconclusive;
    Scope scope = Scope::Full6;
    EquilibriumSet set = EquilibriumSet::E0;
    Eigenvalues eigenvalues;
    std::optional<std::complex<double>> witness_eigenvalue;
    std::string witness;
    double Q0 = 0.0;
    std::optional<double> R0;
    std::vector<std::string> notes;
};

StabilityReport classify(const EquilibriumDescriptor& p, const NondimParams& n, Scope scope);

/// Structured text: `key: value` lines, eigenvalues as (re, im) pairs.
std::string to_text(const StabilityReport& r);

}  // namespace dengue
