#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dengue/params.hpp"

namespace dengue {

enum class Variant { Saturated, Malthus1, Malthus2, Family };

/**
 * Which reaction terms to use.
 *
 * Saturated keeps the carrying-capacity terms of the original dengue model.
 * Malthus1 and Malthus2 are the two Malthusian members of the ε-family
 * (ε = 1 and ε = 0); Family evaluates the family at an arbitrary ε.
 */
struct ModelVariant {
    Variant tag = Variant::Malthus2;
    double epsilon = 0.0;

    static ModelVariant saturated() { return {Variant::Saturated, 0.0}; }
    static ModelVariant malthus1() { return {Variant::Malthus1, 1.0}; }
    static ModelVariant malthus2() { return {Variant::Malthus2, 0.0}; }
    static ModelVariant family(double eps) { return {Variant::Family, eps}; }

    /// ε of the family member; Saturated has none and throws DomainError.
    double family_epsilon() const;
    std::string name() const;
};

/// Accepts "saturated", "malthus1", "malthus2" and "family".
ModelVariant parse_variant(std::string_view name, double epsilon = 0.0);

struct HomogState {
    double u = 0.0;  ///< uninfected winged mosquitoes
    double w = 0.0;  ///< infected winged mosquitoes
    double v = 0.0;  ///< aquatic phase
    double h = 0.0;  ///< susceptible humans
    double I = 0.0;  ///< infected humans
    double r = 0.0;  ///< recovered humans

    double M() const { return u + w; }

    std::array<double, 6> to_array() const { return {u, w, v, h, I, r}; }
    static HomogState from_array(const std::array<double, 6>& a)
    {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }
};

/**
 * Traveling-wave profile in the coordinate z = x - ct.
 *
 * The first-order ordering used for vectors and Jacobians is
 * (Φ₁, Ψ₁, Φ₂, Ψ₂, Φ₃, Φ₄, Φ₅, Φ₆) with Ψ₁ = Φ₁′ and Ψ₂ = Φ₂′.
 */
struct WaveState {
    double Phi1 = 0.0;
    double Phi2 = 0.0;
    double Phi3 = 0.0;
    double Phi4 = 0.0;
    double Phi5 = 0.0;
    double Phi6 = 0.0;
    double Psi1 = 0.0;
    double Psi2 = 0.0;
    double z = 0.0;
    double c = 0.0;

    std::array<double, 8> to_array() const { return {Phi1, Psi1, Phi2, Psi2, Phi3, Phi4, Phi5, Phi6}; }
    static WaveState from_array(const std::array<double, 8>& a, double z, double c)
    {
        WaveState s;
        s.Phi1 = a[0];
        s.Psi1 = a[1];
        s.Phi2 = a[2];
        s.Psi2 = a[3];
        s.Phi3 = a[4];
        s.Phi4 = a[5];
        s.Phi5 = a[6];
        s.Phi6 = a[7];
        s.z = z;
        s.c = c;
        return s;
    }
    /// The PDE fields (u, w, v, h, I, r) carried by this profile point.
    HomogState fields() const { return {Phi1, Phi2, Phi3, Phi4, Phi5, Phi6}; }
};

/// Reaction terms of the selected variant (all spatial derivatives zero).
HomogState homog_rhs(const HomogState& s, const NondimParams& n, const ModelVariant& m);

enum class Boundary { ZeroFlux, FixedValue };

/**
 * Six fields on a uniform cell-centred grid; cell i covers
 * [i dx, (i + 1) dx].
 */
struct GridFields {
    double dx = 0.0;
    std::vector<double> u, w, v, h, I, r;

    GridFields() = default;
    GridFields(std::size_t n, double spacing);

    std::size_t size() const { return u.size(); }
    HomogState at(std::size_t i) const { return {u[i], w[i], v[i], h[i], I[i], r[i]}; }
    void set(std::size_t i, const HomogState& s);
    double x(std::size_t i) const { return (static_cast<double>(i) + 0.5) * dx; }

    static GridFields constant(std::size_t n, double spacing, const HomogState& s);
};

struct SpatialOptions {
    Boundary boundary = Boundary::ZeroFlux;
    HomogState left_value{};   ///< ghost values for FixedValue
    HomogState right_value{};
    /// Replace M by max(M, M_floor) in Mᵖ when p < 0.
    bool regularize = false;
    double M_floor = 1e-12;
};

/// Negative densities seen by pde_rhs; they are reported, never clamped.
struct RhsDiagnostics {
    std::size_t negative_count = 0;
    double min_value = 0.0;
    std::size_t min_index = 0;
};

/**
 * Semi-discrete right-hand side of the 1-D system.
 *
 * Diffusion (Mᵖu_x)_x in flux form with Mᵖ averaged onto cell faces,
 * advection -2ν u^q u_x first-order upwind. `out` is resized as needed.
 */
RhsDiagnostics pde_rhs(const GridFields& f, const NondimParams& n, const ModelVariant& m,
                       GridFields& out, const SpatialOptions& opt = {});

/// d/dz of the traveling-wave state for the ε-family (ε taken from n).
WaveState travelwave_rhs(const WaveState& s, const NondimParams& n);

}  // namespace dengue
