#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dengue/dynamics.hpp"
#include "dengue/ode.hpp"
#include "dengue/params.hpp"
#include "dengue/wavespeed.hpp"

namespace dengue {

struct HomogTrajectory {
    std::vector<double> t;
    std::vector<HomogState> states;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

/// Adaptive Dormand–Prince trajectory of the homogeneous system on [0, T].
HomogTrajectory integrate_homog(const HomogState& s0, const NondimParams& n, const ModelVariant& m, double T,
                                double tol = 1e-9);

/// Same integrator, reporting the state exactly at each of `times` (ascending, >= 0).
std::vector<HomogState> integrate_homog_at(const HomogState& s0, const NondimParams& n, const ModelVariant& m,
                                           const std::vector<double>& times, double tol = 1e-9);

struct ProfileTrajectory {
    std::vector<WaveState> points;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

/// Integrates the wave system from start.z to z_end; DivergenceError when |state| > 1e12.
ProfileTrajectory integrate_profile(double c, const NondimParams& n, WaveState start, double z_end,
                                    double tol = 1e-9);

/// Profile values at each of `z_values` (monotone away from start.z).
std::vector<WaveState> integrate_profile_at(double c, const NondimParams& n, WaveState start,
                                            const std::vector<double>& z_values, double tol = 1e-9);

enum class TimeScheme { Euler, RK2 };
enum class Direction { Rightward, Leftward };

std::string to_string(TimeScheme s);
std::string to_string(Direction d);

/**
 * Localized seed placed at the boundary the front starts from.
 *
 * Mosquito fronts seed u; dengue fronts seed w on top of the mosquito
 * background. The seed is a plateau of the given amplitude and half-width.
 */
struct SeedSpec {
    double amplitude = 0.5;
    double width = 2.0;
    std::optional<double> position;  ///< default: the starting boundary
};

struct SimConfig {
    double L = 360.0;
    std::size_t N = 3600;
    double dt = 0.0;  ///< 0 selects safety·dx²/(2 max Mᵖ)
    double safety = 0.4;
    double T = 400.0;
    Boundary boundary = Boundary::ZeroFlux;
    TimeScheme scheme = TimeScheme::Euler;
    Direction direction = Direction::Rightward;
    FrontKind kind = FrontKind::MosquitoInvasion;
    SeedSpec seed;
    double background_v = 0.7;  ///< v* of the Malthusian dengue background (needs Q₀ = 1)
    double theta = 0.1;
    double sample_interval = 1.0;
    double fit_fraction = 0.6;
    std::size_t snapshots = 5;

    double dx() const { return L / static_cast<double>(N); }
    /// Step bound safety·dx²/(2 max Mᵖ) for the given initial maximum of M.
    double dt_bound(const NondimParams& n, const ModelVariant& m, double max_M) const;
    void validate() const;
    /// `key = value` lines.
    std::string describe() const;
};

enum class FrontStatus { Measured, NoFront };

struct FrontTrace {
    FrontStatus status = FrontStatus::NoFront;
    std::vector<double> t;
    std::vector<double> x;  ///< threshold crossing positions
    double speed = 0.0;     ///< along the direction of travel
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t fit_first = 0;  ///< first sample index in the fit window
    double u_ref = 0.0;
    double threshold = 0.0;
};

struct Snapshot {
    double t = 0.0;
    GridFields fields;
};

struct SimResult {
    FrontTrace trace;
    std::vector<Snapshot> snapshots;
    double dt = 0.0;
    std::size_t steps = 0;
    double max_simplex_error = 0.0;  ///< max |h + I + r - 1| over samples
    std::size_t negative_samples = 0;
};

/// Behind-front plateau M* of the saturated mosquito model.
HomogState saturated_plateau(const NondimParams& n);

/// Initial fields implied by cfg.
GridFields initial_fields(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m);

/**
 * Explicit time stepping of the 1-D system with front tracking.
 *
 * Throws TruncationError when the front comes within 5 dx of the far
 * boundary before T.
 */
SimResult simulate_front(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m);

/// Linear spreading speed expected for cfg (wind reversed for leftward fronts).
WaveSpeedResult expected_front_speed(const SimConfig& cfg, const NondimParams& n, const ModelVariant& m);

/// `t,x_front`
std::string trace_csv(const FrontTrace& trace);
/// `x,u,w,v,h,I,r`
std::string snapshot_csv(const Snapshot& s);

}  // namespace dengue
