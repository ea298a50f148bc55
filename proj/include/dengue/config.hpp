#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dengue/dynamics.hpp"
#include "dengue/params.hpp"

namespace dengue {

/**
 * Resolved inputs of one run.
 *
 * A configuration file is YAML with an optional `preset`, a `params` map
 * keyed by the DimensionalParams field names, and the optional keys `p`,
 * `q1`, `q2`, `variant`, `epsilon`, `v_star`, `h_star` and `force_q0_one`.
 * Without a preset every params field is required.
 */
struct RunConfig {
    DimensionalParams dim;
    std::string provenance;  ///< "preset table3-30C" or "file <path>"
    double p = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    ModelVariant variant = ModelVariant::malthus2();
    double v_star = 0.7;
    double h_star = 1.0;
    bool force_q0_one = false;
    /// μ̄₂ before the Q₀ = 1 substitution, when one was made.
    std::optional<double> mu2_replaced;

    /// Nondimensional parameters (ε from the variant, 0 for Saturated).
    NondimParams nondim() const;
    /// Replaces μ̄₂ by mu2_for_unit_Q0 and records the old value.
    void apply_force_q0_one();
};

std::vector<std::string> dimensional_field_names();

/// Sets one DimensionalParams field by name; ConfigError for unknown names.
void set_dimensional_field(DimensionalParams& d, std::string_view name, double value);
double get_dimensional_field(const DimensionalParams& d, std::string_view name);

RunConfig config_from_preset(std::string_view name);
/// `source` names the text in diagnostics (`source:line: message`).
RunConfig parse_config(const std::string& text, const std::string& source);
RunConfig load_config_file(const std::string& path);

}  // namespace dengue
