#include "dengue/config.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "dengue/errors.hpp"

namespace dengue {

namespace {

struct Field {
    const char* name;
    double DimensionalParams::*member;
};

constexpr std::array<Field, 13> kFields = {{
    {"D_bar", &DimensionalParams::D_bar},
    {"nu2_bar", &DimensionalParams::nu2_bar},
    {"r0_bar", &DimensionalParams::r0_bar},
    {"k1", &DimensionalParams::k1},
    {"k2", &DimensionalParams::k2},
    {"gamma_bar", &DimensionalParams::gamma_bar},
    {"mu1_bar", &DimensionalParams::mu1_bar},
    {"mu2_bar", &DimensionalParams::mu2_bar},
    {"mu3_bar", &DimensionalParams::mu3_bar},
    {"beta1_bar", &DimensionalParams::beta1_bar},
    {"beta2_bar", &DimensionalParams::beta2_bar},
    {"sigma_bar", &DimensionalParams::sigma_bar},
    {"N_bar", &DimensionalParams::N_bar},
}};

const Field* find_field(std::string_view name)
{
    for (const auto& f : kFields) {
        if (name == f.name) return &f;
    }
    return nullptr;
}

std::string where(const std::string& source, const YAML::Node& node)
{
    const auto mark = node.Mark();
    if (mark.line < 0) return source;
    return source + ":" + std::to_string(mark.line + 1);
}

double as_double(const YAML::Node& node, const std::string& key, const std::string& source)
{
    try {
        return node.as<double>();
    } catch (const YAML::Exception&) {
        throw ConfigError(where(source, node) + ": key '" + key + "' needs a number");
    }
}

}  // namespace

NondimParams RunConfig::nondim() const
{
    const int eps = variant.tag == Variant::Saturated ? 0 : static_cast<int>(variant.family_epsilon());
    NondimParams n = nondimensionalize(dim, p, q1, q2, eps);
    if (variant.tag == Variant::Family) n.epsilon = variant.epsilon;
    return n;
}

void RunConfig::apply_force_q0_one()
{
    if (mu2_replaced) return;
    mu2_replaced = dim.mu2_bar;
    dim.mu2_bar = mu2_for_unit_Q0(dim);
    force_q0_one = true;
}

std::vector<std::string> dimensional_field_names()
{
    std::vector<std::string> out;
    for (const auto& f : kFields) out.emplace_back(f.name);
    return out;
}

void set_dimensional_field(DimensionalParams& d, std::string_view name, double value)
{
    const Field* f = find_field(name);
    if (!f) throw ConfigError("unknown parameter '" + std::string(name) + "'");
    d.*(f->member) = value;
}

double get_dimensional_field(const DimensionalParams& d, std::string_view name)
{
    const Field* f = find_field(name);
    if (!f) throw ConfigError("unknown parameter '" + std::string(name) + "'");
    return d.*(f->member);
}

RunConfig config_from_preset(std::string_view name)
{
    RunConfig cfg;
    cfg.dim = preset(name);
    cfg.provenance = "preset " + std::string(name);
    return cfg;
}

RunConfig parse_config(const std::string& text, const std::string& source)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (!root.IsMap()) throw ConfigError(source + ": top level must be a mapping");

    RunConfig cfg;
    cfg.provenance = "file " + source;
    bool have_preset = false;
    if (const auto node = root["preset"]) {
        const auto name = node.as<std::string>();
        try {
            cfg.dim = preset(name);
        } catch (const ConfigError& e) {
            throw ConfigError(where(source, node) + ": " + e.what());
        }
        cfg.provenance += " (preset " + name + ")";
        have_preset = true;
    }

    static const std::set<std::string> known = {"preset", "params", "p", "q1", "q2", "variant",
                                                "epsilon", "v_star", "h_star", "force_q0_one"};
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (!known.count(key)) throw ConfigError(where(source, kv.first) + ": unknown key '" + key + "'");
    }

    std::set<std::string> seen;
    if (const auto params = root["params"]) {
        if (!params.IsMap()) throw ConfigError(where(source, params) + ": 'params' must be a mapping");
        for (const auto& kv : params) {
            const auto key = kv.first.as<std::string>();
            const Field* f = find_field(key);
            if (!f) throw ConfigError(where(source, kv.first) + ": unknown parameter '" + key + "'");
            cfg.dim.*(f->member) = as_double(kv.second, key, source);
            seen.insert(key);
        }
    }
    if (!have_preset) {
        for (const auto& f : kFields) {
            if (!seen.count(f.name)) throw ConfigError(source + ": missing required key 'params." + std::string(f.name) + "'");
        }
    }

    if (const auto node = root["p"]) cfg.p = as_double(node, "p", source);
    if (const auto node = root["q1"]) cfg.q1 = as_double(node, "q1", source);
    if (const auto node = root["q2"]) cfg.q2 = as_double(node, "q2", source);
    double eps = 0.0;
    if (const auto node = root["epsilon"]) eps = as_double(node, "epsilon", source);
    if (const auto node = root["variant"]) {
        try {
            cfg.variant = parse_variant(node.as<std::string>(), eps);
        } catch (const ConfigError& e) {
            throw ConfigError(where(source, node) + ": " + e.what());
        }
    }
    if (const auto node = root["v_star"]) cfg.v_star = as_double(node, "v_star", source);
    if (const auto node = root["h_star"]) cfg.h_star = as_double(node, "h_star", source);
    if (const auto node = root["force_q0_one"]) {
        try {
            cfg.force_q0_one = node.as<bool>();
        } catch (const YAML::Exception&) {
            throw ConfigError(where(source, node) + ": key 'force_q0_one' needs true or false");
        }
    }

    try {
        cfg.dim.validate();
    } catch (const DomainError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    if (cfg.force_q0_one) {
        cfg.force_q0_one = false;
        cfg.apply_force_q0_one();
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace dengue
