#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lagwave/contact_wave.hpp"
#include "lagwave/gas.hpp"
#include "lagwave/solver.hpp"

#include "json.hpp"

namespace lagwave::app {

enum class Kind { Contact, Rarefaction, Composite, MaxwellOnly, Convergence };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

struct PerturbationSpec {
    std::string shape = "gaussian";  // "gaussian" | "none"
    double amplitude = 0.01;
    double width = 2.0;
    double center = 0.0;

    sim::GaussianBump bump() const;
};

struct SolverSettings {
    double cfl_advective = 0.4;
    double cfl_diffusive = 0.4;
    std::string scheme = "hybrid";                 // "hybrid" | "central2"
    std::string relaxation = "exact-exponential";  // "exact-exponential" | "explicit"
    double t_end = 200.0;
    double output_stride = 10.0;

    sim::SolverOptions options() const;  // evolve_fluid left at its default
};

/// A fully resolved run description. Kind selects which state block is
/// active; the others keep their defaults and are still round-tripped.
struct Scenario {
    int schema_version = 1;
    Kind kind = Kind::Contact;
    euler::GasParams gas;
    contact::ContactWaveSpec contact;       // kind == Contact
    euler::FluidState left, right;          // kind == Rarefaction | Composite
    euler::FluidState uniform;              // kind == MaxwellOnly
    sim::Grid1D grid;
    SolverSettings solver;
    PerturbationSpec perturbation;
    double weight_alpha = 0.0;              // <= 0 derives alpha from the profile
    std::string output_dir = "out";
    bool override_dielectric_bound = false;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dielectric threshold for the scenario's wave pattern; infinity when the
/// pattern imposes none (zero reference velocity, maxwell-only, convergence).
double scenario_dielectric_bound(const Scenario& s);

/// Parse and validate a config file. Unknown keys, malformed values and
/// violated invariants raise ConfigError with the offending field path.
/// cli_override mirrors the --override-dielectric-bound flag.
Scenario parse_config(const std::string& path, bool cli_override = false);
Scenario parse_config_json(const nlohmann::json& j, bool cli_override = false);

nlohmann::ordered_json to_json(const Scenario& s);
void write_config(const Scenario& s, const std::string& path);

/// FNV-1a content hash used to stamp reports with their exact input bytes.
std::uint64_t fnv1a_hash(const std::string& bytes);

}  // namespace lagwave::app
