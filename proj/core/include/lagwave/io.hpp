#pragma once

#include <string>
#include <vector>

#include "lagwave/composite_wave.hpp"
#include "lagwave/contact_wave.hpp"
#include "lagwave/diagnostics.hpp"
#include "lagwave/solver.hpp"

#include "json.hpp"

namespace lagwave::io {

/// printf %.17g: enough digits to round-trip exactly, byte-stable across runs.
std::string format_double(double x);

void ensure_dir(const std::string& path);
std::string read_file(const std::string& path);

/// Columns x,v,u,theta,E,b; one row per node.
void write_snapshot_csv(const std::string& path, const sim::Grid1D& grid,
                        const sim::State& s);

/// Columns xi,theta,dtheta over the profile table (a constant profile writes
/// the two end states only).
void write_contact_profile_csv(const std::string& path,
                               const contact::SelfSimilarProfile& prof);

/// Columns x,t,V,U,Theta,V_x,U_x,Theta_x sampled at the given positions and
/// times.
void write_composite_profile_csv(const std::string& path,
                                 const composite::CompositeWave& wave,
                                 const std::vector<double>& xs,
                                 const std::vector<double>& ts);

struct NamedFit {
    std::string name;
    double exponent = 0.0;
    double ci = 0.0;
};

/// Assemble the run report: resolved scenario config, input hash, sample
/// times, norm and identity series, and any decay fits.
nlohmann::ordered_json ledger_json(const nlohmann::ordered_json& scenario,
                                   std::uint64_t input_hash,
                                   const std::vector<diag::EnergyEntry>& entries,
                                   const std::vector<NamedFit>& fits);

void write_json(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace lagwave::io
