#include "lagwave/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lagwave::io {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void ensure_dir(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) throw std::runtime_error("cannot create directory " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

void write_snapshot_csv(const std::string& path, const sim::Grid1D& grid,
                        const sim::State& s) {
    std::ofstream out = open_out(path);
    out << "x,v,u,theta,E,b\n";
    for (int i = 0; i < s.n(); ++i) {
        out << format_double(grid.x(i)) << ',' << format_double(s.v[i]) << ','
            << format_double(s.u[i]) << ',' << format_double(s.theta[i]) << ','
            << format_double(s.E[i]) << ',' << format_double(s.b[i]) << '\n';
    }
}

void write_contact_profile_csv(const std::string& path,
                               const contact::SelfSimilarProfile& prof) {
    std::ofstream out = open_out(path);
    out << "xi,theta,dtheta\n";
    if (prof.constant()) {
        out << format_double(-prof.xi_max) << ',' << format_double(prof.theta_minus)
            << ",0\n";
        out << format_double(prof.xi_max) << ',' << format_double(prof.theta_plus)
            << ",0\n";
        return;
    }
    for (std::size_t i = 0; i < prof.xi.size(); ++i) {
        out << format_double(prof.xi[i]) << ',' << format_double(prof.theta[i]) << ','
            << format_double(prof.dtheta[i]) << '\n';
    }
}

void write_composite_profile_csv(const std::string& path,
                                 const composite::CompositeWave& wave,
                                 const std::vector<double>& xs,
                                 const std::vector<double>& ts) {
    std::ofstream out = open_out(path);
    out << "x,t,V,U,Theta,V_x,U_x,Theta_x\n";
    for (const double t : ts) {
        for (const double x : xs) {
            const composite::CompositeWave::Point p = wave.at(x, t);
            out << format_double(x) << ',' << format_double(t) << ','
                << format_double(p.v) << ',' << format_double(p.u) << ','
                << format_double(p.theta) << ',' << format_double(p.v_x) << ','
                << format_double(p.u_x) << ',' << format_double(p.theta_x) << '\n';
        }
    }
}

nlohmann::ordered_json ledger_json(const nlohmann::ordered_json& scenario,
                                   std::uint64_t input_hash,
                                   const std::vector<diag::EnergyEntry>& entries,
                                   const std::vector<NamedFit>& fits) {
    nlohmann::ordered_json j;
    j["scenario"] = scenario;
    j["input_hash"] = input_hash;

    auto series = [&entries](auto member) {
        std::vector<double> v;
        v.reserve(entries.size());
        for (const diag::EnergyEntry& e : entries) v.push_back(e.*member);
        return v;
    };

    j["times"] = series(&diag::EnergyEntry::t);
    j["norms"] = {
        {"l2_phi", series(&diag::EnergyEntry::l2_phi)},
        {"l2_psi", series(&diag::EnergyEntry::l2_psi)},
        {"l2_zeta", series(&diag::EnergyEntry::l2_zeta)},
        {"l2_E", series(&diag::EnergyEntry::l2_E)},
        {"l2_b", series(&diag::EnergyEntry::l2_b)},
        {"h1_phi", series(&diag::EnergyEntry::h1_phi)},
        {"h1_psi", series(&diag::EnergyEntry::h1_psi)},
        {"h1_zeta", series(&diag::EnergyEntry::h1_zeta)},
        {"h1_E", series(&diag::EnergyEntry::h1_E)},
        {"h1_b", series(&diag::EnergyEntry::h1_b)},
        {"sup_phi", series(&diag::EnergyEntry::sup_phi)},
        {"sup_psi", series(&diag::EnergyEntry::sup_psi)},
        {"sup_zeta", series(&diag::EnergyEntry::sup_zeta)},
        {"sup_E", series(&diag::EnergyEntry::sup_E)},
        {"sup_b", series(&diag::EnergyEntry::sup_b)},
        {"entropy_energy", series(&diag::EnergyEntry::entropy_energy)},
        {"maxwell_energy", series(&diag::EnergyEntry::maxwell_energy)},
        {"weighted", series(&diag::EnergyEntry::weighted)},
    };
    j["identities"] = {
        {"mass_residual", series(&diag::EnergyEntry::mass_residual)},
        {"maxwell_residual", series(&diag::EnergyEntry::maxwell_residual)},
        {"diss_grad", series(&diag::EnergyEntry::diss_grad)},
        {"diss_combo", series(&diag::EnergyEntry::diss_combo)},
    };
    j["fits"] = nlohmann::ordered_json::array();
    for (const NamedFit& f : fits) {
        j["fits"].push_back({{"name", f.name}, {"exponent", f.exponent}, {"ci", f.ci}});
    }
    return j;
}

void write_json(const nlohmann::ordered_json& j, const std::string& path) {
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace lagwave::io
