#include "lagwave/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>

#include "lagwave/diagnostics.hpp"

namespace lagwave::app {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigError("config error at " + path + ": " + msg);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) fail(join(path, it.key()), "unknown field");
    }
}

const json* find(const json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double get_number(const json& j, const std::string& path, const char* key,
                  double fallback) {
    const json* v = find(j, key);
    if (!v) return fallback;
    if (!v->is_number()) fail(join(path, key), "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(join(path, key), "value must be finite");
    return x;
}

int get_int(const json& j, const std::string& path, const char* key, int fallback) {
    const json* v = find(j, key);
    if (!v) return fallback;
    if (!v->is_number_integer()) fail(join(path, key), "expected an integer");
    return v->get<int>();
}

std::string get_string(const json& j, const std::string& path, const char* key,
                       const std::string& fallback) {
    const json* v = find(j, key);
    if (!v) return fallback;
    if (!v->is_string()) fail(join(path, key), "expected a string");
    return v->get<std::string>();
}

bool get_bool(const json& j, const std::string& path, const char* key, bool fallback) {
    const json* v = find(j, key);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(join(path, key), "expected a boolean");
    return v->get<bool>();
}

void require_positive(double x, const std::string& path) {
    if (!(x > 0.0)) fail(path, "value must be positive");
}

euler::FluidState parse_state(const json& j, const std::string& path,
                              const euler::FluidState& fallback) {
    if (!j.is_object()) fail(path, "expected an object");
    check_keys(j, path, {"v", "u", "theta"});
    euler::FluidState s;
    s.v = get_number(j, path, "v", fallback.v);
    s.u = get_number(j, path, "u", fallback.u);
    s.theta = get_number(j, path, "theta", fallback.theta);
    require_positive(s.v, join(path, "v"));
    require_positive(s.theta, join(path, "theta"));
    return s;
}

}  // namespace

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Contact: return "contact";
        case Kind::Rarefaction: return "rarefaction";
        case Kind::Composite: return "composite";
        case Kind::MaxwellOnly: return "maxwell-only";
        case Kind::Convergence: return "convergence";
    }
    return "contact";
}

Kind kind_from_name(const std::string& name) {
    if (name == "contact") return Kind::Contact;
    if (name == "rarefaction") return Kind::Rarefaction;
    if (name == "composite") return Kind::Composite;
    if (name == "maxwell-only") return Kind::MaxwellOnly;
    if (name == "convergence") return Kind::Convergence;
    throw ConfigError(
        "config error at kind: expected one of contact, rarefaction, composite, "
        "maxwell-only, convergence; got \"" +
        name + "\"");
}

sim::GaussianBump PerturbationSpec::bump() const {
    if (shape == "none") return sim::GaussianBump{0.0, width, center};
    return sim::GaussianBump{amplitude, width, center};
}

sim::SolverOptions SolverSettings::options() const {
    sim::SolverOptions o;
    o.scheme = scheme == "central2" ? sim::Scheme::Central : sim::Scheme::HybridUpwind;
    o.relaxation = relaxation == "explicit" ? sim::Relaxation::Explicit
                                            : sim::Relaxation::ExactExponential;
    o.cfl_advective = cfl_advective;
    o.cfl_diffusive = cfl_diffusive;
    return o;
}

double scenario_dielectric_bound(const Scenario& s) {
    switch (s.kind) {
        case Kind::Contact: {
            const double v_minus = s.gas.R * s.contact.theta_minus / s.contact.p_plus;
            const double v_plus = s.gas.R * s.contact.theta_plus / s.contact.p_plus;
            return diag::dielectric_bound_contact(v_minus, v_plus, s.contact.u_minus);
        }
        case Kind::Rarefaction:
        case Kind::Composite:
            return diag::dielectric_bound_composite(s.left.v, s.right.v, s.left.theta,
                                                    s.right.theta, s.left.u, s.right.u,
                                                    s.gas);
        case Kind::MaxwellOnly:
        case Kind::Convergence:
            return std::numeric_limits<double>::infinity();
    }
    return std::numeric_limits<double>::infinity();
}

Scenario parse_config_json(const nlohmann::json& j, bool cli_override) {
    if (!j.is_object()) throw ConfigError("config error at root: expected an object");
    check_keys(j, "",
               {"schema_version", "kind", "gas", "contact", "left", "right", "uniform",
                "grid", "solver", "perturbation", "weight_alpha", "output_dir",
                "override_dielectric_bound"});

    Scenario s;
    s.schema_version = get_int(j, "", "schema_version", 1);
    if (s.schema_version != 1)
        fail("schema_version", "unsupported version " + std::to_string(s.schema_version));
    s.kind = kind_from_name(get_string(j, "", "kind", "contact"));

    if (const json* g = find(j, "gas")) {
        if (!g->is_object()) fail("gas", "expected an object");
        check_keys(*g, "gas", {"R", "gamma", "mu", "kappa", "epsilon", "A"});
        s.gas.R = get_number(*g, "gas", "R", s.gas.R);
        s.gas.gamma = get_number(*g, "gas", "gamma", s.gas.gamma);
        s.gas.mu = get_number(*g, "gas", "mu", s.gas.mu);
        s.gas.kappa = get_number(*g, "gas", "kappa", s.gas.kappa);
        s.gas.epsilon = get_number(*g, "gas", "epsilon", s.gas.epsilon);
        s.gas.A = get_number(*g, "gas", "A", s.gas.A);
    }
    require_positive(s.gas.R, "gas.R");
    if (!(s.gas.gamma > 1.0)) fail("gas.gamma", "value must exceed 1");
    require_positive(s.gas.mu, "gas.mu");
    require_positive(s.gas.kappa, "gas.kappa");
    require_positive(s.gas.epsilon, "gas.epsilon");
    require_positive(s.gas.A, "gas.A");

    if (const json* c = find(j, "contact")) {
        if (!c->is_object()) fail("contact", "expected an object");
        check_keys(*c, "contact", {"theta_minus", "theta_plus", "p_plus", "u_minus"});
        s.contact.theta_minus = get_number(*c, "contact", "theta_minus", s.contact.theta_minus);
        s.contact.theta_plus = get_number(*c, "contact", "theta_plus", s.contact.theta_plus);
        s.contact.p_plus = get_number(*c, "contact", "p_plus", s.contact.p_plus);
        s.contact.u_minus = get_number(*c, "contact", "u_minus", s.contact.u_minus);
    }
    require_positive(s.contact.theta_minus, "contact.theta_minus");
    require_positive(s.contact.theta_plus, "contact.theta_plus");
    require_positive(s.contact.p_plus, "contact.p_plus");

    if (const json* v = find(j, "left")) s.left = parse_state(*v, "left", s.left);
    if (const json* v = find(j, "right")) s.right = parse_state(*v, "right", s.right);
    if (const json* v = find(j, "uniform")) s.uniform = parse_state(*v, "uniform", s.uniform);

    if (const json* g = find(j, "grid")) {
        if (!g->is_object()) fail("grid", "expected an object");
        check_keys(*g, "grid", {"x_min", "x_max", "n"});
        s.grid.x_min = get_number(*g, "grid", "x_min", s.grid.x_min);
        s.grid.x_max = get_number(*g, "grid", "x_max", s.grid.x_max);
        s.grid.n = get_int(*g, "grid", "n", s.grid.n);
    }
    if (!(s.grid.x_max > s.grid.x_min)) fail("grid.x_max", "domain must have positive length");
    if (s.grid.n < 16) fail("grid.n", "need at least 16 nodes");

    if (const json* so = find(j, "solver")) {
        if (!so->is_object()) fail("solver", "expected an object");
        check_keys(*so, "solver",
                   {"cfl_advective", "cfl_diffusive", "scheme", "relaxation", "t_end",
                    "output_stride"});
        s.solver.cfl_advective = get_number(*so, "solver", "cfl_advective", s.solver.cfl_advective);
        s.solver.cfl_diffusive = get_number(*so, "solver", "cfl_diffusive", s.solver.cfl_diffusive);
        s.solver.scheme = get_string(*so, "solver", "scheme", s.solver.scheme);
        s.solver.relaxation = get_string(*so, "solver", "relaxation", s.solver.relaxation);
        s.solver.t_end = get_number(*so, "solver", "t_end", s.solver.t_end);
        s.solver.output_stride = get_number(*so, "solver", "output_stride", s.solver.output_stride);
    }
    for (const auto& [cfl, name] :
         {std::pair<double, const char*>{s.solver.cfl_advective, "solver.cfl_advective"},
          std::pair<double, const char*>{s.solver.cfl_diffusive, "solver.cfl_diffusive"}}) {
        if (!(cfl > 0.0) || cfl > 1.0) fail(name, "safety factor must lie in (0, 1]");
    }
    if (s.solver.scheme != "hybrid" && s.solver.scheme != "central2")
        fail("solver.scheme", "expected \"hybrid\" or \"central2\"");
    if (s.solver.relaxation != "exact-exponential" && s.solver.relaxation != "explicit")
        fail("solver.relaxation", "expected \"exact-exponential\" or \"explicit\"");
    if (!(s.solver.t_end >= 0.0)) fail("solver.t_end", "value must be nonnegative");

    if (const json* p = find(j, "perturbation")) {
        if (!p->is_object()) fail("perturbation", "expected an object");
        check_keys(*p, "perturbation", {"shape", "amplitude", "width", "center"});
        s.perturbation.shape = get_string(*p, "perturbation", "shape", s.perturbation.shape);
        s.perturbation.amplitude =
            get_number(*p, "perturbation", "amplitude", s.perturbation.amplitude);
        s.perturbation.width = get_number(*p, "perturbation", "width", s.perturbation.width);
        s.perturbation.center = get_number(*p, "perturbation", "center", s.perturbation.center);
    }
    if (s.perturbation.shape != "gaussian" && s.perturbation.shape != "none")
        fail("perturbation.shape", "expected \"gaussian\" or \"none\"");
    require_positive(s.perturbation.width, "perturbation.width");

    s.weight_alpha = get_number(j, "", "weight_alpha", s.weight_alpha);
    if (s.weight_alpha < 0.0) fail("weight_alpha", "value must be nonnegative (0 = derive)");
    s.output_dir = get_string(j, "", "output_dir", s.output_dir);
    s.override_dielectric_bound =
        get_bool(j, "", "override_dielectric_bound", s.override_dielectric_bound);

    const double bound = scenario_dielectric_bound(s);
    if (!(s.gas.epsilon < bound) && !(s.override_dielectric_bound || cli_override)) {
        std::ostringstream msg;
        msg << "config error at gas.epsilon: " << s.gas.epsilon
            << " is not below the dielectric threshold " << bound
            << " for this scenario (pass override_dielectric_bound to force)";
        throw ConfigError(msg.str());
    }
    return s;
}

Scenario parse_config(const std::string& path, bool cli_override) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config error: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config error: " + std::string(e.what()));
    }
    return parse_config_json(j, cli_override);
}

nlohmann::ordered_json to_json(const Scenario& s) {
    nlohmann::ordered_json j;
    j["schema_version"] = s.schema_version;
    j["kind"] = kind_name(s.kind);
    j["gas"] = {{"R", s.gas.R},         {"gamma", s.gas.gamma}, {"mu", s.gas.mu},
                {"kappa", s.gas.kappa}, {"epsilon", s.gas.epsilon}, {"A", s.gas.A}};
    j["contact"] = {{"theta_minus", s.contact.theta_minus},
                    {"theta_plus", s.contact.theta_plus},
                    {"p_plus", s.contact.p_plus},
                    {"u_minus", s.contact.u_minus}};
    j["left"] = {{"v", s.left.v}, {"u", s.left.u}, {"theta", s.left.theta}};
    j["right"] = {{"v", s.right.v}, {"u", s.right.u}, {"theta", s.right.theta}};
    j["uniform"] = {{"v", s.uniform.v}, {"u", s.uniform.u}, {"theta", s.uniform.theta}};
    j["grid"] = {{"x_min", s.grid.x_min}, {"x_max", s.grid.x_max}, {"n", s.grid.n}};
    j["solver"] = {{"cfl_advective", s.solver.cfl_advective},
                   {"cfl_diffusive", s.solver.cfl_diffusive},
                   {"scheme", s.solver.scheme},
                   {"relaxation", s.solver.relaxation},
                   {"t_end", s.solver.t_end},
                   {"output_stride", s.solver.output_stride}};
    j["perturbation"] = {{"shape", s.perturbation.shape},
                         {"amplitude", s.perturbation.amplitude},
                         {"width", s.perturbation.width},
                         {"center", s.perturbation.center}};
    j["weight_alpha"] = s.weight_alpha;
    j["output_dir"] = s.output_dir;
    j["override_dielectric_bound"] = s.override_dielectric_bound;
    return j;
}

void write_config(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config to " + path);
    out << to_json(s).dump(2) << "\n";
}

std::uint64_t fnv1a_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace lagwave::app
