#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "lagwave/contact_wave.hpp"
#include "lagwave/io.hpp"
#include "lagwave/scenario.hpp"

using namespace lagwave;

namespace {

// Scratch directory under the system temp root, removed when the binary exits.
std::string scratch_path(const char* leaf) {
    static const struct Dir {
        std::filesystem::path root;
        Dir() : root(std::filesystem::temp_directory_path() / "lagwave_io_test") {
            std::filesystem::create_directories(root);
        }
        ~Dir() {
            std::error_code ec;
            std::filesystem::remove_all(root, ec);
        }
    } dir;
    return (dir.root / leaf).string();
}

app::Scenario sample_contact_scenario() {
    app::Scenario s;
    s.kind = app::Kind::Contact;
    s.gas.epsilon = 0.01;
    s.gas.mu = 0.8;
    s.contact = {1.0, 1.1, 1.0, 0.5};
    s.grid = {-150.0, 150.0, 2048};
    s.solver.t_end = 50.0;
    s.solver.output_stride = 5.0;
    s.solver.scheme = "central2";
    s.solver.relaxation = "explicit";
    s.perturbation = {"gaussian", 0.02, 1.5, -3.0};
    s.weight_alpha = 0.17;
    s.output_dir = "runs/demo";
    return s;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("kind names round trip") {
    using app::Kind;
    for (const Kind k : {Kind::Contact, Kind::Rarefaction, Kind::Composite,
                         Kind::MaxwellOnly, Kind::Convergence}) {
        CHECK(app::kind_from_name(app::kind_name(k)) == k);
    }
    CHECK_THROWS_AS(app::kind_from_name("shocktube"), app::ConfigError);
}

TEST_CASE("config json round trips field for field") {
    const app::Scenario s1 = sample_contact_scenario();
    const auto j1 = app::to_json(s1);
    const app::Scenario s2 = app::parse_config_json(j1);
    CHECK(app::to_json(s2) == j1);
    CHECK(s2.kind == s1.kind);
    CHECK(s2.gas.mu == s1.gas.mu);
    CHECK(s2.contact.u_minus == 0.5);
    CHECK(s2.grid.n == 2048);
    CHECK(s2.solver.scheme == "central2");
    CHECK(s2.perturbation.center == -3.0);
    CHECK(s2.weight_alpha == 0.17);
    CHECK(s2.output_dir == "runs/demo");

    app::Scenario c;
    c.kind = app::Kind::Composite;
    c.gas.epsilon = 0.01;
    c.left = {0.978, -0.0288, 1.0149};
    c.right = {0.9995, 0.0291, 1.0373};
    c.grid = {-300.0, 300.0, 4096};
    const auto jc = app::to_json(c);
    CHECK(app::to_json(app::parse_config_json(jc)) == jc);
}

TEST_CASE("config file round trips through disk") {
    const std::string path = scratch_path("config.json");
    const app::Scenario s1 = sample_contact_scenario();
    app::write_config(s1, path);
    const app::Scenario s2 = app::parse_config(path);
    CHECK(app::to_json(s2) == app::to_json(s1));
}

TEST_CASE("validation errors carry the field path") {
    auto j = app::to_json(sample_contact_scenario());

    SUBCASE("unknown key") {
        j["grid"]["spacing"] = 0.1;
        try {
            app::parse_config_json(j);
            FAIL("expected a config error");
        } catch (const app::ConfigError& e) {
            CHECK(contains(e.what(), "grid.spacing"));
        }
    }

    SUBCASE("malformed number") {
        j["gas"]["mu"] = "thick";
        try {
            app::parse_config_json(j);
            FAIL("expected a config error");
        } catch (const app::ConfigError& e) {
            CHECK(contains(e.what(), "gas.mu"));
        }
    }

    SUBCASE("bad grid") {
        j["grid"]["n"] = 4;
        CHECK_THROWS_AS(app::parse_config_json(j), app::ConfigError);
    }
}

TEST_CASE("dielectric admissibility gate") {
    app::Scenario s;
    s.kind = app::Kind::Contact;
    s.contact = {1.0, 1.0, 1.0, 1.0};  // threshold exactly 1/64
    s.gas.epsilon = 1.0;
    const auto j = app::to_json(s);
    try {
        app::parse_config_json(j);
        FAIL("expected a config error");
    } catch (const app::ConfigError& e) {
        CHECK(contains(e.what(), "gas.epsilon"));
        CHECK(contains(e.what(), "0.015625"));
        CHECK(contains(e.what(), "override_dielectric_bound"));
    }
    CHECK_NOTHROW(app::parse_config_json(j, true));
    auto jo = j;
    jo["override_dielectric_bound"] = true;
    CHECK_NOTHROW(app::parse_config_json(jo));
    auto ok = j;
    ok["gas"]["epsilon"] = 0.001;
    CHECK_NOTHROW(app::parse_config_json(ok));
}

TEST_CASE("content hash matches the reference vectors") {
    CHECK(app::fnv1a_hash("") == 14695981039346656037ull);
    CHECK(app::fnv1a_hash("a") == 0xaf63dc4c8601ec8cull);
    CHECK(app::fnv1a_hash("ab") != app::fnv1a_hash("ba"));
}

TEST_CASE("double formatting survives a parse round trip") {
    for (const double x : {0.1, 1.0 / 3.0, 1e-17, 6.02214076e23, -0.015625}) {
        const std::string s = io::format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(io::format_double(0.015625) == "0.015625");
}

TEST_CASE("snapshot files are byte stable") {
    const sim::Grid1D grid{-1.0, 1.0, 16};
    sim::State s = sim::State::zeros(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        s.v[i] = 1.0 + 0.01 * i;
        s.u[i] = -0.3 + 0.02 * i;
        s.theta[i] = 1.0 / (1.0 + i);
        s.E[i] = 1e-5 * i;
        s.b[i] = -1e-7 * i * i;
    }
    io::write_snapshot_csv(scratch_path("a.csv"), grid, s);
    io::write_snapshot_csv(scratch_path("b.csv"), grid, s);
    const std::string a = io::read_file(scratch_path("a.csv"));
    CHECK(a == io::read_file(scratch_path("b.csv")));
    CHECK(a.rfind("x,v,u,theta,E,b\n", 0) == 0);
    int rows = 0;
    for (const char ch : a)
        if (ch == '\n') ++rows;
    CHECK(rows == grid.n + 1);
}

TEST_CASE("flat contact profile writes only its end states") {
    const auto prof = contact::solve_selfsimilar({1.0, 1.0, 1.0, 0.0}, {});
    io::write_contact_profile_csv(scratch_path("flat.csv"), prof);
    const std::string text = io::read_file(scratch_path("flat.csv"));
    CHECK(text.rfind("xi,theta,dtheta\n", 0) == 0);
    int rows = 0;
    for (const char ch : text)
        if (ch == '\n') ++rows;
    CHECK(rows == 3);
}

TEST_CASE("ledger json carries aligned series") {
    std::vector<diag::EnergyEntry> entries(3);
    for (int i = 0; i < 3; ++i) {
        entries[i].t = 10.0 * i;
        entries[i].l2_phi = 1.0 / (1 + i);
        entries[i].sup_E = 0.1 * i;
        entries[i].mass_residual = 1e-14 * i;
    }
    const std::vector<io::NamedFit> fits = {{"sup_total", -0.52, 0.03}};
    const auto j =
        io::ledger_json(app::to_json(sample_contact_scenario()), 12345u, entries, fits);
    REQUIRE(j.contains("scenario"));
    REQUIRE(j.contains("input_hash"));
    REQUIRE(j.contains("times"));
    REQUIRE(j.contains("norms"));
    REQUIRE(j.contains("identities"));
    REQUIRE(j.contains("fits"));
    CHECK(j["times"].size() == 3);
    CHECK(j["norms"]["l2_phi"].size() == 3);
    CHECK(j["norms"]["sup_E"][2] == 0.1 * 2);
    CHECK(j["identities"]["mass_residual"].size() == 3);
    CHECK(j["fits"][0]["name"] == "sup_total");
    CHECK(j["fits"][0]["exponent"] == -0.52);
}
