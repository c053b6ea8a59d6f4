// wlg — Lorentz little groups, the O(3) → E(2) contraction, and the
// light-cone-squeezed oscillator behind the quark/parton transition.
//
// Every subcommand writes one machine-readable document (JSON, or CSV for
// wavefunction grids) to stdout; diagnostics go to stderr. Output is
// byte-deterministic for fixed flags. Exit codes: 0 success, 1 internal
// computation failure, 2 argument/validation error.

#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlg/contraction.hpp"
#include "wlg/four_vector.hpp"
#include "wlg/generators.hpp"
#include "wlg/grid.hpp"
#include "wlg/little_group.hpp"
#include "wlg/oscillator.hpp"
#include "wlg/parton.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";
constexpr double kAlgebraTolerance = 1e-12;
constexpr std::uint64_t kDefaultSeed = 1;
constexpr int kInvarianceDraws = 16;

// Shortest round-trip decimal representation.
std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Deterministic across platforms, unlike the distributions in <random>.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform(std::uint64_t& state, double lo, double hi) {
    const double unit =
        static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

ordered_json make_record(const std::string& command, ordered_json inputs) {
    ordered_json record;
    record["schema_version"] = kSchemaVersion;
    record["command"] = command;
    record["inputs"] = std::move(inputs);
    return record;
}

void print_record(const ordered_json& record) {
    std::cout << record.dump(2) << '\n';
}

ordered_json matrix_to_json(const wlg::Matrix4c& m) {
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        ordered_json re_row = ordered_json::array();
        ordered_json im_row = ordered_json::array();
        for (int c = 0; c < 4; ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return ordered_json{{"re", std::move(re)}, {"im", std::move(im)}};
}

int cmd_algebra_check() {
    ordered_json record = make_record("algebra-check",
                                      {{"tolerance", kAlgebraTolerance}});
    ordered_json relations = ordered_json::array();
    double max_deviation = 0.0;
    for (const auto& rel : wlg::lorentz_algebra_relations()) {
        const double dev = wlg::relation_deviation(rel);
        max_deviation = std::max(max_deviation, dev);
        relations.push_back({{"name", rel.name}, {"deviation", dev}});
    }
    record["results"] = {{"relations", std::move(relations)},
                         {"max_deviation", max_deviation},
                         {"pass", max_deviation <= kAlgebraTolerance}};
    print_record(record);
    return max_deviation <= kAlgebraTolerance ? 0 : 1;
}

int cmd_little_group(const std::array<double, 4>& p_in, std::uint64_t seed) {
    const wlg::FourVector p{p_in[0], p_in[1], p_in[2], p_in[3]};
    const wlg::LittleGroupBasis basis = wlg::little_group_generators(p);

    std::uint64_t state = seed;
    double max_dev = 0.0;
    for (int draw = 0; draw < kInvarianceDraws; ++draw) {
        const std::array<double, 3> params = {uniform(state, -3.0, 3.0),
                                              uniform(state, -3.0, 3.0),
                                              uniform(state, -3.0, 3.0)};
        max_dev = std::max(max_dev, wlg::verify_invariance(p, params));
    }

    ordered_json record = make_record(
        "little-group",
        {{"p", p_in}, {"seed", seed}, {"parameter_draws", kInvarianceDraws}});
    ordered_json generators = ordered_json::array();
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        ordered_json entry;
        entry["name"] = basis.names[i];
        entry.update(matrix_to_json(basis.generators[i]));
        generators.push_back(std::move(entry));
    }
    record["results"] = {{"class", wlg::to_string(basis.particle_class)},
                         {"eta", basis.eta},
                         {"generators", std::move(generators)},
                         {"max_invariance_deviation", max_dev}};
    print_record(record);
    return 0;
}

int cmd_gauge(double u, double v, const std::array<double, 4>& a_in) {
    const wlg::FourPotential a{a_in[0], a_in[1], a_in[2], a_in[3], 1.0, 1.0};
    const wlg::FourPotential out = wlg::gauge_transform(a, u, v);
    const double shift = u * a.a1 + v * a.a2;

    ordered_json record =
        make_record("gauge", {{"u", u}, {"v", v}, {"A", a_in}});
    record["results"] = {
        {"A_prime", {out.a1, out.a2, out.a3, out.a0}},
        {"shift", shift}};
    print_record(record);
    return 0;
}

int cmd_contract(const std::vector<double>& etas) {
    const wlg::ContractionReport report = wlg::contraction_report(etas);
    ordered_json record = make_record("contract", {{"etas", etas}});
    record["results"] = {{"etas", report.etas},
                         {"deviations_n1", report.deviations_n1},
                         {"deviations_n2", report.deviations_n2},
                         {"fitted_decay_rate", report.fitted_decay_rate}};
    print_record(record);
    return 0;
}

int cmd_parton_report(double energy, double mass) {
    const wlg::PartonReport r = wlg::parton_report(energy, mass);
    ordered_json record = make_record("parton-report",
                                      {{"energy", energy}, {"mass", mass}});
    record["results"] = {{"energy", r.energy},
                         {"mass", r.mass},
                         {"eta", r.eta},
                         {"gamma", r.gamma},
                         {"period_dilation", r.period_dilation},
                         {"interaction_ratio", r.interaction_ratio},
                         {"spatial_width", r.spatial_width},
                         {"momentum_width", r.momentum_width}};
    print_record(record);
    return 0;
}

int cmd_wavefunction(double eta, const std::string& space,
                     const std::vector<double>& window_flag,
                     const std::array<int, 2>& n, const std::string& format) {
    wlg::GridWindow window;
    if (window_flag.empty()) {
        const double half = wlg::default_half_width(wlg::Rapidity{eta});
        window = {{0.0, 0.0}, {half, half}};
    } else {
        window = {{window_flag[0], window_flag[1]},
                  {window_flag[2], window_flag[3]}};
    }

    const bool momentum = space == "momentum";
    const auto evaluate = [eta, momentum](double x1, double x2) {
        return momentum
                   ? wlg::momentum_amplitude(wlg::Rapidity{eta}, x1, x2)
                   : wlg::amplitude(wlg::Rapidity{eta}, x1, x2);
    };
    const wlg::Grid2D grid = wlg::sample_grid(evaluate, window, n);

    if (format == "csv") {
        std::string out;
        out.reserve(grid.values.size() * 24 + 32);
        out += "axis1,axis2,amplitude\n";
        for (int i = 0; i < n[0]; ++i) {
            const double x1 = grid.geom.origin[0] + i * grid.geom.spacing[0];
            for (int j = 0; j < n[1]; ++j) {
                const double x2 =
                    grid.geom.origin[1] + j * grid.geom.spacing[1];
                out += format_double(x1);
                out += ',';
                out += format_double(x2);
                out += ',';
                out += format_double(
                    grid.values[static_cast<std::size_t>(i) * n[1] + j]);
                out += '\n';
            }
        }
        std::cout << out;
        return 0;
    }

    ordered_json record = make_record(
        "wavefunction",
        {{"eta", eta},
         {"space", space},
         {"window",
          {{"center", window.center}, {"half_width", window.half_width}}},
         {"n", n},
         {"format", format}});
    record["results"] = {{"grid",
                          {{"origin", grid.geom.origin},
                           {"spacing", grid.geom.spacing},
                           {"n", grid.geom.n},
                           {"values", grid.values}}}};
    print_record(record);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Wigner little groups, group contraction, and Lorentz-squeezed "
        "oscillator wave functions"};
    app.require_subcommand(1);

    auto* algebra = app.add_subcommand(
        "algebra-check", "verify the generator commutation relations");

    auto* little = app.add_subcommand(
        "little-group", "little-group generators of a four-momentum");
    std::array<double, 4> p{0.0, 0.0, 0.0, 1.0};
    std::uint64_t seed = kDefaultSeed;
    little->add_option("--p", p, "four-momentum x y z t")->required();
    little->add_option("--seed", seed, "seed for randomized invariance check");

    auto* gauge = app.add_subcommand(
        "gauge", "gauge-transform a plane-wave four-potential");
    double u = 0.0, v = 0.0;
    std::array<double, 4> pot{0.0, 0.0, 0.0, 0.0};
    gauge->add_option("--u", u, "first gauge parameter")->required();
    gauge->add_option("--v", v, "second gauge parameter")->required();
    gauge->add_option("--A", pot, "potential amplitudes a1 a2 a3 a0")
        ->required();

    auto* contract = app.add_subcommand(
        "contract", "rotation-to-gauge contraction deviations and decay fit");
    std::vector<double> etas;
    contract->add_option("--etas", etas, "comma-separated rapidity list")
        ->delimiter(',')
        ->required();

    auto* wave = app.add_subcommand(
        "wavefunction", "sample a squeezed wave function on a grid");
    double eta = 0.0;
    std::string space = "position";
    std::string format = "csv";
    std::vector<double> window_flag;
    std::array<int, 2> n{101, 101};
    wave->add_option("--eta", eta, "boost rapidity")->required();
    wave->add_option("--space", space, "position or momentum")
        ->check(CLI::IsMember({"position", "momentum"}));
    wave->add_option("--window", window_flag,
                     "center1 center2 half_width1 half_width2")
        ->expected(4);
    wave->add_option("--n", n, "samples per axis");
    wave->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* parton = app.add_subcommand(
        "parton-report", "squeeze factors for a boosted hadron");
    double energy = 0.0, mass = 0.0;
    parton->add_option("--energy", energy, "hadron energy in GeV")->required();
    parton->add_option("--mass", mass, "hadron mass in GeV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*algebra) return cmd_algebra_check();
        if (*little) return cmd_little_group(p, seed);
        if (*gauge) return cmd_gauge(u, v, pot);
        if (*contract) return cmd_contract(etas);
        if (*wave) return cmd_wavefunction(eta, space, window_flag, n, format);
        if (*parton) return cmd_parton_report(energy, mass);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
