// Command-line surface for the spinpair library.
//
// Subcommands: amplitude, prob, expect, gcg, chsh, sample, verify.
// Reports go to standard output as a single JSON object or as CSV with a
// header row; every floating-point number is printed in shortest
// round-trip form so JSON and CSV carry identical values.
//
// Exit codes: 0 success, 1 domain error (a message names the violated
// constraint), 2 parse error (usage text follows the message).

#include "spinpair/compounding.hpp"
#include "spinpair/core.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/matrix_rep.hpp"
#include "spinpair/probabilities.hpp"
#include "spinpair/serialize.hpp"
#include "spinpair/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using spinpair::CompoundState;
using spinpair::Direction;
using spinpair::JointOutcome;
using spinpair::TotalSpin;
using spinpair::TripletProjection;

// Options shared by the state-evaluating subcommands. Angles are stored as
// parsed; `scale()` converts to radians when --degrees was given.
struct CommonOptions {
    int s = 0;
    int m = 0;
    double theta = 0.0, phi = 0.0;      // compound axis
    double theta1 = 0.0, phi1 = 0.0;    // detector 1
    double theta2 = 0.0, phi2 = 0.0;    // detector 2
    std::string format = "json";
    bool degrees = false;

    double scale() const { return degrees ? spinpair::kPi / 180.0 : 1.0; }

    Direction axis() const { return Direction(theta * scale(), phi * scale()); }
    Direction c1() const { return Direction(theta1 * scale(), phi1 * scale()); }
    Direction c2() const { return Direction(theta2 * scale(), phi2 * scale()); }

    CompoundState state() const {
        const TotalSpin spin = (s == 0) ? TotalSpin::Singlet : TotalSpin::Triplet;
        const TripletProjection proj = (m > 0)   ? TripletProjection::Plus
                                       : (m < 0) ? TripletProjection::Minus
                                                 : TripletProjection::Zero;
        return CompoundState(spin, proj, axis());
    }
};

void add_state_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--s", opt.s, "total spin: 0 (singlet) or 1 (triplet)")
        ->required()
        ->check(CLI::IsMember({0, 1}));
    cmd->add_option("--M", opt.m, "total projection along the axis: -1, 0 or 1")
        ->check(CLI::IsMember({-1, 0, 1}));
    cmd->add_option("--theta", opt.theta, "polar angle of the compound axis");
    cmd->add_option("--phi", opt.phi, "azimuth of the compound axis");
}

void add_detector_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--theta1", opt.theta1, "polar angle of detector 1");
    cmd->add_option("--phi1", opt.phi1, "azimuth of detector 1");
    cmd->add_option("--theta2", opt.theta2, "polar angle of detector 2");
    cmd->add_option("--phi2", opt.phi2, "azimuth of detector 2");
}

void add_output_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--degrees", opt.degrees, "interpret all angle flags as degrees");
}

// Shortest round-trip decimal text for any numeric value, shared between
// the JSON and CSV writers so both formats print identical numbers.
template <typename T>
std::string num(T value) {
    return nlohmann::json(value).dump();
}

void print_json(const nlohmann::json& report) { std::cout << report.dump(2) << '\n'; }

int run_amplitude(const CommonOptions& opt) {
    const CompoundState state = opt.state();
    nlohmann::json report;
    std::ostringstream csv;
    csv << "outcome,re,im\n";
    for (const auto& out : spinpair::joint_outcomes()) {
        const spinpair::Amplitude amp =
            spinpair::compound_amplitude(state, out, opt.c1(), opt.c2());
        report[spinpair::outcome_label(out)] = spinpair::to_json(amp);
        csv << spinpair::outcome_label(out) << ',' << num(amp.real()) << ','
            << num(amp.imag()) << '\n';
    }
    if (opt.format == "csv") {
        std::cout << csv.str();
    } else {
        print_json(report);
    }
    return 0;
}

int run_prob(const CommonOptions& opt) {
    const auto q = spinpair::joint_probabilities(opt.state(), opt.c1(), opt.c2());
    nlohmann::json report;
    std::ostringstream csv;
    csv << "outcome,probability\n";
    for (const auto& out : spinpair::joint_outcomes()) {
        report[spinpair::outcome_label(out)] = q[out];
        csv << spinpair::outcome_label(out) << ',' << num(q[out]) << '\n';
    }
    if (opt.format == "csv") {
        std::cout << csv.str();
    } else {
        print_json(report);
    }
    return 0;
}

int run_expect(const CommonOptions& opt, const std::vector<double>& r_values) {
    spinpair::OutcomeValues r;
    for (std::size_t k = 0; k < 4; ++k) r.r[k] = r_values[k];
    const auto q = spinpair::joint_probabilities(opt.state(), opt.c1(), opt.c2());
    double weighted = 0.0;
    for (const auto& out : spinpair::joint_outcomes()) weighted += r[out] * q[out];

    if (opt.format == "csv") {
        std::cout << "expectation\n" << num(weighted) << '\n';
    } else {
        print_json({{"expectation", weighted}});
    }
    return 0;
}

int run_gcg(const CommonOptions& opt) {
    const CompoundState state = opt.state();  // validates (s, M) before the table
    nlohmann::json entries, magnitudes;
    std::ostringstream csv;
    csv << "pair,re,im,magnitude\n";
    for (const auto& out : spinpair::joint_outcomes()) {
        const spinpair::Amplitude value = spinpair::generalized_cg(
            state.s(), state.m(), out.m1, out.m2, state.axis());
        entries[spinpair::outcome_label(out)] = spinpair::to_json(value);
        magnitudes[spinpair::outcome_label(out)] = std::abs(value);
        csv << spinpair::outcome_label(out) << ',' << num(value.real()) << ','
            << num(value.imag()) << ',' << num(std::abs(value)) << '\n';
    }
    if (opt.format == "csv") {
        std::cout << csv.str();
    } else {
        print_json({{"entries", entries}, {"magnitudes", magnitudes}});
    }
    return 0;
}

int run_chsh(const CommonOptions& opt, const std::vector<std::vector<double>>& settings,
             double plane_phi, int coarse_points, int refine_rounds) {
    const CompoundState state = opt.state();
    const std::size_t given =
        static_cast<std::size_t>(!settings[0].empty()) + !settings[1].empty() +
        !settings[2].empty() + !settings[3].empty();

    if (given == 4) {
        std::array<Direction, 4> dirs;
        for (std::size_t k = 0; k < 4; ++k) {
            dirs[k] = Direction(settings[k][0] * opt.scale(), settings[k][1] * opt.scale());
        }
        const double value = spinpair::chsh(state, dirs[0], dirs[1], dirs[2], dirs[3]);
        if (opt.format == "csv") {
            std::cout << "chsh\n" << num(value) << '\n';
        } else {
            print_json({{"chsh", value}});
        }
        return 0;
    }
    if (given != 0) {
        throw std::invalid_argument(
            "chsh: give all four of --a1 --a2 --b1 --b2, or none of them to scan");
    }

    const spinpair::ChshScanResult res = spinpair::chsh_coplanar_scan(
        state, plane_phi * opt.scale(), coarse_points, refine_rounds);
    if (opt.format == "csv") {
        std::cout << "best_value,a1,a2,b1,b2,evaluations,max_abs_seen\n"
                  << num(res.best_value) << ',' << num(res.best_angles[0]) << ','
                  << num(res.best_angles[1]) << ',' << num(res.best_angles[2]) << ','
                  << num(res.best_angles[3]) << ',' << num(res.evaluations) << ','
                  << num(res.max_abs_seen) << '\n';
    } else {
        print_json({{"best_value", res.best_value},
                    {"best_angles", res.best_angles},
                    {"evaluations", res.evaluations},
                    {"max_abs_seen", res.max_abs_seen}});
    }
    return 0;
}

int run_sample(const CommonOptions& opt, std::uint64_t n, std::uint64_t seed) {
    const spinpair::SampleCounts counts =
        spinpair::sample_outcomes(opt.state(), opt.c1(), opt.c2(), n, seed);
    if (opt.format == "csv") {
        std::cout << "n,seed,++,+-,-+,--,empirical_correlation\n"
                  << num(counts.n) << ',' << num(counts.seed) << ',' << num(counts.counts[0])
                  << ',' << num(counts.counts[1]) << ',' << num(counts.counts[2]) << ','
                  << num(counts.counts[3]) << ',' << num(counts.empirical_correlation())
                  << '\n';
    } else {
        print_json(spinpair::to_json(counts));
    }
    return 0;
}

int run_verify(std::uint64_t seed) {
    const auto results = spinpair::run_verification(seed);
    bool all_passed = true;
    for (const auto& suite : results) {
        all_passed = all_passed && suite.passed;
        std::ostringstream err;
        err.precision(2);
        err << std::scientific << suite.max_error;
        std::cout << (suite.passed ? "[PASS] " : "[FAIL] ") << suite.name << " ("
                  << suite.checks << " checks, max err " << err.str() << ")\n";
        if (!suite.passed) {
            std::cout << "       " << suite.detail << '\n';
        }
    }
    std::cout << (all_passed ? "all suites passed" : "verification FAILED") << '\n';
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compound spin-1/2 pair calculator: amplitudes, probabilities, "
                 "expectations, generalized couplings, CHSH scans, sampling"};
    app.require_subcommand(1);

    CommonOptions amplitude_opt;
    CLI::App* amplitude = app.add_subcommand(
        "amplitude", "joint outcome amplitudes for a compound state");
    add_state_flags(amplitude, amplitude_opt);
    add_detector_flags(amplitude, amplitude_opt);
    add_output_flags(amplitude, amplitude_opt);

    CommonOptions prob_opt;
    CLI::App* prob =
        app.add_subcommand("prob", "joint outcome probabilities for a compound state");
    add_state_flags(prob, prob_opt);
    add_detector_flags(prob, prob_opt);
    add_output_flags(prob, prob_opt);

    CommonOptions expect_opt;
    std::vector<double> expect_r = {1.0, -1.0, -1.0, 1.0};
    CLI::App* expect =
        app.add_subcommand("expect", "expectation of an outcome-valued observable");
    add_state_flags(expect, expect_opt);
    add_detector_flags(expect, expect_opt);
    add_output_flags(expect, expect_opt);
    expect
        ->add_option("--r", expect_r,
                     "outcome values r(++),r(+-),r(-+),r(--); default is the "
                     "correlation product")
        ->expected(4)
        ->delimiter(',');

    CommonOptions gcg_opt;
    CLI::App* gcg = app.add_subcommand(
        "gcg", "generalized Clebsch-Gordan coefficients along the compound axis");
    add_state_flags(gcg, gcg_opt);
    add_output_flags(gcg, gcg_opt);

    CommonOptions chsh_opt;
    std::vector<std::vector<double>> chsh_settings(4);
    double plane_phi = spinpair::kPi / 2.0;
    int coarse_points = 24;
    int refine_rounds = 40;
    CLI::App* chsh_cmd = app.add_subcommand(
        "chsh", "CHSH combination at explicit settings, or a coplanar scan");
    add_state_flags(chsh_cmd, chsh_opt);
    add_output_flags(chsh_cmd, chsh_opt);
    chsh_cmd->add_option("--a1", chsh_settings[0], "first setting of side A: theta phi")
        ->expected(2)
        ->delimiter(',');
    chsh_cmd->add_option("--a2", chsh_settings[1], "second setting of side A: theta phi")
        ->expected(2)
        ->delimiter(',');
    chsh_cmd->add_option("--b1", chsh_settings[2], "first setting of side B: theta phi")
        ->expected(2)
        ->delimiter(',');
    chsh_cmd->add_option("--b2", chsh_settings[3], "second setting of side B: theta phi")
        ->expected(2)
        ->delimiter(',');
    chsh_cmd->add_option("--plane-phi", plane_phi, "azimuth of the scan plane");
    chsh_cmd->add_option("--coarse-points", coarse_points, "coarse grid points per angle");
    chsh_cmd->add_option("--refine-rounds", refine_rounds, "refinement rounds");

    CommonOptions sample_opt;
    std::uint64_t sample_n = 0;
    std::uint64_t sample_seed = 1;
    CLI::App* sample = app.add_subcommand("sample", "draw outcomes with a seeded sampler");
    add_state_flags(sample, sample_opt);
    add_detector_flags(sample, sample_opt);
    add_output_flags(sample, sample_opt);
    sample->add_option("--n", sample_n, "number of draws")->required();
    sample->add_option("--seed", sample_seed, "sampler seed");

    std::uint64_t verify_seed = 1;
    CLI::App* verify =
        app.add_subcommand("verify", "run every library invariant suite");
    verify->add_option("--seed", verify_seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (amplitude->parsed()) return run_amplitude(amplitude_opt);
        if (prob->parsed()) return run_prob(prob_opt);
        if (expect->parsed()) return run_expect(expect_opt, expect_r);
        if (gcg->parsed()) return run_gcg(gcg_opt);
        if (chsh_cmd->parsed()) {
            return run_chsh(chsh_opt, chsh_settings, plane_phi, coarse_points, refine_rounds);
        }
        if (sample->parsed()) return run_sample(sample_opt, sample_n, sample_seed);
        if (verify->parsed()) return run_verify(verify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
