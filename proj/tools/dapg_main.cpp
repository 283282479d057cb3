// Command-line front end: geometry export, identity verification, Radon
// transforms, and the finite-shot tomography pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include "dapg/io.hpp"
#include "dapg/reference.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// substream tag for deriving the --random state from the user seed, clear of
// the per-basis measurement streams b + 1
constexpr std::uint64_t kStateStream = 997;

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    if (!dir.empty()) fs::create_directories(dir);
}

int run_geometry(int d, const std::string& out_dir) {
    const dapg::Geometry g(dapg::make_prime_dim(d));
    ensure_dir(out_dir);
    const std::string incidence = join(out_dir, "incidence.csv");
    const std::string lambda = join(out_dir, "lambda.csv");
    dapg::io::write_incidence_csv(incidence, g);
    dapg::io::write_lambda_csv(lambda, g);
    std::cout << "d = " << d << ": " << g.num_lines() << " lines, " << g.num_points()
              << " points\nwrote " << incidence << "\nwrote " << lambda << "\n";
    return 0;
}

int run_verify(int d, const std::string& out_path) {
    const dapg::Geometry g(dapg::make_prime_dim(d));
    const dapg::LineOperatorSet ops(g);
    const dapg::AxiomReport axioms = dapg::verify_dapg_axioms(g);
    const dapg::IdentityReport identities = dapg::verify_operator_identities(ops);
    const json report = dapg::io::verify_report_json(axioms, identities);
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) dapg::io::write_json_file(out_path, report);

    if (axioms.all_pass() && identities.all_pass()) return 0;
    std::string first = axioms.first_failure() ? axioms.first_failure()->name
                                               : identities.first_failure()->name;
    std::cerr << "verification failed: " << first << "\n";
    return 1;
}

int run_radon(int d, const std::string& direction, const std::string& in_path,
              const std::string& out_dir, const std::string& format) {
    const dapg::Geometry g(dapg::make_prime_dim(d));
    const dapg::LineOperatorSet ops(g);
    ensure_dir(out_dir);
    const bool as_json = format == "json";

    if (direction == "forward") {
        const dapg::Operator b = dapg::io::read_operator(in_path);
        const dapg::QuasiDistribution v = dapg::quasi_distribution(b, ops);
        const dapg::PointMarginals p = dapg::radon_forward(v, g);
        if (as_json) {
            dapg::io::write_json_file(join(out_dir, "quasi.json"), dapg::io::quasi_to_json(v));
            dapg::io::write_json_file(join(out_dir, "marginals.json"),
                                      dapg::io::marginals_to_json(p));
        } else {
            dapg::io::write_quasi_csv(join(out_dir, "quasi.csv"), v, g);
            dapg::io::write_marginals_csv(join(out_dir, "marginals.csv"), p, g);
        }
        std::cout << "wrote quasi-distribution and marginals to " << out_dir << "\n";
        return 0;
    }

    // inverse: marginals CSV -> quasi-distribution + reconstructed operator
    const dapg::PointMarginals p = dapg::io::read_marginals_csv(in_path);
    if (p.d != d) {
        throw std::invalid_argument("marginals file has d = " + std::to_string(p.d) +
                                    ", --d is " + std::to_string(d));
    }
    const dapg::QuasiDistribution v = dapg::radon_inverse(p, g);
    const dapg::Operator rho = dapg::reconstruct_operator(v, ops);
    if (as_json) {
        dapg::io::write_json_file(join(out_dir, "quasi.json"), dapg::io::quasi_to_json(v));
    } else {
        dapg::io::write_quasi_csv(join(out_dir, "quasi.csv"), v, g);
    }
    dapg::io::write_operator(join(out_dir, "operator.json"), rho);
    std::cout << "wrote quasi-distribution and reconstructed operator to " << out_dir << "\n";
    return 0;
}

int run_tomography(int d, const std::string& state_path, bool random_state,
                   const std::string& shots_arg, std::uint64_t seed, bool project_psd,
                   const std::string& out_path, const std::string& record_path) {
    bool exact = false;
    long long shots = 0;
    if (shots_arg == "exact") {
        exact = true;
    } else {
        try {
            size_t pos = 0;
            shots = std::stoll(shots_arg, &pos);
            if (pos != shots_arg.size()) throw std::invalid_argument(shots_arg);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--shots must be a positive integer or \"exact\"");
        }
        if (shots < 1) throw CLI::ValidationError("--shots must be >= 1 (or \"exact\")");
    }

    const dapg::Geometry g(dapg::make_prime_dim(d));
    const dapg::LineOperatorSet ops(g);

    dapg::Operator rho;
    if (random_state) {
        const dapg::Ket psi = dapg::random_pure_state(d, dapg::derive_seed(seed, kStateStream));
        rho = psi * psi.adjoint();
    } else {
        rho = dapg::io::read_operator(state_path);
        if (rho.rows() != d) {
            throw std::invalid_argument("state file has d = " + std::to_string(rho.rows()) +
                                        ", --d is " + std::to_string(d));
        }
        dapg::validate_density(rho);
    }

    dapg::PointMarginals p;
    if (exact) {
        p = dapg::exact_marginals(rho, ops);
    } else {
        const dapg::MeasurementRecord rec = dapg::simulate_measurements(rho, shots, seed, ops);
        if (!record_path.empty()) dapg::io::write_record(record_path, rec);
        p = dapg::estimate_marginals(rec);
    }

    dapg::ReconstructionReport report = dapg::reconstruct_state(p, ops, project_psd, &rho);
    report.shots = exact ? 0 : shots;
    const json j = dapg::io::report_to_json(report, exact);
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) dapg::io::write_json_file(out_path, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite phase-space toolkit: dual affine plane geometry, MUB line "
                 "operators, and the finite Radon transform"};
    app.require_subcommand(1);

    int d = 0;
    std::string out_dir = ".";
    std::string out_path;
    std::string in_path;
    std::string direction;
    std::string format = "csv";
    std::string state_path;
    std::string shots_arg;
    std::string record_path;
    std::uint64_t seed = 0;
    bool random_state = false;
    bool project_psd = false;

    auto* geometry = app.add_subcommand("geometry", "export incidence table and indicator matrix");
    geometry->add_option("--d", d, "odd prime dimension")->required();
    geometry->add_option("--out", out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "check geometry axioms and operator identities");
    verify->add_option("--d", d, "odd prime dimension")->required();
    verify->add_option("--out", out_path, "also write the JSON report here");

    auto* radon = app.add_subcommand("radon", "finite Radon transform of an operator");
    radon->add_option("--d", d, "odd prime dimension")->required();
    radon->add_option("--direction", direction, "forward or inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    radon->add_option("--in", in_path,
                      "operator JSON (forward) or marginals CSV (inverse)")
        ->required();
    radon->add_option("--out", out_dir, "output directory");
    radon->add_option("--format", format, "vector output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* tomo = app.add_subcommand("tomography", "simulate MUB measurements and reconstruct");
    tomo->add_option("--d", d, "odd prime dimension")->required();
    auto* state_opt = tomo->add_option("--state", state_path, "density matrix JSON");
    tomo->add_flag("--random", random_state, "draw a random pure state from the seed")
        ->excludes(state_opt);
    tomo->add_option("--shots", shots_arg, "shots per basis, or \"exact\"")->required();
    tomo->add_option("--seed", seed, "64-bit RNG seed");
    tomo->add_flag("--project-psd", project_psd, "clip negative eigenvalues, renormalize");
    tomo->add_option("--out", out_path, "also write the report JSON here");
    tomo->add_option("--record", record_path, "write the measurement record JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (geometry->parsed()) return run_geometry(d, out_dir);
        if (verify->parsed()) return run_verify(d, out_path);
        if (radon->parsed()) return run_radon(d, direction, in_path, out_dir, format);
        if (!random_state && state_path.empty()) {
            throw CLI::ValidationError("tomography needs --state <file> or --random");
        }
        return run_tomography(d, state_path, random_state, shots_arg, seed, project_psd,
                              out_path, record_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
