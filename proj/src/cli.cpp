#include "qclone/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qclone/certifier.hpp"
#include "qclone/errors.hpp"
#include "qclone/serialization.hpp"

namespace qclone::cli {

namespace {

struct IoError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << text;
    if (!f) throw IoError("failed writing '" + path + "'");
}

StateSet load_set(const std::string& path, const Tolerances& tol, std::ostream& err) {
    std::vector<std::string> warnings;
    StateSet set = io::state_set_from_json(io::parse(read_file(path)), &warnings, tol);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return set;
}

int verdict_code(Verdict v) { return v == Verdict::Infeasible ? kExitOk : kExitInconclusive; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructs nonlocally assisted cloning instances and certifies LOCC infeasibility"};
    app.require_subcommand(1);

    double tol_override = 0.0;
    app.add_option("--tol", tol_override, "Override the norm, Hermiticity and orthogonality thresholds (default 1e-10)")
        ->check(CLI::PositiveNumber);

    std::string in_path;
    std::string out_path;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    int grid = 50;
    double margin = 1e-3;

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify a state-set file (PNO / reducible / chain)");
    analyze_cmd->add_option("path", in_path, "State-set JSON file")->required();
    analyze_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* construct_cmd = app.add_subcommand("construct", "Build the cloning instance and its global unitary");
    auto* certify_cmd = app.add_subcommand("certify", "Certify LOCC infeasibility at (alpha0, alpha1)");
    for (auto* cmd : {construct_cmd, certify_cmd}) {
        cmd->add_option("--alpha0", alpha0, "Overlap <psi_1|psi_3>")->required();
        cmd->add_option("--alpha1", alpha1, "Overlap <psi_2|psi_3>")->required();
        cmd->add_option("--out", out_path, "Output file (default stdout)");
    }

    auto* verify_cmd = app.add_subcommand("verify", "Run the full pipeline on an irreducible non-PNO state set");
    verify_cmd->add_option("path", in_path, "State-set JSON file")->required();
    verify_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the monotone gaps over the (alpha0, alpha1) grid as CSV");
    sweep_cmd->add_option("--grid", grid, "Points per axis")->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--margin", margin, "Distance kept from the axes and from 1");
    sweep_cmd->add_option("--out", out_path, "Output CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Tolerances tol;
    if (tol_override > 0.0) tol.norm = tol.herm = tol.orth = tol_override;

    try {
        if (*analyze_cmd) {
            const StateSet set = load_set(in_path, tol, err);
            const GramAnalysis a = analyze(set, tol);
            io::json report = io::to_json(a, set);
            if (!a.is_pno && !a.is_reducible) {
                const Chain chain = find_orthogonal_chain(set, tol);
                const CanonicalFrame frame = canonicalize(set, chain, tol);
                report["chain"] = {{"indices", {chain.first, chain.middle, chain.last}},
                                   {"labels", {set.label(chain.first), set.label(chain.middle), set.label(chain.last)}}};
                report["alpha"] = {{"alpha0", frame.alpha0}, {"alpha1", frame.alpha1}, {"alpha2", frame.alpha2}};
            }
            emit(io::dump(report), out_path, out);
            return kExitOk;
        }
        if (*construct_cmd) {
            emit(io::dump(io::to_json(build_unitary(alpha0, alpha1, tol))), out_path, out);
            return kExitOk;
        }
        if (*certify_cmd) {
            const LoccCertificate cert = certify(alpha0, alpha1, tol);
            emit(io::dump(io::to_json(cert)), out_path, out);
            return verdict_code(cert.verdict);
        }
        if (*verify_cmd) {
            const StateSet set = load_set(in_path, tol, err);
            const VerificationReport report = verify_set(set, tol);
            emit(io::dump(io::to_json(report, set)), out_path, out);
            return verdict_code(report.certificate.verdict);
        }
        if (*sweep_cmd) {
            const auto rows = sweep(grid, margin, tol);
            emit(io::to_csv(rows), out_path, out);
            for (const auto& r : rows)
                if (!(r.delta_ab > tol.margin && r.delta_aap > tol.margin)) return kExitInconclusive;
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qclone::cli
