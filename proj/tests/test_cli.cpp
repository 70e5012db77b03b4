#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qclone/cli.hpp"
#include "qclone/serialization.hpp"

using namespace qclone;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using io::json;

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qclone");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qclone_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::string original_states_file() {
    return write("original.json", io::dump(io::to_json(StateSet(3, {{"psi1", Ket::basis(3, 0)},
                                                                     {"psi2", Ket::basis(3, 1)},
                                                                     {"psi3", Ket{kInvSqrt2, kInvSqrt2, 0.0}}}))));
}

}  // namespace

TEST_CASE("analyze classifies the original three states", "[cli][analyze]") {
    const Result r = run({"analyze", original_states_file()});
    REQUIRE(r.code == cli::kExitOk);
    const json j = io::parse(r.out);
    CHECK(j["classification"] == "irreducible-non-pno");
    CHECK(j["chain"]["labels"] == json{"psi1", "psi3", "psi2"});
    CHECK_THAT(j["alpha"]["alpha0"].get<double>(), WithinAbs(kInvSqrt2, 1e-12));
    CHECK_THAT(j["alpha"]["alpha1"].get<double>(), WithinAbs(kInvSqrt2, 1e-12));
    CHECK_THAT(j["alpha"]["alpha2"].get<double>(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("analyze reports a reducible pair", "[cli][analyze]") {
    const std::string path = write("pair.json", io::dump(io::to_json(StateSet(2, {{"a", Ket::basis(2, 0)}, {"b", Ket::basis(2, 1)}}))));
    const Result r = run({"analyze", path});
    CHECK(r.code == cli::kExitOk);
    const json j = io::parse(r.out);
    CHECK(j["classification"] == "reducible");
    CHECK_FALSE(j.contains("chain"));
}

TEST_CASE("analyze rejects bad input with exit code 2", "[cli][analyze]") {
    const Result malformed = run({"analyze", write("bad.json", "{\"dim\": 3, \"states\": [")});
    CHECK(malformed.code == cli::kExitUsage);
    CHECK_THAT(malformed.err, ContainsSubstring("malformed JSON"));

    const Result mismatch = run({"analyze", write("mismatch.json", R"({"dim": 3, "states": [{"label": "a", "re": [1, 0], "im": [0, 0]}, {"label": "b", "re": [0, 1], "im": [0, 0]}]})")});
    CHECK(mismatch.code == cli::kExitUsage);
    CHECK_THAT(mismatch.err, ContainsSubstring("expected 3"));

    CHECK(run({"analyze", scratch("does-not-exist.json").string()}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("certify exit codes and output", "[cli][certify]") {
    const Result ok = run({"certify", "--alpha0", "0.7071067811865476", "--alpha1", "0.7071067811865476"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(io::parse(ok.out)["verdict"] == "LOCC-infeasible");

    const Result bad = run({"certify", "--alpha0", "1.0", "--alpha1", "0.5"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK_THAT(bad.err, ContainsSubstring("exceeds 1"));

    CHECK(run({"certify", "--alpha0", "0.5"}).code == cli::kExitUsage);
    CHECK(run({"certify", "--alpha0", "zero", "--alpha1", "0.5"}).code == cli::kExitUsage);

    const std::string path = scratch("cert.json").string();
    const Result file = run({"certify", "--alpha0", "0.3", "--alpha1", "0.4", "--out", path});
    CHECK(file.code == cli::kExitOk);
    CHECK(file.out.empty());
    const json w = io::parse(slurp(path))["witnesses"];
    CHECK(w["perron_ok"] == true);
    CHECK(w["perron_vector"].size() == 3);
    CHECK(w["kappa"].get<double>() > 0.0);
    CHECK(w["det"].get<double>() < 0.0);
}

TEST_CASE("construct emits a reloadable instance", "[cli][construct]") {
    const Result canonical = run({"construct", "--alpha0", "0.7071067811865476", "--alpha1", "0.7071067811865476"});
    REQUIRE(canonical.code == cli::kExitOk);
    const CloningInstance inst = io::instance_from_json(io::parse(canonical.out));
    CHECK((inst.phi[1] - Ket::basis(3, 0)).norm() <= 1e-15);
    CHECK((inst.phi[2] - Ket{kInvSqrt2, kInvSqrt2, 0.0}).norm() <= 1e-15);

    const Result other = run({"construct", "--alpha0", "0.3", "--alpha1", "0.4"});
    REQUIRE(other.code == cli::kExitOk);
    const CloningInstance second = io::instance_from_json(io::parse(other.out));
    CHECK(is_unitary(second.unitary, 1e-10));
    CHECK((second.phi[1] - inst.phi[1]).norm() > 1e-3);

    CHECK(run({"construct", "--alpha0", "-0.1", "--alpha1", "0.4"}).code == cli::kExitUsage);
}

TEST_CASE("verify runs the full pipeline", "[cli][verify]") {
    const Result r = run({"verify", original_states_file()});
    CHECK(r.code == cli::kExitOk);
    const json j = io::parse(r.out);
    CHECK(j["certificate"]["verdict"] == "LOCC-infeasible");
    const json direct = io::parse(run({"certify", "--alpha0", "0.7071067811865476", "--alpha1", "0.7071067811865476"}).out);
    CHECK_THAT(j["certificate"]["psi_probe"]["delta_AB"].get<double>(),
               WithinAbs(direct["psi_probe"]["delta_AB"].get<double>(), 1e-12));

    const std::string pno = write("pno.json", io::dump(io::to_json(StateSet(2, {{"a", Ket::basis(2, 0)}, {"b", Ket{0.6, 0.8}}}))));
    const Result p = run({"verify", pno});
    CHECK(p.code == cli::kExitUsage);
    CHECK_THAT(p.err, ContainsSubstring("stronger no-cloning"));
}

TEST_CASE("sweep writes a deterministic CSV", "[cli][sweep]") {
    const Result two = run({"sweep", "--grid", "2"});
    CHECK(two.code == cli::kExitOk);
    CHECK(io::sweep_from_csv(two.out).size() == 3);

    const std::string a = scratch("sweep_a.csv").string();
    const std::string b = scratch("sweep_b.csv").string();
    CHECK(run({"sweep", "--grid", "12", "--out", a}).code == cli::kExitOk);
    CHECK(run({"sweep", "--grid", "12", "--out", b}).code == cli::kExitOk);
    CHECK(slurp(a) == slurp(b));
    for (const auto& row : io::sweep_from_csv(slurp(a))) {
        CHECK(row.delta_ab > 1e-12);
        CHECK(row.delta_aap > 1e-12);
    }

    const Result unwritable = run({"sweep", "--grid", "2", "--out", (scratch("missing-dir") / "x" / "y.csv").string()});
    CHECK(unwritable.code == cli::kExitUsage);
    CHECK_THAT(unwritable.err, ContainsSubstring("cannot write"));
    CHECK(run({"sweep", "--grid", "1"}).code == cli::kExitUsage);
}

TEST_CASE("--tol overrides the default thresholds", "[cli]") {
    // A state 1e-9 off unit norm is renormalized with a warning by default, but
    // accepted silently once the norm threshold is loosened.
    const std::string path = write("loose.json", R"({"dim": 2, "states": [{"label": "a", "re": [1.000000001, 0], "im": [0, 0]}, {"label": "b", "re": [0.6, 0.8], "im": [0, 0]}]})");
    const Result strict = run({"analyze", path});
    CHECK(strict.code == cli::kExitOk);
    CHECK_THAT(strict.err, ContainsSubstring("warning"));
    const Result loose = run({"--tol", "1e-8", "analyze", path});
    CHECK(loose.code == cli::kExitOk);
    CHECK(loose.err.empty());
    CHECK(run({"--tol", "-1", "analyze", path}).code == cli::kExitUsage);
}
