#include "qclone/certifier.hpp"

#include <algorithm>
#include <cmath>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

const std::string kA = "A";
const std::string kAp = "A'";
const std::string kApp = "A''";
const std::string kB = "B";
const std::string kBp = "B'";
const std::string kBpp = "B''";

constexpr std::size_t kAncillaPsi = 2;

// (1/sqrt 3) sum_i basis_i (x) |i>
Ket phi_probe(const std::array<Ket, 3>& basis) {
    Ket acc(Vector::Zero(static_cast<Eigen::Index>(basis[0].dim() * kRegisterDim)));
    for (std::size_t i = 0; i < 3; ++i) acc = acc + tensor(basis[i], Ket::basis(kRegisterDim, i));
    return Ket::unit(acc.amps() / std::sqrt(3.0));
}

// (1/2)(b_1 + b_2) (x) |0> + (1/sqrt 2) b_3 (x) |1>
Ket psi_probe(const std::array<Ket, 3>& basis) {
    const Ket zero = Ket::basis(kAncillaPsi, 0);
    const Ket one = Ket::basis(kAncillaPsi, 1);
    const Ket s = cplx{0.5} * tensor(basis[0] + basis[1], zero) + cplx{1.0 / std::sqrt(2.0)} * tensor(basis[2], one);
    return Ket::unit(s.amps());
}

double largest_eigenvalue(const Operator& op, const Tolerances& tol) { return eig_hermitian(op, tol).values.front(); }

}  // namespace

ProbeStates build_probes(const CloningInstance& instance) {
    ProbeStates p;
    p.phi_in = phi_probe(instance.v);
    p.phi_in_layout = {{kA, kRegisterDim, Party::Alice}, {kB, kRegisterDim, Party::Bob}, {kApp, kRegisterDim, Party::Alice}};
    p.phi_out_bbp = phi_probe(instance.w);
    p.phi_out_bbp_layout = {{kB, kRegisterDim, Party::Bob}, {kBp, kRegisterDim, Party::Bob}, {kApp, kRegisterDim, Party::Alice}};

    p.psi_in = psi_probe(instance.v);
    p.psi_in_layout = {{kA, kRegisterDim, Party::Alice}, {kB, kRegisterDim, Party::Bob}, {kBpp, kAncillaPsi, Party::Bob}};
    p.psi_out_ab = psi_probe(instance.w);
    p.psi_out_ab_layout = p.psi_in_layout;
    // Same amplitudes; the second register now sits with Alice as A'.
    p.psi_out_aap = p.psi_out_ab;
    p.psi_out_aap_layout = {{kA, kRegisterDim, Party::Alice}, {kAp, kRegisterDim, Party::Alice}, {kBpp, kAncillaPsi, Party::Bob}};
    return p;
}

GammaBBBound gamma_bb_bound(const ProbeStates& probes, const Tolerances& tol) {
    GammaBBBound b{};
    b.e3_in = monotone(probes.phi_in, probes.phi_in_layout, {{kApp, kA}, {kB}}, 3, tol);
    b.e3_out = monotone(probes.phi_out_bbp, probes.phi_out_bbp_layout, {{kApp}, {kB, kBp}}, 3, tol);
    b.gamma_bbp_upper = std::max(0.0, b.e3_in) / b.e3_out;
    b.gamma_bbp_zero = std::abs(b.e3_in) <= tol.margin && b.e3_out > tol.margin;
    return b;
}

GammaABound gamma_a_bound(const ProbeStates& probes, const Tolerances& tol) {
    GammaABound b{};
    b.e2_in = monotone(probes.psi_in, probes.psi_in_layout, {{kA}, {kB, kBpp}}, 2, tol);
    b.e2_out_ab = monotone(probes.psi_out_ab, probes.psi_out_ab_layout, {{kA}, {kB, kBpp}}, 2, tol);
    b.e2_out_aap = monotone(probes.psi_out_aap, probes.psi_out_aap_layout, {{kA, kAp}, {kBpp}}, 2, tol);
    b.delta_ab = b.e2_out_ab - b.e2_in;
    b.delta_aap = b.e2_out_aap - b.e2_in;
    b.gamma_sum_upper = std::max(0.0, b.e2_in) / std::min(b.e2_out_ab, b.e2_out_aap);
    b.gamma_sum_below_one = b.delta_ab > tol.margin && b.delta_aap > tol.margin;
    return b;
}

std::pair<Operator, Operator> psi_reduced_states(const ProbeStates& probes) {
    return {partial_trace(probes.psi_in, probes.psi_in_layout, {kA}),
            partial_trace(probes.psi_out_ab, probes.psi_out_ab_layout, {kA})};
}

const char* to_string(Verdict v) { return v == Verdict::Infeasible ? "LOCC-infeasible" : "inconclusive"; }

Verdict verdict_from_string(const std::string& s) {
    if (s == "LOCC-infeasible") return Verdict::Infeasible;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw ParameterError("unknown verdict '" + s + "'");
}

Verdict recompute_verdict(const LoccCertificate& c, const Tolerances& tol) {
    const bool phi_probe_strict = c.e3_in < c.e3_out - tol.margin;
    return phi_probe_strict && c.delta_ab > tol.margin && c.delta_aap > tol.margin ? Verdict::Infeasible
                                                                                   : Verdict::Inconclusive;
}

bool is_self_consistent(const LoccCertificate& c, const Tolerances& tol) {
    const auto close = [&](double a, double b) { return std::abs(a - b) <= tol.margin; };
    if (!close(c.delta_ab, c.e2_out_ab - c.e2_in) || !close(c.delta_aap, c.e2_out_aap - c.e2_in)) return false;
    if (c.gamma_bbp_zero != (std::abs(c.e3_in) <= tol.margin && c.e3_out > tol.margin)) return false;
    if (c.gamma_sum_below_one != (c.delta_ab > tol.margin && c.delta_aap > tol.margin)) return false;
    if (c.verdict != recompute_verdict(c, tol)) return false;
    if (c.det_witness < 0.0 && !(c.norm_rho_prime > 0.5)) return false;
    if (c.perron_ok && (c.perron_vector.size() != 3 || c.perron_lower_bound > c.norm_rho_in + tol.eig)) return false;
    const double sq = c.alpha.a0 * c.alpha.a0 + c.alpha.a1 * c.alpha.a1 + c.alpha.a2 * c.alpha.a2;
    return std::abs(sq - 1.0) <= tol.norm;
}

LoccCertificate certify(double alpha0, double alpha1, const Tolerances& tol) {
    const CloningInstance inst = build_unitary(alpha0, alpha1, tol);
    const ProbeStates probes = build_probes(inst);

    LoccCertificate c;
    c.alpha = inst.alpha;

    const GammaBBBound bb = gamma_bb_bound(probes, tol);
    c.e3_in = bb.e3_in;
    c.e3_out = bb.e3_out;
    c.gamma_bbp_upper = bb.gamma_bbp_upper;
    c.gamma_bbp_zero = bb.gamma_bbp_zero;

    const GammaABound ga = gamma_a_bound(probes, tol);
    c.e2_in = ga.e2_in;
    c.e2_out_ab = ga.e2_out_ab;
    c.e2_out_aap = ga.e2_out_aap;
    c.delta_ab = ga.delta_ab;
    c.delta_aap = ga.delta_aap;
    c.gamma_sum_upper = ga.gamma_sum_upper;
    c.gamma_sum_below_one = ga.gamma_sum_below_one;

    const auto [rho_in, rho_out] = psi_reduced_states(probes);
    const KappaDifference kd = kappa_difference(rho_in, rho_out, tol);
    c.kappa = kd.kappa;
    c.kappa_residual = kd.residual;
    c.det_witness = determinant_witness(rho_in, tol);
    c.norm_rho_in = largest_eigenvalue(rho_in, tol);
    c.norm_rho_out = largest_eigenvalue(rho_out, tol);
    c.norm_rho_prime = largest_eigenvalue(rho_in.topLeftCorner(2, 2), tol);

    const PerronWitness pw = perron_witness(rho_out, tol);
    c.perron_ok = pw.all_positive;
    c.perron_min_entry = pw.min_entry;
    c.perron_vector = pw.perron_vector;
    if (pw.all_positive)
        c.perron_lower_bound = 2.0 * c.kappa * pw.perron_vector[0] * pw.perron_vector[1] + pw.top_eigenvalue;

    c.verdict = recompute_verdict(c, tol);
    return c;
}

std::vector<std::pair<double, double>> sweep_grid(int n, double margin) {
    if (n < 2) throw ParameterError("sweep grid needs at least 2 points per axis");
    if (!(margin > 0.0) || !(margin < 0.5)) throw ParameterError("sweep margin must lie in (0, 1/2)");
    const double step = (1.0 - 2.0 * margin) / (n - 1);
    std::vector<std::pair<double, double>> points;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double a0 = margin + i * step;
            const double a1 = margin + j * step;
            if (a0 * a0 + a1 * a1 <= 1.0) points.emplace_back(a0, a1);
        }
    return points;
}

std::vector<SweepRow> sweep(int n, double margin, const Tolerances& tol) {
    std::vector<SweepRow> rows;
    for (const auto& [a0, a1] : sweep_grid(n, margin)) {
        const GammaABound b = gamma_a_bound(build_probes(build_unitary(a0, a1, tol)), tol);
        rows.push_back(SweepRow{a0, a1, b.delta_ab, b.delta_aap});
    }
    return rows;
}

VerificationReport verify_set(const StateSet& set, const Tolerances& tol) {
    GramAnalysis analysis = analyze(set, tol);
    if (analysis.is_pno)
        throw PreconditionError(
            "set is pair-wise nonorthogonal: the stronger no-cloning theorem applies, so any supplementary "
            "state that enables cloning produces the copy on its own");
    if (analysis.is_reducible)
        throw PreconditionError(
            "set is reducible: a projective measurement separates its orthogonal components without "
            "disturbance, so that split is freely clonable; verify each component separately");

    const Chain chain = find_orthogonal_chain(set, tol);
    SupplementaryAssignment supplementary = extend_supplementary(set, chain, tol);
    LoccCertificate certificate = certify(supplementary.frame.alpha0, supplementary.frame.alpha1, tol);
    return VerificationReport{std::move(analysis), chain, std::move(supplementary), std::move(certificate)};
}

}  // namespace qclone
