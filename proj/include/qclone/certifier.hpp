#pragma once

// LOCC-infeasibility certificates for the three-state cloning task.
//
// Any protocol that clones the three inputs must act on the whole span of
// {psi_i (x) phi_i} as v_i -> w_i, with outcome probabilities gamma_XY that do
// not depend on the input (XY in {AA', AB, BB'}). Two probe states entangled
// with an ancilla then bound those probabilities:
//
//   Phi probe (ancilla A'' with Alice): E^(3) is 0 before and 1/3 after a
//   BB' outcome, so gamma_BB' = 0.
//
//   Psi probe (ancilla B'' with Bob): E^(2) strictly increases on both the AB
//   and the AA' outcome, so gamma_AA' + gamma_AB < 1.
//
// Together the bounds contradict gamma_AA' + gamma_AB + gamma_BB' = 1.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qclone/cloning.hpp"
#include "qclone/monotones.hpp"
#include "qclone/state_sets.hpp"

namespace qclone {

struct ProbeStates {
    Ket phi_in;                  // A (x) B (x) A''
    SystemLayout phi_in_layout;
    Ket phi_out_bbp;             // B (x) B' (x) A''
    SystemLayout phi_out_bbp_layout;
    Ket psi_in;                  // A (x) B (x) B''
    SystemLayout psi_in_layout;
    Ket psi_out_aap;             // A (x) A' (x) B''
    SystemLayout psi_out_aap_layout;
    Ket psi_out_ab;              // A (x) B (x) B''
    SystemLayout psi_out_ab_layout;
};

ProbeStates build_probes(const CloningInstance& instance);

struct GammaBBBound {
    double e3_in;            // E^(3)_{A''A;B}(Phi_in)
    double e3_out;           // E^(3)_{A'';BB'}(Phi_out)
    double gamma_bbp_upper;  // e3_in / e3_out
    bool gamma_bbp_zero;
};

GammaBBBound gamma_bb_bound(const ProbeStates& probes, const Tolerances& tol = {});

struct GammaABound {
    double e2_in;        // E^(2)_{A;BB''}(Psi_in)
    double e2_out_ab;    // E^(2)_{A;BB''}(Psi_out_AB)
    double e2_out_aap;   // E^(2)_{AA';B''}(Psi_out_AA')
    double delta_ab;     // e2_out_ab - e2_in
    double delta_aap;    // e2_out_aap - e2_in
    double gamma_sum_upper;  // e2_in / min(e2_out_ab, e2_out_aap)
    bool gamma_sum_below_one;
};

GammaABound gamma_a_bound(const ProbeStates& probes, const Tolerances& tol = {});

// Reduced states of the Psi probe on register A, before and after the AB outcome.
std::pair<Operator, Operator> psi_reduced_states(const ProbeStates& probes);

enum class Verdict { Infeasible, Inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct LoccCertificate {
    Alpha alpha{};

    double e3_in = 0.0;
    double e3_out = 0.0;
    double gamma_bbp_upper = 0.0;

    double e2_in = 0.0;
    double e2_out_ab = 0.0;
    double e2_out_aap = 0.0;
    double delta_ab = 0.0;
    double delta_aap = 0.0;
    double gamma_sum_upper = 0.0;

    // Witness margins.
    double kappa = 0.0;
    double kappa_residual = 0.0;
    double det_witness = 0.0;
    double norm_rho_in = 0.0;
    double norm_rho_out = 0.0;
    double norm_rho_prime = 0.0;  // largest eigenvalue of the {|0>,|1>} block of rho_in
    bool perron_ok = false;
    double perron_min_entry = 0.0;
    std::vector<double> perron_vector;
    double perron_lower_bound = 0.0;  // 2 kappa c0 c1 + ||rho_out||, when perron_ok

    bool gamma_bbp_zero = false;
    bool gamma_sum_below_one = false;
    Verdict verdict = Verdict::Inconclusive;
};

// Infeasible iff e3_in < e3_out - margin and both deltas exceed margin.
Verdict recompute_verdict(const LoccCertificate& cert, const Tolerances& tol = {});

// Checks that the stored derived fields follow from the stored monotones.
bool is_self_consistent(const LoccCertificate& cert, const Tolerances& tol = {});

LoccCertificate certify(double alpha0, double alpha1, const Tolerances& tol = {});

// Grid points a_k = margin + k (1 - 2 margin) / (n - 1), k = 0 .. n-1, on both
// axes, keeping pairs with a0^2 + a1^2 <= 1; row-major with alpha0 outermost.
std::vector<std::pair<double, double>> sweep_grid(int n, double margin);

struct SweepRow {
    double alpha0;
    double alpha1;
    double delta_ab;
    double delta_aap;
};

std::vector<SweepRow> sweep(int n, double margin, const Tolerances& tol = {});

// Full pipeline for an arbitrary set: chain, canonical frame, supplementary
// states and a certificate for the embedded three-state instance.
struct VerificationReport {
    GramAnalysis analysis;
    Chain chain;
    SupplementaryAssignment supplementary;
    LoccCertificate certificate;
};

VerificationReport verify_set(const StateSet& set, const Tolerances& tol = {});

}  // namespace qclone
