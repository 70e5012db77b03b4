#pragma once

// Three-state cloning instances with nonlocal assistance. The originals are
//   psi_1 = |0>, psi_2 = |1>, psi_3 = a0|0> + a1|1> + a2|2>
// and the supplementary states phi_i are chosen so that
//   <psi_i|psi_j><phi_i|phi_j> = <psi_i|psi_j>^2,
// which makes psi_i (x) phi_i -> psi_i (x) psi_i realizable by one global unitary.

#include <array>
#include <cstddef>
#include <vector>

#include "qclone/state_sets.hpp"
#include "qclone/tensor.hpp"

namespace qclone {

// Every register of an instance (A, B and the copy registers) is a qutrit.
inline constexpr std::size_t kRegisterDim = 3;

struct Alpha {
    double a0;
    double a1;
    double a2;
};

// Checks a0 > 0, a1 > 0, a0^2 + a1^2 <= 1 (up to tol.norm) and returns the
// completed triple with a2 = sqrt(1 - a0^2 - a1^2).
Alpha validate_alpha(double alpha0, double alpha1, const Tolerances& tol = {});

std::array<Ket, 3> original_states(const Alpha& alpha);
std::array<Ket, 3> supplementary_states(double alpha0, double alpha1, const Tolerances& tol = {});

// max_{i,j} |<psi_i|psi_j><phi_i|phi_j> - <psi_i|psi_j>^2|
double compatibility_check(const std::vector<Ket>& psi, const std::vector<Ket>& phi);

struct CloningInstance {
    Alpha alpha;
    std::array<Ket, 3> psi;   // register A
    std::array<Ket, 3> phi;   // register B, supported on |0>, |1>
    std::array<Ket, 3> v;     // orthonormalized psi_i (x) phi_i
    std::array<Ket, 3> w;     // orthonormalized psi_i (x) psi_i
    Operator unitary;         // 9x9, maps v_i to w_i
};

// v and w come from Gram-Schmidt on the input and output families. The unitary
// is sum_k |w_k><v_k| over both bases completed against the standard basis in
// index order.
CloningInstance build_unitary(double alpha0, double alpha1, const Tolerances& tol = {});

// Largest ||U (psi_i (x) phi_i) - psi_i (x) psi_i|| over i.
double cloning_error(const CloningInstance& instance);

// Supplementary states for an arbitrary irreducible non-PNO set: the chain is
// moved to positions 1, 2, 3 (first, last, middle), those receive the three
// instance states, and every further state k (0-based, k >= 3) receives |k>.
struct SupplementaryAssignment {
    CanonicalFrame frame;
    std::size_t register_dim;
    std::vector<Ket> phi;  // phi[k] belongs to frame.order[k]
};

SupplementaryAssignment extend_supplementary(const StateSet& set, const Chain& chain,
                                             const Tolerances& tol = {});

}  // namespace qclone
