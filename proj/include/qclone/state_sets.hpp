#pragma once

// Classification of finite pure-state sets by their nonorthogonality graph:
// pair-wise nonorthogonal (PNO), reducible, or irreducible with an orthogonal
// pair. For the last kind, extracts a three-state chain with orthogonal
// endpoints and rotates it into the canonical frame
//   |0>, |1>, a0|0> + a1|1> + a2|2>.

#include <cstddef>
#include <string>
#include <vector>

#include "qclone/tensor.hpp"

namespace qclone {

struct LabeledKet {
    std::string label;
    Ket ket;
};

// Two or more unit kets of a common dimension with unique labels.
class StateSet {
public:
    StateSet(std::size_t dim, std::vector<LabeledKet> states, const Tolerances& tol = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return states_.size(); }
    const Ket& ket(std::size_t i) const { return states_.at(i).ket; }
    const std::string& label(std::size_t i) const { return states_.at(i).label; }
    const std::vector<LabeledKet>& states() const { return states_; }

private:
    std::size_t dim_;
    std::vector<LabeledKet> states_;
};

struct GramAnalysis {
    Operator gram;  // gram(i, j) = <psi_i|psi_j>
    bool is_pno = false;
    bool is_reducible = false;
    // Connected components of the graph with an edge wherever |<psi_i|psi_j>| > orth,
    // each sorted, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components;

    bool linked(std::size_t i, std::size_t j, double orth) const;
};

GramAnalysis analyze(const StateSet& set, const Tolerances& tol = {});

// Indices into a StateSet. Both links are nonorthogonal, the endpoints are orthogonal.
struct Chain {
    std::size_t first;
    std::size_t middle;
    std::size_t last;

    friend bool operator==(const Chain&, const Chain&) = default;
};

bool is_valid_chain(const StateSet& set, const Chain& chain, const Tolerances& tol = {});

// Shortest path (breadth-first, neighbours visited in index order) between two
// states of the nonorthogonality graph; empty if none exists.
std::vector<std::size_t> shortest_path(const GramAnalysis& analysis, std::size_t from,
                                       std::size_t to, const Tolerances& tol = {});

// Shortens a path xi, eta_1, ..., eta_m, zeta whose endpoints are orthogonal:
// while <xi|eta_2> != 0 drop eta_1, then return xi, eta_1, eta_2 (or xi, eta_1,
// zeta once only one interior node is left).
Chain reduce_path(const StateSet& set, const std::vector<std::size_t>& path,
                  const Tolerances& tol = {});

// Picks the lexicographically first orthogonal pair, joins it by a shortest
// path and reduces that path to a chain. Requires an irreducible, non-PNO set.
Chain find_orthogonal_chain(const StateSet& set, const Tolerances& tol = {});

struct CanonicalFrame {
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    // Unitary W with W (phases[k] psi_k) equal to the canonical form of state k.
    Operator basis_change;
    // Global phase applied to each state, indexed by original position.
    std::vector<cplx> phases;
    // order[new] = original index. The chain lands at positions 0 (first),
    // 1 (last) and 2 (middle); the remaining states follow in original order.
    std::vector<std::size_t> order;
    // The rotated states, listed in the new order.
    std::vector<LabeledKet> states;
};

CanonicalFrame canonicalize(const StateSet& set, const Chain& chain, const Tolerances& tol = {});

}  // namespace qclone
