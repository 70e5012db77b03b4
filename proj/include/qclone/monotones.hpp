#pragma once

// Entanglement monotones of bipartite pure states,
//   E^(l) = 1 - (sum of the l-1 largest eigenvalues of the reduced state),
// the ensemble LOCC criterion built from them, and the three matrix witnesses
// used to certify the strict monotone inequalities analytically.

#include <map>
#include <vector>

#include "qclone/tensor.hpp"

namespace qclone {

// Largest meaningful level for a partition: min(dim Alice, dim Bob) + 1.
int max_level(const SystemLayout& layout, const Bipartition& partition);

double monotone(const Ket& state, const SystemLayout& layout, const Bipartition& partition, int level,
                const Tolerances& tol = {});

struct MonotoneVector {
    Bipartition partition;
    std::map<int, double> values;  // levels 2 .. min(dim Alice, dim Bob)
};

MonotoneVector monotone_vector(const Ket& state, const SystemLayout& layout, const Bipartition& partition,
                               const Tolerances& tol = {});

// E^(l) from a descending spectrum; levels past the spectrum length give 1 - trace.
double monotone_from_spectrum(const std::vector<double>& descending, int level);

struct Outcome {
    double probability;
    Ket state;
    SystemLayout layout;
};

// One input state mapped to outcome k with probability gamma_k. Every layout is
// split by subsystem owner.
struct EnsembleTransform {
    Ket input;
    SystemLayout layout;
    std::vector<Outcome> outcomes;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<int> violated_levels;
    // E^(l)(input) - sum_k gamma_k E^(l)(output_k), per level.
    std::map<int, double> slack;
};

// Feasible iff the input monotone dominates the averaged output monotone (minus
// tol.eig) at every level l = 2 .. max over states of min(dim Alice, dim Bob).
FeasibilityReport locc_feasible(const EnsembleTransform& transform, const Tolerances& tol = {});

struct KappaDifference {
    double kappa;     // Re <0|rho_in - rho_out|1>
    double residual;  // largest deviation of the difference from kappa (|0><1| + |1><0|)
};

KappaDifference kappa_difference(const Operator& rho_in, const Operator& rho_out, const Tolerances& tol = {});

// Returns kappa after checking rho_in - rho_out = kappa (|0><1| + |1><0|) entrywise
// within tol.form and kappa > tol.form; throws WitnessError otherwise.
double kappa_witness(const Operator& rho_in, const Operator& rho_out, const Tolerances& tol = {});

struct PerronWitness {
    bool all_positive = false;
    double min_entry = 0.0;           // smallest real part over all nine entries
    double top_eigenvalue = 0.0;      // operator norm
    std::vector<double> perron_vector;  // filled only when all_positive
};

PerronWitness perron_witness(const Operator& rho, const Tolerances& tol = {});

// det of the upper-left 2x2 block of rho_in - P/2, P = |0><0| + |1><1|.
double determinant_witness(const Operator& rho_in, const Tolerances& tol = {});

}  // namespace qclone
