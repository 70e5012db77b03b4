#include "qclone/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

void check_density_3x3(const Operator& rho, const Tolerances& tol, const char* what) {
    if (rho.rows() != 3 || rho.cols() != 3) throw DimensionError(std::string(what) + " must be 3x3");
    if (!is_hermitian(rho, tol.herm)) throw PreconditionError(std::string(what) + " is not Hermitian");
    if (std::abs(rho.trace() - cplx{1.0}) > tol.eig)
        throw PreconditionError(std::string(what) + " does not have unit trace");
}

std::vector<double> alice_spectrum(const Ket& state, const SystemLayout& layout, const Bipartition& partition,
                                   const Tolerances& tol) {
    layout.validate(partition);
    return eig_hermitian(partial_trace(state, layout, partition.alice), tol).values;
}

int min_side(const SystemLayout& layout) {
    const Bipartition p = layout.owner_split();
    layout.validate(p);
    return static_cast<int>(std::min(layout.dim_of(p.alice), layout.dim_of(p.bob)));
}

}  // namespace

int max_level(const SystemLayout& layout, const Bipartition& partition) {
    layout.validate(partition);
    return static_cast<int>(std::min(layout.dim_of(partition.alice), layout.dim_of(partition.bob))) + 1;
}

double monotone_from_spectrum(const std::vector<double>& descending, int level) {
    double top = 0.0;
    for (int i = 0; i < level - 1 && i < static_cast<int>(descending.size()); ++i)
        top += descending[static_cast<std::size_t>(i)];
    return 1.0 - top;
}

double monotone(const Ket& state, const SystemLayout& layout, const Bipartition& partition, int level,
                const Tolerances& tol) {
    const int top = max_level(layout, partition);
    if (level < 2 || level > top) {
        std::ostringstream msg;
        msg << "monotone level " << level << " outside [2, " << top << "]";
        throw DimensionError(msg.str());
    }
    return monotone_from_spectrum(alice_spectrum(state, layout, partition, tol), level);
}

MonotoneVector monotone_vector(const Ket& state, const SystemLayout& layout, const Bipartition& partition,
                               const Tolerances& tol) {
    MonotoneVector mv{partition, {}};
    const int top = max_level(layout, partition) - 1;
    const auto spectrum = alice_spectrum(state, layout, partition, tol);
    for (int l = 2; l <= top; ++l) mv.values[l] = monotone_from_spectrum(spectrum, l);
    return mv;
}

FeasibilityReport locc_feasible(const EnsembleTransform& t, const Tolerances& tol) {
    double total = 0.0;
    for (const auto& o : t.outcomes) {
        if (!std::isfinite(o.probability) || o.probability < 0.0)
            throw ParameterError("outcome probabilities must be finite and nonnegative");
        total += o.probability;
    }
    if (total > 1.0 + tol.eig) throw ParameterError("outcome probabilities sum to more than 1");

    int top = min_side(t.layout);
    for (const auto& o : t.outcomes) top = std::max(top, min_side(o.layout));

    const auto in_spec = alice_spectrum(t.input, t.layout, t.layout.owner_split(), tol);
    std::vector<std::vector<double>> out_spec;
    for (const auto& o : t.outcomes) out_spec.push_back(alice_spectrum(o.state, o.layout, o.layout.owner_split(), tol));

    FeasibilityReport report;
    for (int l = 2; l <= top; ++l) {
        double averaged = 0.0;
        for (std::size_t k = 0; k < t.outcomes.size(); ++k)
            averaged += t.outcomes[k].probability * monotone_from_spectrum(out_spec[k], l);
        const double slack = monotone_from_spectrum(in_spec, l) - averaged;
        report.slack[l] = slack;
        if (slack < -tol.eig) {
            report.feasible = false;
            report.violated_levels.push_back(l);
        }
    }
    return report;
}

KappaDifference kappa_difference(const Operator& rho_in, const Operator& rho_out, const Tolerances& tol) {
    check_density_3x3(rho_in, tol, "rho_in");
    check_density_3x3(rho_out, tol, "rho_out");
    const Operator diff = rho_in - rho_out;
    KappaDifference k{diff(0, 1).real(), 0.0};
    Operator form = Operator::Zero(3, 3);
    form(0, 1) = form(1, 0) = k.kappa;
    k.residual = max_abs(diff - form);
    return k;
}

double kappa_witness(const Operator& rho_in, const Operator& rho_out, const Tolerances& tol) {
    const KappaDifference k = kappa_difference(rho_in, rho_out, tol);
    if (k.residual > tol.form) {
        std::ostringstream msg;
        msg << "rho_in - rho_out is not of the form kappa(|0><1| + |1><0|) (residual " << k.residual << ")";
        throw WitnessError(msg.str());
    }
    if (!(k.kappa > tol.form)) {
        std::ostringstream msg;
        msg << "kappa = " << k.kappa << " is not strictly positive";
        throw WitnessError(msg.str());
    }
    return k.kappa;
}

PerronWitness perron_witness(const Operator& rho, const Tolerances& tol) {
    if (rho.rows() != 3 || rho.cols() != 3) throw DimensionError("Perron witness expects a 3x3 operator");
    PerronWitness w;
    w.min_entry = rho.real().minCoeff();
    w.all_positive = w.min_entry > tol.positivity && rho.imag().cwiseAbs().maxCoeff() <= tol.herm;

    const EigenResult eig = eig_hermitian(rho, tol);
    w.top_eigenvalue = eig.values.front();
    if (!w.all_positive) return w;

    // Rotate the top eigenvector to be real with a positive sum.
    Vector top = eig.vectors.front().amps();
    Eigen::Index pivot = 0;
    top.cwiseAbs().maxCoeff(&pivot);
    top *= std::polar(1.0, -std::arg(top(pivot)));
    for (Eigen::Index i = 0; i < top.size(); ++i) w.perron_vector.push_back(top(i).real());
    return w;
}

double determinant_witness(const Operator& rho_in, const Tolerances& tol) {
    check_density_3x3(rho_in, tol, "rho_in");
    const double a = rho_in(0, 0).real() - 0.5;
    const double d = rho_in(1, 1).real() - 0.5;
    return a * d - std::norm(rho_in(0, 1));
}

}  // namespace qclone
