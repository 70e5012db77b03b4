#include "qclone/cloning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone {

namespace {
constexpr double kBoundarySnap = 8.0 * std::numeric_limits<double>::epsilon();
}  // namespace

Alpha validate_alpha(double alpha0, double alpha1, const Tolerances& tol) {
    if (!std::isfinite(alpha0) || !std::isfinite(alpha1))
        throw ParameterError("alpha parameters must be finite");
    if (alpha0 <= 0.0 || alpha1 <= 0.0) {
        std::ostringstream msg;
        msg << "alpha0 and alpha1 must be strictly positive (got " << alpha0 << ", " << alpha1 << ")";
        throw ParameterError(msg.str());
    }
    const double s = alpha0 * alpha0 + alpha1 * alpha1;
    if (s > 1.0 + tol.norm) {
        std::ostringstream msg;
        msg << "alpha0^2 + alpha1^2 = " << s << " exceeds 1";
        throw ParameterError(msg.str());
    }
    // A residual within a few ulps of zero is rounding in a0^2 + a1^2, not a
    // genuine |2> component; sqrt would inflate it to ~1e-8.
    const double rest = 1.0 - s;
    return Alpha{alpha0, alpha1, rest <= kBoundarySnap ? 0.0 : std::sqrt(rest)};
}

std::array<Ket, 3> original_states(const Alpha& alpha) {
    return {Ket::basis(kRegisterDim, 0), Ket::basis(kRegisterDim, 1),
            Ket::unit(Ket{alpha.a0, alpha.a1, alpha.a2}.amps())};
}

std::array<Ket, 3> supplementary_states(double alpha0, double alpha1, const Tolerances& tol) {
    validate_alpha(alpha0, alpha1, tol);
    const double c0 = std::sqrt(std::max(0.0, 1.0 - alpha0 * alpha0));
    const double c1 = std::sqrt(std::max(0.0, 1.0 - alpha1 * alpha1));
    return {Ket::basis(kRegisterDim, 0),
            Ket::unit(Ket{alpha0 * alpha1 + c0 * c1, c0 * alpha1 - alpha0 * c1, 0.0}.amps()),
            Ket::unit(Ket{alpha0, c0, 0.0}.amps())};
}

double compatibility_check(const std::vector<Ket>& psi, const std::vector<Ket>& phi) {
    if (psi.size() != phi.size()) throw DimensionError("psi and phi families differ in length");
    double worst = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) {
            const cplx p = inner(psi[i], psi[j]);
            worst = std::max(worst, std::abs(p * inner(phi[i], phi[j]) - p * p));
        }
    return worst;
}

CloningInstance build_unitary(double alpha0, double alpha1, const Tolerances& tol) {
    CloningInstance inst;
    inst.alpha = validate_alpha(alpha0, alpha1, tol);
    const double a0 = inst.alpha.a0;
    const double a1 = inst.alpha.a1;
    // Norm of the third Gram-Schmidt residual, squared.
    if (!(1.0 - std::pow(a0, 4) - std::pow(a1, 4) > 0.0))
        throw ParameterError("degenerate instance: 1 - a0^4 - a1^4 <= 0");

    inst.psi = original_states(inst.alpha);
    inst.phi = supplementary_states(alpha0, alpha1, tol);

    std::vector<Ket> inputs;
    std::vector<Ket> outputs;
    for (std::size_t i = 0; i < 3; ++i) {
        inputs.push_back(tensor(inst.psi[i], inst.phi[i]));
        outputs.push_back(tensor(inst.psi[i], inst.psi[i]));
    }
    const std::vector<Ket> v = gram_schmidt(inputs, tol.dependence);
    const std::vector<Ket> w = gram_schmidt(outputs, tol.dependence);
    std::copy(v.begin(), v.end(), inst.v.begin());
    std::copy(w.begin(), w.end(), inst.w.begin());

    constexpr std::size_t total = kRegisterDim * kRegisterDim;
    const std::vector<Ket> v_full = complete_basis(v, total, tol.dependence);
    const std::vector<Ket> w_full = complete_basis(w, total, tol.dependence);
    inst.unitary = Operator::Zero(total, total);
    for (std::size_t k = 0; k < total; ++k) inst.unitary += w_full[k].amps() * v_full[k].amps().adjoint();
    return inst;
}

double cloning_error(const CloningInstance& instance) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const Ket out = instance.unitary * tensor(instance.psi[i], instance.phi[i]);
        worst = std::max(worst, (out - tensor(instance.psi[i], instance.psi[i])).norm());
    }
    return worst;
}

SupplementaryAssignment extend_supplementary(const StateSet& set, const Chain& chain, const Tolerances& tol) {
    const GramAnalysis analysis = analyze(set, tol);
    if (analysis.is_pno || analysis.is_reducible)
        throw PreconditionError("supplementary extension needs an irreducible, non-PNO set");

    SupplementaryAssignment out{canonicalize(set, chain, tol), std::max(kRegisterDim, set.size()), {}};
    const auto base = supplementary_states(out.frame.alpha0, out.frame.alpha1, tol);
    for (const Ket& phi : base) out.phi.push_back(phi.padded(out.register_dim));
    for (std::size_t k = 3; k < set.size(); ++k) out.phi.push_back(Ket::basis(out.register_dim, k));
    return out;
}

}  // namespace qclone
