#include "qclone/state_sets.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "qclone/errors.hpp"

namespace qclone {

StateSet::StateSet(std::size_t dim, std::vector<LabeledKet> states, const Tolerances& tol)
    : dim_(dim), states_(std::move(states)) {
    if (states_.size() < 2) throw DimensionError("a state set needs at least two states");
    std::set<std::string> labels;
    for (auto& s : states_) {
        if (s.ket.dim() != dim_)
            throw DimensionError("state '" + s.label + "' does not match the set dimension");
        if (!labels.insert(s.label).second) throw DimensionError("duplicate state label '" + s.label + "'");
        s.ket = Ket::unit(s.ket.amps(), tol.norm);
    }
}

bool GramAnalysis::linked(std::size_t i, std::size_t j, double orth) const {
    return std::abs(gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > orth;
}

GramAnalysis analyze(const StateSet& set, const Tolerances& tol) {
    const std::size_t n = set.size();
    GramAnalysis a;
    a.gram.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                i == j ? cplx{1.0} : inner(set.ket(i), set.ket(j));

    a.is_pno = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!a.linked(i, j, tol.orth)) a.is_pno = false;

    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> component;
        std::deque<std::size_t> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            component.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && a.linked(u, v, tol.orth)) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        std::sort(component.begin(), component.end());
        a.components.push_back(std::move(component));
    }
    a.is_reducible = a.components.size() >= 2;
    return a;
}

bool is_valid_chain(const StateSet& set, const Chain& chain, const Tolerances& tol) {
    const std::size_t n = set.size();
    if (chain.first >= n || chain.middle >= n || chain.last >= n) return false;
    if (chain.first == chain.middle || chain.middle == chain.last || chain.first == chain.last) return false;
    const auto overlap = [&](std::size_t i, std::size_t j) { return std::abs(inner(set.ket(i), set.ket(j))); };
    return overlap(chain.first, chain.middle) > tol.orth && overlap(chain.middle, chain.last) > tol.orth &&
           overlap(chain.first, chain.last) <= tol.orth;
}

std::vector<std::size_t> shortest_path(const GramAnalysis& analysis, std::size_t from, std::size_t to,
                                       const Tolerances& tol) {
    const auto n = static_cast<std::size_t>(analysis.gram.rows());
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n, none);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (std::size_t v = 0; v < n; ++v)
            if (parent[v] == none && analysis.linked(u, v, tol.orth)) {
                parent[v] = u;
                queue.push_back(v);
            }
    }
    if (parent[to] == none) return {};
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

Chain reduce_path(const StateSet& set, const std::vector<std::size_t>& path, const Tolerances& tol) {
    if (path.size() < 3) throw PreconditionError("a path between orthogonal states has at least three nodes");
    const auto linked = [&](std::size_t i, std::size_t j) {
        return std::abs(inner(set.ket(i), set.ket(j))) > tol.orth;
    };
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (!linked(path[k], path[k + 1])) throw PreconditionError("consecutive path nodes are orthogonal");
    if (linked(path.front(), path.back())) throw PreconditionError("path endpoints are not orthogonal");

    std::vector<std::size_t> p = path;
    // p = xi, eta_1, ..., eta_m, zeta
    while (p.size() > 3 && linked(p[0], p[2])) p.erase(p.begin() + 1);
    return Chain{p[0], p[1], p[2]};
}

Chain find_orthogonal_chain(const StateSet& set, const Tolerances& tol) {
    const GramAnalysis a = analyze(set, tol);
    if (a.is_pno) throw PreconditionError("set is pair-wise nonorthogonal; no orthogonal chain exists");
    if (a.is_reducible) throw PreconditionError("set is reducible; no chain joins its components");

    const std::size_t n = set.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.linked(i, j, tol.orth)) continue;
            return reduce_path(set, shortest_path(a, i, j, tol), tol);
        }
    throw PreconditionError("no orthogonal pair found");
}

CanonicalFrame canonicalize(const StateSet& set, const Chain& chain, const Tolerances& tol) {
    if (!is_valid_chain(set, chain, tol)) throw PreconditionError("chain is not valid for this set");

    const std::size_t n = set.size();
    const std::size_t dim = set.dim();
    CanonicalFrame frame;
    frame.phases.assign(n, cplx{1.0});

    const Ket& xi = set.ket(chain.first);
    const cplx first_overlap = inner(xi, set.ket(chain.middle));
    frame.phases[chain.middle] = std::polar(1.0, -std::arg(first_overlap));
    const Ket eta = frame.phases[chain.middle] * set.ket(chain.middle);

    const cplx last_overlap = inner(set.ket(chain.last), eta);
    frame.phases[chain.last] = std::polar(1.0, std::arg(last_overlap));
    const Ket zeta = frame.phases[chain.last] * set.ket(chain.last);

    frame.alpha0 = std::abs(first_overlap);
    frame.alpha1 = std::abs(last_overlap);
    frame.alpha2 = 0.0;

    std::vector<Ket> frame_vectors = gram_schmidt({xi, zeta}, tol.dependence);
    if (dim >= 3) {
        // Measured directly; sqrt(1 - a0^2 - a1^2) amplifies rounding near the boundary.
        const Ket residual = eta - cplx{frame.alpha0} * frame_vectors[0] - cplx{frame.alpha1} * frame_vectors[1];
        if (residual.norm() > tol.dependence) {
            frame.alpha2 = residual.norm();
            frame_vectors.push_back(residual.normalized());
        }
    }
    frame_vectors = complete_basis(frame_vectors, dim, tol.dependence);

    frame.basis_change.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k)
        frame.basis_change.row(static_cast<Eigen::Index>(k)) = frame_vectors[k].amps().adjoint();

    frame.order = {chain.first, chain.last, chain.middle};
    for (std::size_t i = 0; i < n; ++i)
        if (i != chain.first && i != chain.middle && i != chain.last) frame.order.push_back(i);

    for (std::size_t idx : frame.order)
        frame.states.push_back(LabeledKet{set.label(idx), frame.basis_change * (frame.phases[idx] * set.ket(idx))});
    return frame;
}

}  // namespace qclone
