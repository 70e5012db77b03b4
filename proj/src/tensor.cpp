#include "qclone/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone {

Ket::Ket(std::initializer_list<cplx> amps) : amps_(static_cast<Eigen::Index>(amps.size())) {
    Eigen::Index i = 0;
    for (const cplx& a : amps) amps_(i++) = a;
}

Ket Ket::unit(Vector amps, double tol) {
    const double n = amps.norm();
    if (std::abs(n - 1.0) > tol) {
        std::ostringstream msg;
        msg << "ket norm " << n << " deviates from 1 by more than " << tol;
        throw DimensionError(msg.str());
    }
    Ket k(std::move(amps));
    k.unit_ = true;
    return k;
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("basis index out of range");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    Ket k(std::move(v));
    k.unit_ = true;
    return k;
}

Ket Ket::normalized() const {
    const double n = norm();
    if (n == 0.0) throw DimensionError("cannot normalize the zero vector");
    Ket k(amps_ / n);
    k.unit_ = true;
    return k;
}

Ket Ket::padded(std::size_t dim) const {
    if (dim < this->dim()) throw DimensionError("padded dimension smaller than ket");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v.head(amps_.size()) = amps_;
    Ket k(std::move(v));
    k.unit_ = unit_;
    return k;
}

cplx inner(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner product of kets with different dimensions");
    return a.amps().dot(b.amps());
}

Ket operator*(const Operator& op, const Ket& ket) {
    if (static_cast<std::size_t>(op.cols()) != ket.dim())
        throw DimensionError("operator/ket dimension mismatch");
    return Ket(Vector(op * ket.amps()));
}

Ket operator+(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw DimensionError("sum of kets with different dimensions");
    return Ket(Vector(a.amps() + b.amps()));
}

Ket operator-(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw DimensionError("difference of kets with different dimensions");
    return Ket(Vector(a.amps() - b.amps()));
}

Ket operator*(cplx s, const Ket& ket) { return Ket(Vector(s * ket.amps())); }

Ket tensor(const Ket& a, const Ket& b) {
    const auto da = static_cast<Eigen::Index>(a.dim());
    const auto db = static_cast<Eigen::Index>(b.dim());
    Vector out(da * db);
    for (Eigen::Index i = 0; i < da; ++i) out.segment(i * db, db) = a.amps()(i) * b.amps();
    if (a.is_unit() && b.is_unit()) return Ket::unit(std::move(out));
    return Ket(std::move(out));
}

Ket tensor(std::initializer_list<Ket> factors) {
    if (factors.size() == 0) throw DimensionError("tensor of an empty factor list");
    auto it = factors.begin();
    Ket acc = *it++;
    for (; it != factors.end(); ++it) acc = tensor(acc, *it);
    return acc;
}

Operator projector(const Ket& ket) { return ket.amps() * ket.amps().adjoint(); }

bool is_hermitian(const Operator& op, double tol) {
    if (op.rows() != op.cols()) return false;
    return max_abs(op - op.adjoint()) <= tol;
}

bool is_unitary(const Operator& op, double tol) {
    if (op.rows() != op.cols()) return false;
    return max_abs(op.adjoint() * op - Operator::Identity(op.rows(), op.cols())) <= tol;
}

double max_abs(const Operator& op) {
    return op.size() == 0 ? 0.0 : op.cwiseAbs().maxCoeff();
}

const char* to_string(Party p) { return p == Party::Alice ? "Alice" : "Bob"; }

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    if (subsystems_.empty()) throw DimensionError("layout needs at least one subsystem");
    std::set<std::string> seen;
    for (const auto& s : subsystems_) {
        if (s.dim == 0) throw DimensionError("subsystem '" + s.label + "' has dimension 0");
        if (!seen.insert(s.label).second)
            throw DimensionError("duplicate subsystem label '" + s.label + "'");
    }
}

std::size_t SystemLayout::total_dim() const {
    return std::accumulate(subsystems_.begin(), subsystems_.end(), std::size_t{1},
                           [](std::size_t acc, const Subsystem& s) { return acc * s.dim; });
}

std::size_t SystemLayout::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i)
        if (subsystems_[i].label == label) return i;
    throw DimensionError("unknown subsystem label '" + label + "'");
}

std::size_t SystemLayout::dim_of(const std::string& label) const {
    return subsystems_[index_of(label)].dim;
}

std::size_t SystemLayout::dim_of(const std::vector<std::string>& labels) const {
    std::size_t d = 1;
    for (const auto& l : labels) d *= dim_of(l);
    return d;
}

Bipartition SystemLayout::owner_split() const {
    Bipartition p;
    for (const auto& s : subsystems_) (s.owner == Party::Alice ? p.alice : p.bob).push_back(s.label);
    return p;
}

void SystemLayout::validate(const Bipartition& partition) const {
    if (partition.alice.empty() || partition.bob.empty())
        throw DimensionError("bipartition sides must be nonempty");
    std::set<std::string> seen;
    auto check = [&](const std::vector<std::string>& side, Party owner) {
        for (const auto& label : side) {
            const auto& s = subsystems_[index_of(label)];
            if (!seen.insert(label).second)
                throw DimensionError("label '" + label + "' appears twice in bipartition");
            if (s.owner != owner)
                throw DimensionError("label '" + label + "' is owned by " + to_string(s.owner));
        }
    };
    check(partition.alice, Party::Alice);
    check(partition.bob, Party::Bob);
    if (seen.size() != subsystems_.size())
        throw DimensionError("bipartition does not cover every subsystem");
}

Operator partial_trace(const Ket& state, const SystemLayout& layout,
                       const std::vector<std::string>& keep) {
    if (keep.empty()) throw DimensionError("partial trace needs a nonempty keep set");
    if (state.dim() != layout.total_dim())
        throw DimensionError("state dimension does not match layout");

    const std::size_t n = layout.size();
    std::vector<bool> kept(n, false);
    for (const auto& label : keep) {
        const std::size_t i = layout.index_of(label);
        if (kept[i]) throw DimensionError("label '" + label + "' repeated in keep set");
        kept[i] = true;
    }
    if (keep.size() == n) throw DimensionError("keep set must be a proper subset of the layout");

    std::size_t keep_dim = 1;
    std::size_t rest_dim = 1;
    for (std::size_t i = 0; i < n; ++i) (kept[i] ? keep_dim : rest_dim) *= layout.subsystems()[i].dim;

    // Reshape the amplitudes into M(kept, rest); the reduced state is M M^dagger.
    Operator m(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(rest_dim));
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t flat = 0; flat < state.dim(); ++flat) {
        std::size_t k = 0;
        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t d = layout.subsystems()[i].dim;
            if (kept[i]) k = k * d + digits[i];
            else r = r * d + digits[i];
        }
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) = state[flat];
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < layout.subsystems()[i].dim) break;
            digits[i] = 0;
        }
    }
    return m * m.adjoint();
}

EigenResult eig_hermitian(const Operator& op, const Tolerances& tol) {
    if (op.rows() != op.cols() || op.rows() == 0)
        throw PreconditionError("eigen decomposition needs a nonempty square operator");
    if (!is_hermitian(op, tol.herm)) throw PreconditionError("operator is not Hermitian");

    // Symmetrize away rounding noise before handing to the solver.
    const Operator h = 0.5 * (op + op.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> solver(h);
    if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");

    EigenResult result;
    const Eigen::Index n = h.rows();
    result.values.reserve(static_cast<std::size_t>(n));
    result.vectors.reserve(static_cast<std::size_t>(n));
    // Eigen sorts ascending; walk backwards for descending order.
    for (Eigen::Index k = n; k-- > 0;) {
        result.values.push_back(solver.eigenvalues()(k));
        result.vectors.push_back(Ket(Vector(solver.eigenvectors().col(k))).normalized());
    }
    return result;
}

namespace {

Vector orthogonalize(Vector r, const std::vector<Ket>& basis) {
    // Two sweeps of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass)
        for (const Ket& q : basis) r -= q.amps().dot(r) * q.amps();
    return r;
}

}  // namespace

std::vector<Ket> gram_schmidt(const std::vector<Ket>& vectors, double tol) {
    std::vector<Ket> out;
    out.reserve(vectors.size());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].dim() != vectors.front().dim())
            throw DimensionError("Gram-Schmidt inputs must share a dimension");
        Vector r = orthogonalize(vectors[k].amps(), out);
        const double n = r.norm();
        if (n <= tol) {
            std::ostringstream msg;
            msg << "vector " << k << " is linearly dependent on its predecessors (residual " << n << ")";
            throw LinearDependenceError(msg.str());
        }
        out.push_back(Ket(Vector(r / n)).normalized());
    }
    return out;
}

std::vector<Ket> complete_basis(const std::vector<Ket>& orthonormal, std::size_t dim, double tol) {
    std::vector<Ket> basis = orthonormal;
    for (const Ket& q : basis)
        if (q.dim() != dim) throw DimensionError("basis completion dimension mismatch");
    for (std::size_t i = 0; i < dim && basis.size() < dim; ++i) {
        Vector r = orthogonalize(Ket::basis(dim, i).amps(), basis);
        const double n = r.norm();
        if (n > tol) basis.push_back(Ket(Vector(r / n)).normalized());
    }
    if (basis.size() != dim) throw LinearDependenceError("could not complete basis");
    return basis;
}

}  // namespace qclone
