#pragma once

// Dense complex linear algebra for small pure-state problems: kets, operators,
// subsystem bookkeeping, partial traces, Hermitian spectra and Gram-Schmidt.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qclone/tolerances.hpp"

namespace qclone {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;

// A pure-state vector. Kets built through `unit` are checked for unit norm and
// carry that flag; everything else is a raw amplitude vector.
class Ket {
public:
    Ket() = default;
    explicit Ket(Vector amps) : amps_(std::move(amps)) {}
    Ket(std::initializer_list<cplx> amps);

    static Ket unit(Vector amps, double tol = Tolerances{}.norm);
    static Ket basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const Vector& amps() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
    bool is_unit() const { return unit_; }

    double norm() const { return amps_.norm(); }
    // Returns a unit-flagged copy; throws on a zero vector.
    Ket normalized() const;
    // Embeds into a larger register by zero padding.
    Ket padded(std::size_t dim) const;

private:
    Vector amps_;
    bool unit_ = false;
};

// <a|b>, antilinear in the first argument.
cplx inner(const Ket& a, const Ket& b);

Ket operator*(const Operator& op, const Ket& ket);
Ket operator+(const Ket& a, const Ket& b);
Ket operator-(const Ket& a, const Ket& b);
Ket operator*(cplx s, const Ket& ket);

// Kronecker product: amps[i * b.dim + j] = a[i] * b[j].
Ket tensor(const Ket& a, const Ket& b);
Ket tensor(std::initializer_list<Ket> factors);

Operator projector(const Ket& ket);
bool is_hermitian(const Operator& op, double tol = Tolerances{}.herm);
bool is_unitary(const Operator& op, double tol = Tolerances{}.norm);
double max_abs(const Operator& op);

enum class Party { Alice, Bob };

const char* to_string(Party p);

struct Subsystem {
    std::string label;
    std::size_t dim;
    Party owner;
};

// A split of every subsystem of a layout into an Alice group and a Bob group.
struct Bipartition {
    std::vector<std::string> alice;
    std::vector<std::string> bob;
};

// Ordered registry of tensor factors. The first subsystem is the most
// significant digit of the flat amplitude index.
class SystemLayout {
public:
    SystemLayout() = default;
    explicit SystemLayout(std::vector<Subsystem> subsystems);
    SystemLayout(std::initializer_list<Subsystem> subsystems)
        : SystemLayout(std::vector<Subsystem>(subsystems)) {}

    const std::vector<Subsystem>& subsystems() const { return subsystems_; }
    std::size_t size() const { return subsystems_.size(); }
    std::size_t total_dim() const;
    std::size_t index_of(const std::string& label) const;
    std::size_t dim_of(const std::string& label) const;
    std::size_t dim_of(const std::vector<std::string>& labels) const;

    // Partition induced by the owner of each subsystem.
    Bipartition owner_split() const;
    // Throws DimensionError unless the partition covers every label exactly
    // once, both sides are nonempty and each label sits with its owner.
    void validate(const Bipartition& partition) const;

private:
    std::vector<Subsystem> subsystems_;
};

// Reduced density operator on the kept subsystems (in layout order).
Operator partial_trace(const Ket& state, const SystemLayout& layout,
                       const std::vector<std::string>& keep);

struct EigenResult {
    std::vector<double> values;  // descending
    std::vector<Ket> vectors;    // orthonormal, vectors[k] belongs to values[k]
};

EigenResult eig_hermitian(const Operator& op, const Tolerances& tol = {});

// Modified Gram-Schmidt with one re-orthogonalization pass. Output k lies in
// the span of the first k inputs and has a real positive coefficient on input k.
std::vector<Ket> gram_schmidt(const std::vector<Ket>& vectors,
                              double tol = Tolerances{}.dependence);

// Extends an orthonormal family to a full basis of C^dim by orthogonalizing the
// standard basis vectors in index order and keeping those with residual > tol.
std::vector<Ket> complete_basis(const std::vector<Ket>& orthonormal, std::size_t dim,
                                double tol = Tolerances{}.dependence);

}  // namespace qclone
