#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's own partial trace and eigensolver.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qclone/cloning.hpp"
#include "qclone/state_sets.hpp"
#include "qclone/tensor.hpp"

namespace qclone::testing {

inline std::mt19937_64& rng() {
    static thread_local std::mt19937_64 engine(20241015);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline cplx gaussian_complex() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng()), n(rng())};
}

inline Ket random_ket(std::size_t dim) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian_complex();
    return Ket(v).normalized();
}

// Haar-ish random unitary: QR of a complex Gaussian matrix with phases fixed.
inline Operator random_unitary(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    Operator g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = gaussian_complex();
    Eigen::HouseholderQR<Operator> qr(g);
    Operator q = qr.householderQ() * Operator::Identity(d, d);
    const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) q.col(k) *= std::polar(1.0, std::arg(r(k, k)));
    return q;
}

inline Operator kron(const Operator& a, const Operator& b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Operator random_hermitian(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    Operator g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = gaussian_complex();
    return 0.5 * (g + g.adjoint());
}

inline cplx random_phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

// (alpha0, alpha1) drawn from the open region a0, a1 > 0, a0^2 + a1^2 < 1.
inline std::pair<double, double> random_alpha() {
    for (;;) {
        const double a0 = uniform(1e-3, 1.0);
        const double a1 = uniform(1e-3, 1.0);
        if (a0 * a0 + a1 * a1 < 1.0) return {a0, a1};
    }
}

// Brute-force reduced state on the first factor of a two-factor vector.
inline Operator reduce_first(const Ket& s, std::size_t da, std::size_t db) {
    Operator rho = Operator::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(da));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k)
            for (std::size_t j = 0; j < db; ++j)
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) +=
                    s[i * db + j] * std::conj(s[k * db + j]);
    return rho;
}

// Brute-force reduced state on the last factor of a two-factor vector.
inline Operator reduce_last(const Ket& s, std::size_t da, std::size_t db) {
    Operator rho = Operator::Zero(static_cast<Eigen::Index>(db), static_cast<Eigen::Index>(db));
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l)
            for (std::size_t i = 0; i < da; ++i)
                rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) +=
                    s[i * db + j] * std::conj(s[i * db + l]);
    return rho;
}

// Eigenvalues of a 3x3 Hermitian matrix as roots of its characteristic
// polynomial (trigonometric form), descending.
inline std::array<double, 3> char_poly_eigenvalues(const Operator& m) {
    const double a = m(0, 0).real(), b = m(1, 1).real(), c = m(2, 2).real();
    const cplx d = m(0, 1), e = m(1, 2), f = m(0, 2);
    const double q = (a + b + c) / 3.0;
    const double p1 = std::norm(d) + std::norm(e) + std::norm(f);
    const double p2 = (a - q) * (a - q) + (b - q) * (b - q) + (c - q) * (c - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    if (p == 0.0) return {q, q, q};
    Operator bm = (m - q * Operator::Identity(3, 3)) / p;
    const double r = std::clamp(bm.determinant().real() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double l1 = q + 2.0 * p * std::cos(phi);
    const double l3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {l1, 3.0 * q - l1 - l3, l3};
}

inline Operator cnot_on_qutrit_block() {
    // Acts as controlled-NOT on span{|0>,|1>} (x) span{|0>,|1>} of two qutrits.
    Operator u = Operator::Identity(9, 9);
    const auto idx = [](int a, int b) { return static_cast<Eigen::Index>(3 * a + b); };
    u(idx(1, 0), idx(1, 0)) = 0.0;
    u(idx(1, 1), idx(1, 1)) = 0.0;
    u(idx(1, 1), idx(1, 0)) = 1.0;
    u(idx(1, 0), idx(1, 1)) = 1.0;
    return u;
}

// Canonical seed |0>, |1>, a0|0>+a1|1>+a2|2> embedded in C^dim, plus
// `extra` random states; every state is rotated by one random unitary and
// given a random phase.
inline StateSet random_chain_set(std::size_t extra, double a0, double a1, const Operator& rotation,
                                   std::vector<Ket>* seed_out = nullptr) {
    const std::size_t dim = static_cast<std::size_t>(rotation.rows());
    const double a2 = std::sqrt(std::max(0.0, 1.0 - a0 * a0 - a1 * a1));
    std::vector<Ket> seed{Ket::basis(dim, 0), Ket::basis(dim, 1), Ket{a0, a1, a2}.padded(dim)};
    for (std::size_t k = 0; k < extra; ++k) seed.push_back(random_ket(dim));
    if (seed_out) *seed_out = seed;
    std::vector<LabeledKet> states;
    for (std::size_t k = 0; k < seed.size(); ++k)
        states.push_back({"s" + std::to_string(k), rotation * (random_phase() * seed[k])});
    return StateSet(dim, std::move(states));
}

}  // namespace qclone::testing
