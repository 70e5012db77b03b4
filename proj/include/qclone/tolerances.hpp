#pragma once

namespace qclone {

// Numerical thresholds shared by every module. A default-constructed value
// carries the library defaults; callers that need different thresholds build
// their own and pass it down explicitly.
struct Tolerances {
    double norm = 1e-10;        // unit-norm check on kets
    double herm = 1e-10;        // Hermiticity check on operators
    double eig = 1e-9;          // eigen-reconstruction, trace and LOCC slack
    double orth = 1e-10;        // overlap modulus at or below which two states are orthogonal
    double dependence = 1e-8;   // Gram-Schmidt residual at or below which a vector is dependent
    double positivity = 1e-12;  // strict positivity of Perron entries
    double margin = 1e-12;      // strict inequalities between monotones
    double form = 1e-12;        // per-entry slack for the kappa-form check
};

}  // namespace qclone
