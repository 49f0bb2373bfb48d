#pragma once

#include "rigiscope/geometry.hpp"

namespace rigiscope {

/// Full SVD with a relative rank cutoff:
/// rank = #{ sigma_i > sigma_max * max(rows, cols) * rank_eps }.
struct SvdAnalysis {
    Vector singular_values;
    Matrix left;    // full U
    Matrix right;   // full V
    double threshold = 0.0;
    int rank = 0;
};

SvdAnalysis svd_analyze(const Matrix& m, double rank_eps = 1e-12);

/// Deterministic numeric rank. Throws DomainError on non-finite entries.
int numeric_rank(const Matrix& m, double rank_eps = 1e-12);

/// Orthonormal basis of the right kernel (columns).
Matrix kernel_basis(const Matrix& m, double rank_eps = 1e-12);

/// Orthonormal basis of the left kernel (columns w with w'M = 0).
Matrix left_kernel_basis(const Matrix& m, double rank_eps = 1e-12);

/// Orthonormal basis of the column space.
Matrix range_basis(const Matrix& m, double rank_eps = 1e-12);

/// Largest principal angle between the column spans of two orthonormal
/// bases of equal dimension. Zero-dimensional spans compare equal.
double max_principal_angle(const Matrix& a, const Matrix& b);

}  // namespace rigiscope
