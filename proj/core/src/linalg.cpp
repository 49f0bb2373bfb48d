#include "rigiscope/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace rigiscope {

namespace {

void check_finite(const Matrix& m, const char* who) {
    if (!m.allFinite()) {
        throw DomainError(std::string(who) + ": matrix has non-finite entries");
    }
}

void check_eps(double rank_eps, const char* who) {
    if (!(rank_eps > 0.0)) {
        throw DomainError(std::string(who) + ": rank tolerance must be positive");
    }
}

int rank_from_values(const Vector& sv, Eigen::Index rows, Eigen::Index cols,
                     double rank_eps, double* threshold_out) {
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    const double threshold =
        sigma_max * static_cast<double>(std::max(rows, cols)) * rank_eps;
    if (threshold_out != nullptr) *threshold_out = threshold;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return rank;
}

}  // namespace

SvdAnalysis svd_analyze(const Matrix& m, double rank_eps) {
    check_finite(m, "svd_analyze");
    check_eps(rank_eps, "svd_analyze");
    SvdAnalysis out;
    if (m.rows() == 0 || m.cols() == 0) {
        out.left = Matrix::Identity(m.rows(), m.rows());
        out.right = Matrix::Identity(m.cols(), m.cols());
        out.singular_values = Vector(0);
        return out;
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.left = svd.matrixU();
    out.right = svd.matrixV();
    out.singular_values = svd.singularValues();
    out.rank = rank_from_values(out.singular_values, m.rows(), m.cols(), rank_eps,
                                &out.threshold);
    return out;
}

int numeric_rank(const Matrix& m, double rank_eps) {
    check_finite(m, "numeric_rank");
    check_eps(rank_eps, "numeric_rank");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return rank_from_values(svd.singularValues(), m.rows(), m.cols(), rank_eps,
                            nullptr);
}

Matrix kernel_basis(const Matrix& m, double rank_eps) {
    const SvdAnalysis svd = svd_analyze(m, rank_eps);
    return svd.right.rightCols(m.cols() - svd.rank);
}

Matrix left_kernel_basis(const Matrix& m, double rank_eps) {
    const SvdAnalysis svd = svd_analyze(m, rank_eps);
    return svd.left.rightCols(m.rows() - svd.rank);
}

Matrix range_basis(const Matrix& m, double rank_eps) {
    const SvdAnalysis svd = svd_analyze(m, rank_eps);
    return svd.left.leftCols(svd.rank);
}

double max_principal_angle(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("max_principal_angle: bases live in different spaces");
    }
    if (a.cols() != b.cols()) {
        throw DimensionError("max_principal_angle: subspace dimensions differ (" +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.cols()) + ")");
    }
    if (a.cols() == 0) return 0.0;
    // Sine form: the singular values of (I - A A')B are the sines of the
    // principal angles, which stays accurate for nearly equal subspaces
    // where the cosine form loses half the precision.
    const Matrix residual = b - a * (a.transpose() * b);
    Eigen::JacobiSVD<Matrix> svd(residual);
    const double largest = svd.singularValues()(0);
    return std::asin(std::clamp(largest, 0.0, 1.0));
}

}  // namespace rigiscope
