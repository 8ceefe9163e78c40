#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "lci/discrete.hpp"
#include "lci/tdag.hpp"

namespace lci {

/// Zero-mean Gaussian model X = A Z with Z standard normal; the covariance
/// AA^T is derived. A must be invertible.
struct GaussianModel {
    GroundSet ground;
    Eigen::MatrixXd factor;

    Eigen::MatrixXd covariance() const { return factor * factor.transpose(); }
};

GaussianModel make_gaussian(GroundSet ground, Eigen::MatrixXd factor);

/// Moving-average factor with row i supported on the ancestral set of i:
/// |a_ii| >= 0.5, off-diagonal entries seeded uniform in [-1, 1]. Projectors
/// of ancestral (order ideal) sets come out as diagonal indicators.
GaussianModel gaussian_from_tdag(const Tdag& g, std::uint64_t seed);

/// Orthogonal projector onto the row space of A_I (zero matrix for the empty
/// set). Throws NumericalError when the selected rows are rank deficient.
Eigen::MatrixXd projector(const GaussianModel& m, const IndexSet& i);

/// Complementary projector Q_{[n]\I} = I_n - P_I.
Eigen::MatrixXd q_projector(const GaussianModel& m, const IndexSet& i);

/// Three equivalent zero tests for a _||_ b | c, all evaluated:
///   schur: A_I A_J^T - A_I A_K^T (A_K A_K^T)^{-1} A_K A_J^T with I = a u c,
///          J = b u c, K = c,
///   commutator: P_I P_J - P_J P_I,
///   partial: P_I (I_n - P_K) P_J.
/// Disagreement between the three verdicts raises ContractViolation.
struct GaussianCiReport {
    bool pass = false;
    double schur_deviation = 0.0;
    double commutator_deviation = 0.0;
    double partial_deviation = 0.0;
};

GaussianCiReport check_gaussian_ci(const GaussianModel& m, const CiStatement& s, double tol);

/// Sorted eigenvalue positions: the projector is verified diagonal within
/// `tol` and its diagonal is returned rounded to the nearest integer.
std::vector<int> projector_spectrum(const GaussianModel& m, const IndexSet& i, double tol);

} // namespace lci
