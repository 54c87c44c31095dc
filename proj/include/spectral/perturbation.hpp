#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <utility>

#include "spectral/measure.hpp"

namespace spectral {

/// Jacobians of the model sum_k e^{i j x_k} w_k with respect to location
/// shifts and relative weight shifts, rows indexed j = -max_freq .. max_freq:
///   location_jacobian(j, k) = i * j * e^{i j x_k}
///   weight_jacobian(j, k)   = e^{i j x_k}
struct DesignMatrices {
  Eigen::MatrixXcd location_jacobian;  // (2n+1) x r
  Eigen::MatrixXcd weight_jacobian;    // (2n+1) x r
  Eigen::VectorXcd weight_diag;        // the r weights w_k
  int max_freq = 0;

  int order() const { return static_cast<int>(weight_diag.size()); }
};

/// The four r x r conjugate-transpose products of the design matrices.
/// loc_loc and wt_wt are Hermitian PSD; wt_loc is the adjoint of loc_wt.
struct GramBlocks {
  Eigen::MatrixXcd loc_loc;  // location_jacobian^* location_jacobian
  Eigen::MatrixXcd loc_wt;   // location_jacobian^* weight_jacobian
  Eigen::MatrixXcd wt_loc;   // weight_jacobian^* location_jacobian
  Eigen::MatrixXcd wt_wt;    // weight_jacobian^* weight_jacobian
};

/// First-order perturbation solve. location_shift holds the angle updates a_k
/// (radians, complex with small imaginary part), weight_shift the relative
/// weight updates b_k. scaled_location / scaled_weight are the weight-scaled
/// intermediates u = W a, v = W b. residual_norm is the normal-equation
/// residual ||G [u; v] - rhs||.
struct PerturbationSolution {
  Eigen::VectorXcd location_shift;
  Eigen::VectorXcd weight_shift;
  Eigen::VectorXcd scaled_location;
  Eigen::VectorXcd scaled_weight;
  double residual_norm = 0.0;
  double condition = 0.0;  // condition estimate of the 2r x 2r Gram matrix
};

/// Requires n >= 1.
DesignMatrices build_design(const SpikeMeasure& measure, int n);

/// Design matrices for raw (not necessarily sorted) locations and weights.
DesignMatrices build_design(std::span<const double> locations,
                            std::span<const std::complex<double>> weights, int n);

GramBlocks gram_blocks(const DesignMatrices& design);

/// sum_{j=-n}^{n} e^{i j t} = sin((n+1/2) t) / sin(t/2), with the removable
/// singularity at t = 0 (mod 2*pi) evaluated as 2n+1. Near the singularity
/// (|sin(t/2)| < 1e-6) falls back to direct summation.
double dirichlet_sum(int n, double t);

/// sum_{j=-n}^{n} (i j)^order e^{i j t} for order 1 or 2 (both real-valued),
/// closed form away from t = 0 (mod 2*pi), direct summation near it.
std::complex<double> dirichlet_derivative(int n, double t, int order);

/// Solves the linearized least-squares problem
///   min over (a, b) of sum_j | sum_k e^{i j x_k} w_k (i j a_k + b_k) - z_j |^2
/// by QR factorization of the stacked scaled Jacobian, cross-checked against
/// the diagonally preconditioned normal-equation solve. Throws EstimatorError
/// when the Gram condition estimate exceeds cond_threshold or the two solution
/// paths disagree.
PerturbationSolution solve_first_order(const DesignMatrices& design,
                                       const Eigen::VectorXcd& z,
                                       double cond_threshold = 1e12);

/// Max-norm distance between the Gram matrix scaled by
/// diag(n^{-3/2} I, n^{-1/2} I) on both sides and its n -> infinity limit
/// diag((2/3) I, 2 I). Tends to 0 as n grows for well-separated spikes.
double scaled_gram_deviation(const GramBlocks& gram, int n);

/// Exact standard deviations of each entry of (location_jacobian^* z,
/// weight_jacobian^* z) under the noise model with parameters (sigma, p):
///   ( sigma * sqrt(sum_j j^2 |j|^{2p}), sigma * sqrt(sum_j |j|^{2p}) ).
std::pair<double, double> rhs_noise_scales(int n, double sigma, double p);

/// Leading-order error scales predicted by the perturbation analysis:
///   ( sqrt(3/2) * sigma * n^{-3/2+p} / min_weight,
///     sqrt(1/2) * sigma * n^{-1/2+p} ).
std::pair<double, double> predicted_error_scales(int n, double sigma, double p,
                                                 double min_weight);

}  // namespace spectral
