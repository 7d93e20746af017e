#pragma once
#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "wgs/grid.hpp"

namespace wgs {

enum class OpSign { plus, minus };  // potential coefficient: p (plus) or 1 (minus)

// Dense Fourier-spectral realization of -dxx + (omega + a - c R_omega^{p-1})
// on the periodic x-grid. The Laplacian block is an exactly symmetric
// circulant; matrix(a) equals matrix(0) with a added to the diagonal, exactly.
struct Operator1D {
  Eigen::MatrixXd mat;
  Grid1D grid;
  double p = 0.0;
  double omega = 0.0;
  double a = 0.0;
  OpSign sign = OpSign::plus;
};

Operator1D build_operator(double p, double omega, double a, OpSign sign, const Grid1D& g);

struct EigenPair {
  double value = 0.0;
  Field1D vec;        // L2(quadrature)-normalized, largest-magnitude entry positive
  double residual = 0.0;
};

// k smallest eigenpairs of a symmetric operator
std::vector<EigenPair> lowest_eigenpairs(const Operator1D& op, int k);

// Spectrum of the block B = [[0, Lminus], [-Lplus, 0]] at transverse shift a,
// obtained from the product -Lminus*Lplus (eigenvalue lambda^2) plus inverse
// iteration refinement. lambda0 is the largest positive growth rate, 0 when
// the block has no growing mode.
struct BlockSpectrum {
  double lambda0 = 0.0;
  Field1D u1, u2;          // B (u1,u2)^T = lambda0 (u1,u2)^T, jointly normalized
  double residual = 0.0;   // ||B w - lambda0 w||_2 / ||w||_2 (discrete norm)
  bool has_mode = false;
  bool nonreal_flag = false;  // a product eigenvalue had |Im mu| > 1e-6 |mu|
};

BlockSpectrum growth_rate(double p, double omega, double a, const Grid1D& g);

struct ThresholdResult {
  double omega_p_estimate = 0.0;
  int iterations = 0;
  double lo = 0.0, hi = 0.0;  // final bracket
};

// Bisection on the sign of the smallest eigenvalue of the a=1 plus-operator.
ThresholdResult threshold_scan(double p, const Grid1D& g, double omega_lo, double omega_hi,
                               double tol);

// w(t) = exp(t B) w0 with B at transverse shift a = n (matrix exponential).
std::pair<Field1D, Field1D> propagate_linearized(const Field1D& v1, const Field1D& v2, int n,
                                                 double t, double p, double omega,
                                                 const Grid1D& g);

// operator 2-norm of exp(t B), for semigroup-bound checks
double propagator_norm(int n, double t, double p, double omega, const Grid1D& g);

}  // namespace wgs
