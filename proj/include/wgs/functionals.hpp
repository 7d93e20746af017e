#pragma once
#include "wgs/grid.hpp"

namespace wgs {

// Conserved quantities and constrained-minimization functionals of one field.
// action = hamiltonian + omega*mass holds exactly by construction; i_omega is
// the scale-invariant form that equals action on the constraint set.
struct FunctionalReport {
  double p = 0.0;
  double omega = 0.0;
  double mass = 0.0;
  double hamiltonian = 0.0;
  double action = 0.0;
  double nehari = 0.0;
  double i_omega = 0.0;
  double l2_sq = 0.0;
  double grad_x_sq = 0.0;
  double dy_half_sq = 0.0;
  double x_norm_sq = 0.0;
  double lp1_pow = 0.0;     // ||u||_{p+1}^{p+1}
  double lp_norm_p1 = 0.0;  // ||u||_{p+1}
};

// Quadratic-part coefficients: quad(u) = ||dx u||^2 + cy*<|Dy|u,u> + cm*||u||^2.
// The standard functional uses cy = 1, cm = omega; the zero-frequency-rescaled
// variant uses cy = 1/omega, cm = 1.
struct ActionCoeffs {
  double cy = 1.0;
  double cm = 0.0;
};

FunctionalReport functionals(const Field2D& u, double omega);
FunctionalReport functionals_gen(const Field2D& u, const ActionCoeffs& c);

double l2_sq(const Field2D& u);               // quadrature ||u||_2^2
double lp_pow(const Field2D& u, double q);    // quadrature ||u||_q^q
double inner_re(const Field2D& u, const Field2D& v);
double x_norm_sq(const Field2D& u);           // ||dx u||^2 + <|Dy|u,u> + ||u||^2

double l2_sq(const Field1D& f);
double lp_pow(const Field1D& f, double q);

}  // namespace wgs
