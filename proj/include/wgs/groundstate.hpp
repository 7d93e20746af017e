#pragma once
#include <vector>

#include "wgs/functionals.hpp"
#include "wgs/grid.hpp"

namespace wgs {

// Scale factor t > 0 with nehari(t*u) = 0: t = (quad(u)/||u||_{p+1}^{p+1})^{1/(p-1)}.
double nehari_scale(const Field2D& u, double omega);
double nehari_scale_gen(const Field2D& u, const ActionCoeffs& c);

struct DescentOptions {
  int max_iter = 5000;
  double tol_residual = 1e-9;  // L2 norm of the action gradient
  double step0 = 1.0;
  bool enforce_real = true;
  bool recenter = true;
  bool multi_start = true;  // add perturbed/trial starts near and above omega_p
  uint64_t seed = 12345;
};

struct GroundState {
  Field2D Q;
  double p = 0.0;
  double omega = 0.0;
  double m_omega = 0.0;
  double el_residual = 0.0;      // ||S'(Q)||_2
  double nehari_residual = 0.0;  // |N(Q)|
  double y_dependence = 0.0;     // <|Dy|Q, Q>
  int iterations = 0;
  bool converged = false;
  FunctionalReport report;
};

// Constrained minimization of the action: preconditioned descent on -S'(u)
// with Nehari reprojection, backtracking halving on ascent, x-recentering and
// global-phase stripping each iteration. Non-convergence returns the best
// iterate with converged=false.
GroundState minimize_action(double p, double omega, const GridSpec& g,
                            const DescentOptions& opts = {});
GroundState minimize_action_from(const Field2D& start, double omega,
                                 const DescentOptions& opts = {});
GroundState minimize_action_gen(const Field2D& start, const ActionCoeffs& c,
                                const DescentOptions& opts = {});

// Minimal value of the rescaled action (|Dy| weighted by 1/omega, unit mass
// coefficient). Bounded by the 2pi-scaled line value; tends to it as omega->0.
double m_tilde(double p, double omega, const GridSpec& g, const DescentOptions& opts = {});

struct TrialFunction {
  Field2D psi;
  double delta = 0.0;            // 2pi - integral of rho^{(5-p)/(2(p-1))}
  std::vector<double> rho;       // renormalized profile
};

// Modulated-soliton trial state psi(x,y) = rho(y)^{1/(p-1)} R_1(sqrt(rho) x),
// with rho scaled so its (p+3)/(2(p-1)) power integrates to 2pi. Rejects
// constant rho (the unmodulated case is degenerate for the gap estimate).
TrialFunction trial_function(double p, const GridSpec& g, const std::vector<double>& rho);

struct OmegaStarPoint {
  double omega = 0.0;
  double m_omega = 0.0;
  double two_pi_m_line = 0.0;
  double gap_rel = 0.0;  // (2pi m_line - m_omega)/m_omega
  double y_dependence = 0.0;
};

struct OmegaStarResult {
  double omega_star = 0.0;
  double lo = 0.0, hi = 0.0;
  int evaluations = 0;
  std::vector<OmegaStarPoint> scan;  // every evaluated point, omega-sorted
};

// Smallest omega at which the relative gap to the scaled line value exceeds
// gap_tol (1e-4), located by bracketed bisection.
OmegaStarResult find_omega_star(double p, double tol, int nx = 1024, int ny = 32);

struct RayleighCheck {
  double M_omega = 0.0;        // quad(Q)/||Q||_{p+1}^2
  double m_from_M = 0.0;       // ((p-1)/(2(p+1))) M^{(p+1)/(p-1)}
  double identity_rel_err = 0.0;
};
RayleighCheck rayleigh_quotient_check(const GroundState& gs);

struct SecondEigenResult {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  bool used_block_diagonal = false;
  int iterations = 0;
  double residual = 0.0;
};

// Two smallest eigenvalues of -dxx + |Dy| + omega - p|Q|^{p-1}. Dense 1-D
// solves per y-mode when Q is y-independent, preconditioned LOBPCG otherwise.
SecondEigenResult second_eigenvalue_ground(const Field2D& Q, double omega);

struct ContinuityCheck {
  double omega1 = 0.0, omega2 = 0.0;
  double m1 = 0.0, m2 = 0.0;
  double mass1 = 0.0, mass2 = 0.0;
  bool monotone = false;
  double c1_margin = 0.0;  // >= 0 when the first inequality holds
  double c2_margin = 0.0;
  double fd_slope = 0.0;   // (m2 - m1)/(omega2 - omega1), tracks mass(Q)
};

// Two-sided Lipschitz envelope comparison of adjacent minima with constant C.
ContinuityCheck continuity_check(const GroundState& a, const GroundState& b, double C);

// frozen calibration of the envelope constant per nonlinearity power
double continuity_constant(double p);

}  // namespace wgs
