#include "wgs/spectral1d.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wgs/errors.hpp"
#include "wgs/fourier.hpp"
#include "wgs/soliton.hpp"

namespace wgs {

namespace {

// circulant second-derivative stencil c_d = (1/nx) sum_k xi_k^2 e^{2 pi i kd/nx}
const Eigen::MatrixXd& laplacian_matrix(const Grid1D& g) {
  thread_local std::map<std::pair<double, int>, Eigen::MatrixXd> cache;
  auto key = std::make_pair(g.L, g.nx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int n = g.nx;
  std::vector<cplx> s(n), c(n);
  for (int k = 0; k < n; ++k) s[k] = g.xi(k) * g.xi(k);
  Fft1D::get(n).backward(s.data(), c.data());
  std::vector<double> st(n);
  // symbol is even in k, so c is real; symmetrize away roundoff
  for (int d = 0; d < n; ++d)
    st[d] = 0.5 * (c[d].real() + c[(n - d) % n].real()) / n;

  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) m(j, l) = st[(j - l + n) % n];
  return cache.emplace(key, std::move(m)).first->second;
}

double smallest_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

Operator1D build_operator(double p, double omega, double a, OpSign sign, const Grid1D& g) {
  if (!(p > 1.0 && p < 5.0)) throw std::invalid_argument("p must lie in (1,5)");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (g.nx > 2048) throw std::invalid_argument("dense operator limited to nx <= 2048");

  Operator1D op;
  op.mat = laplacian_matrix(g);
  op.grid = g;
  op.p = p;
  op.omega = omega;
  op.a = a;
  op.sign = sign;

  const double coef = (sign == OpSign::plus) ? p : 1.0;
  for (int j = 0; j < g.nx; ++j) {
    const double R = soliton_value(p, omega, g.x(j));
    // base diagonal first, then + a, so matrix(a) == matrix(0) + a*I exactly
    const double base = omega - coef * std::pow(R, p - 1.0);
    op.mat(j, j) += base;
    op.mat(j, j) += a;
  }
  return op;
}

std::vector<EigenPair> lowest_eigenpairs(const Operator1D& op, int k) {
  const int n = op.grid.nx;
  if (k < 1 || k > n) throw std::invalid_argument("bad eigenpair count");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.mat);
  if (es.info() != Eigen::Success) throw NumericalError("symmetric eigensolve failed");

  const double dx = op.grid.dx();
  std::vector<EigenPair> out(k);
  for (int i = 0; i < k; ++i) {
    EigenPair& pr = out[i];
    pr.value = es.eigenvalues()(i);
    Eigen::VectorXd v = es.eigenvectors().col(i);
    int jmax = 0;
    for (int j = 1; j < n; ++j)
      if (std::abs(v(j)) > std::abs(v(jmax))) jmax = j;
    v *= (v(jmax) >= 0.0 ? 1.0 : -1.0) / (v.norm() * std::sqrt(dx));
    pr.vec.grid = op.grid;
    pr.vec.v.assign(v.data(), v.data() + n);
    pr.residual = std::sqrt(dx) * (op.mat * v - pr.value * v).norm();
  }
  return out;
}

BlockSpectrum growth_rate(double p, double omega, double a, const Grid1D& g) {
  if (!(a > 0.0)) throw std::invalid_argument("transverse shift a must be positive");
  const Operator1D Lp = build_operator(p, omega, a, OpSign::plus, g);
  const Operator1D Lm = build_operator(p, omega, a, OpSign::minus, g);
  const int n = g.nx;

  BlockSpectrum out;
  out.u1.grid = g;
  out.u2.grid = g;
  out.u1.v.assign(n, 0.0);
  out.u2.v.assign(n, 0.0);

  // A growing mode exists iff the plus-operator dips below zero (the minus
  // block is positive definite for a > 0). Deciding existence here keeps
  // noise-level positive eigenvalues of the product solve from faking a rate.
  const double nu = omega / omega_p(p);
  if (smallest_eigenvalue(Lp.mat) >= -1e-8 * std::max(1.0, nu)) return out;

  Eigen::MatrixXd M = -(Lm.mat * Lp.mat);
  Eigen::EigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success) throw NumericalError("product eigensolve failed");

  // growing modes appear as real positive eigenvalues mu = lambda^2 of M
  int best = -1;
  double best_mu = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx mu = es.eigenvalues()(i);
    const double amu = std::abs(mu);
    if (amu > 0.0 && std::abs(mu.imag()) > 1e-6 * amu) {
      out.nonreal_flag = true;
      continue;
    }
    if (mu.real() > best_mu) {
      best_mu = mu.real();
      best = i;
    }
  }
  if (best < 0 || best_mu <= 0.0) throw NumericalError("expected growing mode not found");

  // rotate the eigenvector to a real representative, then refine by inverse
  // iteration so the block residual is not limited by the product solve
  Eigen::VectorXcd vc = es.eigenvectors().col(best);
  int jmax = 0;
  for (int j = 1; j < n; ++j)
    if (std::abs(vc(j)) > std::abs(vc(jmax))) jmax = j;
  vc *= std::conj(vc(jmax)) / std::abs(vc(jmax));
  Eigen::VectorXd u1 = vc.real();
  u1.normalize();

  double mu = best_mu;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M - mu * Eigen::MatrixXd::Identity(n, n));
  for (int it = 0; it < 2; ++it) {
    Eigen::VectorXd w = lu.solve(u1);
    const double wn = w.norm();
    if (!(wn > 0.0) || !std::isfinite(wn)) break;
    u1 = w / wn;
    mu = u1.dot(M * u1);
  }
  if (!(mu > 0.0)) throw NumericalError("growth-rate refinement lost the positive eigenvalue");

  const double lambda = std::sqrt(mu);
  Eigen::VectorXd u2 = -(Lp.mat * u1) / lambda;
  const double wn = std::sqrt(u1.squaredNorm() + u2.squaredNorm());
  u1 /= wn;
  u2 /= wn;

  Eigen::VectorXd r1 = Lm.mat * u2 - lambda * u1;
  Eigen::VectorXd r2 = -(Lp.mat * u1) - lambda * u2;
  out.lambda0 = lambda;
  out.residual = std::sqrt(r1.squaredNorm() + r2.squaredNorm());
  out.has_mode = true;
  out.u1.v.assign(u1.data(), u1.data() + n);
  out.u2.v.assign(u2.data(), u2.data() + n);
  return out;
}

ThresholdResult threshold_scan(double p, const Grid1D& g, double omega_lo, double omega_hi,
                               double tol) {
  if (!(omega_lo > 0.0 && omega_hi > omega_lo)) throw std::invalid_argument("bad omega range");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  auto lowest = [&](double w) {
    return smallest_eigenvalue(build_operator(p, w, 1.0, OpSign::plus, g).mat);
  };
  double flo = lowest(omega_lo), fhi = lowest(omega_hi);
  if (!(flo > 0.0 && fhi < 0.0))
    throw std::invalid_argument("range does not bracket the threshold");

  ThresholdResult r;
  r.lo = omega_lo;
  r.hi = omega_hi;
  while (r.hi - r.lo > tol) {
    const double mid = 0.5 * (r.lo + r.hi);
    (lowest(mid) > 0.0 ? r.lo : r.hi) = mid;
    ++r.iterations;
  }
  r.omega_p_estimate = 0.5 * (r.lo + r.hi);
  return r;
}

namespace {

Eigen::MatrixXd block_matrix(int n_shift, double p, double omega, const Grid1D& g) {
  const Operator1D Lp = build_operator(p, omega, n_shift, OpSign::plus, g);
  const Operator1D Lm = build_operator(p, omega, n_shift, OpSign::minus, g);
  const int n = g.nx;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  B.topRightCorner(n, n) = Lm.mat;
  B.bottomLeftCorner(n, n) = -Lp.mat;
  return B;
}

}  // namespace

std::pair<Field1D, Field1D> propagate_linearized(const Field1D& v1, const Field1D& v2, int n_shift,
                                                 double t, double p, double omega,
                                                 const Grid1D& g) {
  if (v1.grid != g || v2.grid != g) throw std::invalid_argument("grid mismatch");
  const int n = g.nx;
  Eigen::MatrixXd W = (t * block_matrix(n_shift, p, omega, g)).exp();
  Eigen::VectorXd w0(2 * n);
  for (int j = 0; j < n; ++j) {
    w0(j) = v1.v[j];
    w0(n + j) = v2.v[j];
  }
  Eigen::VectorXd w = W * w0;
  Field1D o1(g), o2(g);
  for (int j = 0; j < n; ++j) {
    o1.v[j] = w(j);
    o2.v[j] = w(n + j);
  }
  return {o1, o2};
}

double propagator_norm(int n_shift, double t, double p, double omega, const Grid1D& g) {
  Eigen::MatrixXd W = (t * block_matrix(n_shift, p, omega, g)).exp();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(W);
  return svd.singularValues()(0);
}

}  // namespace wgs
