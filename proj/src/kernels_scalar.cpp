#include "wgs/kernels.hpp"

namespace wgs::kern {
namespace {

void cmul_s(cplx* u, const cplx* f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) u[i] *= f[i];
}

void cmul_real_s(cplx* u, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) u[i] *= w[i];
}

void axpy_s(cplx* y, double a, const cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sqnorm_s(const cplx* u, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += u[i].real() * u[i].real() + u[i].imag() * u[i].imag();
  return s;
}

double weighted_sqnorm_s(const cplx* u, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += w[i] * (u[i].real() * u[i].real() + u[i].imag() * u[i].imag());
  return s;
}

double dot_re_s(const cplx* u, const cplx* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += u[i].real() * v[i].real() + u[i].imag() * v[i].imag();
  return s;
}

void sqmag_s(double* m, const cplx* u, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    m[i] = u[i].real() * u[i].real() + u[i].imag() * u[i].imag();
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{cmul_s, cmul_real_s, axpy_s, sqnorm_s, weighted_sqnorm_s, dot_re_s, sqmag_s};
  return ops;
}

}  // namespace wgs::kern
