#pragma once
#include <complex>
#include <cstddef>

namespace wgs::kern {

using cplx = std::complex<double>;

// Pointwise array kernels used by the transform/functional/evolution hot
// loops. Two implementations share one table: a scalar reference and an
// AVX2+FMA variant. The active table is resolved once at startup from CPU
// features (override with WGS_KERNELS=scalar|avx2); both stay addressable so
// equivalence tests can compare them directly.
struct Ops {
  void (*cmul)(cplx* u, const cplx* f, std::size_t n);            // u[i] *= f[i]
  void (*cmul_real)(cplx* u, const double* w, std::size_t n);     // u[i] *= w[i]
  void (*axpy)(cplx* y, double a, const cplx* x, std::size_t n);  // y[i] += a*x[i]
  double (*sqnorm)(const cplx* u, std::size_t n);                 // sum |u[i]|^2
  double (*weighted_sqnorm)(const cplx* u, const double* w, std::size_t n);
  double (*dot_re)(const cplx* u, const cplx* v, std::size_t n);  // Re sum u[i]*conj(v[i])
  void (*sqmag)(double* m, const cplx* u, std::size_t n);         // m[i] = |u[i]|^2
};

const Ops& scalar_ops();
const Ops& avx2_ops();  // equals scalar_ops() when AVX2 is unavailable
bool avx2_available();
const Ops& active_ops();
const char* active_name();

inline void cmul(cplx* u, const cplx* f, std::size_t n) { active_ops().cmul(u, f, n); }
inline void cmul_real(cplx* u, const double* w, std::size_t n) { active_ops().cmul_real(u, w, n); }
inline void axpy(cplx* y, double a, const cplx* x, std::size_t n) { active_ops().axpy(y, a, x, n); }
inline double sqnorm(const cplx* u, std::size_t n) { return active_ops().sqnorm(u, n); }
inline double weighted_sqnorm(const cplx* u, const double* w, std::size_t n) {
  return active_ops().weighted_sqnorm(u, w, n);
}
inline double dot_re(const cplx* u, const cplx* v, std::size_t n) { return active_ops().dot_re(u, v, n); }
inline void sqmag(double* m, const cplx* u, std::size_t n) { active_ops().sqmag(m, u, n); }

}  // namespace wgs::kern
