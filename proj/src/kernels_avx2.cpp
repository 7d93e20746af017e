#include "wgs/kernels.hpp"

#ifdef WGS_HAVE_AVX2
#include <immintrin.h>

namespace wgs::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void cmul_v(cplx* u, const cplx* f, std::size_t n) {
  auto* up = reinterpret_cast<double*>(u);
  const auto* fp = reinterpret_cast<const double*>(f);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d a = _mm256_loadu_pd(up + 2 * i);
    __m256d b = _mm256_loadu_pd(fp + 2 * i);
    __m256d bre = _mm256_movedup_pd(b);
    __m256d bim = _mm256_permute_pd(b, 0xF);
    __m256d asw = _mm256_permute_pd(a, 0x5);
    _mm256_storeu_pd(up + 2 * i, _mm256_fmaddsub_pd(a, bre, _mm256_mul_pd(asw, bim)));
  }
  for (; i < n; ++i) u[i] *= f[i];
}

void cmul_real_v(cplx* u, const double* w, std::size_t n) {
  auto* up = reinterpret_cast<double*>(u);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d w4 = _mm256_loadu_pd(w + i);
    __m256d lo = _mm256_permute4x64_pd(w4, _MM_SHUFFLE(1, 1, 0, 0));
    __m256d hi = _mm256_permute4x64_pd(w4, _MM_SHUFFLE(3, 3, 2, 2));
    __m256d u0 = _mm256_loadu_pd(up + 2 * i);
    __m256d u1 = _mm256_loadu_pd(up + 2 * i + 4);
    _mm256_storeu_pd(up + 2 * i, _mm256_mul_pd(u0, lo));
    _mm256_storeu_pd(up + 2 * i + 4, _mm256_mul_pd(u1, hi));
  }
  for (; i < n; ++i) u[i] *= w[i];
}

void axpy_v(cplx* y, double a, const cplx* x, std::size_t n) {
  auto* yp = reinterpret_cast<double*>(y);
  const auto* xp = reinterpret_cast<const double*>(x);
  const std::size_t m = 2 * n;
  __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4)
    _mm256_storeu_pd(yp + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(xp + i), _mm256_loadu_pd(yp + i)));
  for (; i < m; ++i) yp[i] += a * xp[i];
}

double sqnorm_v(const cplx* u, std::size_t n) {
  const auto* up = reinterpret_cast<const double*>(u);
  const std::size_t m = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d a = _mm256_loadu_pd(up + i);
    acc = _mm256_fmadd_pd(a, a, acc);
  }
  double s = hsum(acc);
  for (; i < m; ++i) s += up[i] * up[i];
  return s;
}

double weighted_sqnorm_v(const cplx* u, const double* w, std::size_t n) {
  const auto* up = reinterpret_cast<const double*>(u);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d u0 = _mm256_loadu_pd(up + 2 * i);
    __m256d u1 = _mm256_loadu_pd(up + 2 * i + 4);
    // hadd yields |c0|^2,|c2|^2,|c1|^2,|c3|^2; permute w to match
    __m256d h = _mm256_hadd_pd(_mm256_mul_pd(u0, u0), _mm256_mul_pd(u1, u1));
    __m256d wp = _mm256_permute4x64_pd(_mm256_loadu_pd(w + i), _MM_SHUFFLE(3, 1, 2, 0));
    acc = _mm256_fmadd_pd(h, wp, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += w[i] * (u[i].real() * u[i].real() + u[i].imag() * u[i].imag());
  return s;
}

double dot_re_v(const cplx* u, const cplx* v, std::size_t n) {
  const auto* up = reinterpret_cast<const double*>(u);
  const auto* vp = reinterpret_cast<const double*>(v);
  const std::size_t m = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(up + i), _mm256_loadu_pd(vp + i), acc);
  double s = hsum(acc);
  for (; i < m; ++i) s += up[i] * vp[i];
  return s;
}

void sqmag_v(double* m, const cplx* u, std::size_t n) {
  const auto* up = reinterpret_cast<const double*>(u);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d u0 = _mm256_loadu_pd(up + 2 * i);
    __m256d u1 = _mm256_loadu_pd(up + 2 * i + 4);
    __m256d h = _mm256_hadd_pd(_mm256_mul_pd(u0, u0), _mm256_mul_pd(u1, u1));
    _mm256_storeu_pd(m + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
  }
  for (; i < n; ++i)
    m[i] = u[i].real() * u[i].real() + u[i].imag() * u[i].imag();
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{cmul_v, cmul_real_v, axpy_v, sqnorm_v, weighted_sqnorm_v, dot_re_v, sqmag_v};
  return ops;
}

}  // namespace wgs::kern

#else

namespace wgs::kern {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace wgs::kern

#endif
