#pragma once
#include <functional>
#include <vector>

#include "wgs/grid.hpp"

namespace wgs {

// 2-D DFT plans, cached per (nx, ny) and per thread. forward() is the
// unnormalized DFT with e^{-i k.x} convention, backward() its unnormalized
// inverse; in and out must not alias.
class Fft2D {
 public:
  static Fft2D& get(int nx, int ny);
  void forward(const cplx* in, cplx* out) const;
  void backward(const cplx* in, cplx* out) const;

 private:
  Fft2D(int nx, int ny);
  struct Plans;
  Plans* plans_;
};

class Fft1D {
 public:
  static Fft1D& get(int nx);
  void forward(const cplx* in, cplx* out) const;
  void backward(const cplx* in, cplx* out) const;

 private:
  explicit Fft1D(int nx);
  struct Plans;
  Plans* plans_;
};

// Fourier-series coefficients: u(x,y) = sum_{k,n} uh[k,n] e^{i(xi_k x + n y)}.
Field2D to_fourier(const Field2D& u);
Field2D from_fourier(const Field2D& uh);

// Diagonal symbol table w[k,n] = a(xi_k) + b(n).
std::vector<double> make_symbol_table(const GridSpec& g, const std::function<double(double)>& a,
                                      const std::function<double(int)>& b);

// u <- F^{-1}[ (a(xi)+b(n)) F u ]; realizes -dxx (a=xi^2), |Dy|^s (b=|n|^s),
// and the energy-norm duality weights.
Field2D apply_multiplier(const Field2D& u, const std::function<double(double)>& a,
                         const std::function<double(int)>& b);
void apply_multiplier_inplace(Field2D& u, const std::vector<double>& symbol_table);

// zero every y-mode with |n| > kmax (idempotent L2-orthogonal projection)
Field2D project_low_modes(const Field2D& u, int kmax);

// 2/3-rule dealiasing: zero modes with |k| > nx/3 or |n| > ny/3
void dealias_two_thirds(Field2D& u);

// spectral d/dx of real 1-D samples (Nyquist mode zeroed, odd symbol)
Field1D fft_derivative(const Field1D& f);

}  // namespace wgs
