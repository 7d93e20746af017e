#include "wgs/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wgs {

namespace {
// FFTW plan creation is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct Fft2D::Plans {
  fftw_plan fwd, bwd;
};

Fft2D::Fft2D(int nx, int ny) : plans_(new Plans) {
  std::scoped_lock lk(planner_mutex());
  std::vector<cplx> a(static_cast<std::size_t>(nx) * ny), b(a.size());
  auto* ap = reinterpret_cast<fftw_complex*>(a.data());
  auto* bp = reinterpret_cast<fftw_complex*>(b.data());
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans_->fwd = fftw_plan_dft_2d(nx, ny, ap, bp, FFTW_FORWARD, flags);
  plans_->bwd = fftw_plan_dft_2d(nx, ny, ap, bp, FFTW_BACKWARD, flags);
  if (!plans_->fwd || !plans_->bwd) throw std::runtime_error("fftw planning failed");
}

Fft2D& Fft2D::get(int nx, int ny) {
  thread_local std::map<std::pair<int, int>, Fft2D*> cache;
  auto key = std::make_pair(nx, ny);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, new Fft2D(nx, ny)).first;
  return *it->second;
}

void Fft2D::forward(const cplx* in, cplx* out) const {
  fftw_execute_dft(plans_->fwd, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft2D::backward(const cplx* in, cplx* out) const {
  fftw_execute_dft(plans_->bwd, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

struct Fft1D::Plans {
  fftw_plan fwd, bwd;
};

Fft1D::Fft1D(int nx) : plans_(new Plans) {
  std::scoped_lock lk(planner_mutex());
  std::vector<cplx> a(nx), b(nx);
  auto* ap = reinterpret_cast<fftw_complex*>(a.data());
  auto* bp = reinterpret_cast<fftw_complex*>(b.data());
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans_->fwd = fftw_plan_dft_1d(nx, ap, bp, FFTW_FORWARD, flags);
  plans_->bwd = fftw_plan_dft_1d(nx, ap, bp, FFTW_BACKWARD, flags);
  if (!plans_->fwd || !plans_->bwd) throw std::runtime_error("fftw planning failed");
}

Fft1D& Fft1D::get(int nx) {
  thread_local std::map<int, Fft1D*> cache;
  auto it = cache.find(nx);
  if (it == cache.end()) it = cache.emplace(nx, new Fft1D(nx)).first;
  return *it->second;
}

void Fft1D::forward(const cplx* in, cplx* out) const {
  fftw_execute_dft(plans_->fwd, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft1D::backward(const cplx* in, cplx* out) const {
  fftw_execute_dft(plans_->bwd, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

Field2D to_fourier(const Field2D& u) {
  Field2D out(u.grid);
  Fft2D::get(u.grid.nx, u.grid.ny).forward(u.v.data(), out.v.data());
  const double s = 1.0 / static_cast<double>(u.grid.size());
  for (auto& z : out.v) z *= s;
  return out;
}

Field2D from_fourier(const Field2D& uh) {
  Field2D out(uh.grid);
  Fft2D::get(uh.grid.nx, uh.grid.ny).backward(uh.v.data(), out.v.data());
  return out;
}

std::vector<double> make_symbol_table(const GridSpec& g, const std::function<double(double)>& a,
                                      const std::function<double(int)>& b) {
  std::vector<double> ax(g.nx), bn(g.ny);
  for (int k = 0; k < g.nx; ++k) ax[k] = a ? a(g.xi(k)) : 0.0;
  for (int l = 0; l < g.ny; ++l) bn[l] = b ? b(g.n_mode(l)) : 0.0;
  std::vector<double> w(g.size());
  for (int k = 0; k < g.nx; ++k)
    for (int l = 0; l < g.ny; ++l) w[static_cast<std::size_t>(k) * g.ny + l] = ax[k] + bn[l];
  return w;
}

Field2D apply_multiplier(const Field2D& u, const std::function<double(double)>& a,
                         const std::function<double(int)>& b) {
  Field2D uh = to_fourier(u);
  apply_multiplier_inplace(uh, make_symbol_table(u.grid, a, b));
  return from_fourier(uh);
}

void apply_multiplier_inplace(Field2D& uh, const std::vector<double>& symbol_table) {
  if (symbol_table.size() != uh.v.size())
    throw std::invalid_argument("symbol table size mismatch");
  kern::cmul_real(uh.v.data(), symbol_table.data(), uh.v.size());
}

Field2D project_low_modes(const Field2D& u, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  Field2D uh = to_fourier(u);
  const auto& g = u.grid;
  for (int k = 0; k < g.nx; ++k)
    for (int l = 0; l < g.ny; ++l)
      if (std::abs(g.n_mode(l)) > kmax) uh.at(k, l) = 0.0;
  return from_fourier(uh);
}

void dealias_two_thirds(Field2D& u) {
  Field2D uh = to_fourier(u);
  const auto& g = u.grid;
  const double xi_cut = pi / g.L * (g.nx / 3.0);
  const double n_cut = g.ny / 3.0;
  for (int k = 0; k < g.nx; ++k)
    for (int l = 0; l < g.ny; ++l)
      if (std::abs(g.xi(k)) > xi_cut || std::abs(g.n_mode(l)) > n_cut) uh.at(k, l) = 0.0;
  u = from_fourier(uh);
}

Field1D fft_derivative(const Field1D& f) {
  const auto& g = f.grid;
  std::vector<cplx> a(g.nx), b(g.nx);
  for (int j = 0; j < g.nx; ++j) a[j] = f.v[j];
  auto& fft = Fft1D::get(g.nx);
  fft.forward(a.data(), b.data());
  for (int k = 0; k < g.nx; ++k) {
    double xi = (k == g.nx / 2) ? 0.0 : g.xi(k);  // odd symbol: Nyquist zeroed
    b[k] *= cplx{0.0, xi / g.nx};
  }
  fft.backward(b.data(), a.data());
  Field1D out(g);
  for (int j = 0; j < g.nx; ++j) out.v[j] = a[j].real();
  return out;
}

}  // namespace wgs
