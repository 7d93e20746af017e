#pragma once
#include <cstddef>
#include <numbers>
#include <vector>

#include "wgs/kernels.hpp"

namespace wgs {

using kern::cplx;

inline constexpr double pi = std::numbers::pi;

// Rectangle [-L, L) x [0, 2pi) sampled on nx x ny points. nx must be a power
// of two, ny even; p is the nonlinearity power and travels with the grid.
struct GridSpec {
  double L = 0.0;
  int nx = 0;
  int ny = 0;
  double p = 0.0;

  double dx() const { return 2.0 * L / nx; }
  double dy() const { return 2.0 * pi / ny; }
  double cell() const { return dx() * dy(); }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  double x(int j) const { return -L + j * dx(); }
  double y(int l) const { return l * dy(); }
  // signed x-frequency of DFT bin k; the Nyquist bin carries +pi*nx/(2L)
  double xi(int k) const { return (k <= nx / 2 ? k : k - nx) * pi / L; }
  // signed y-mode of DFT bin l; the Nyquist bin carries +ny/2
  int n_mode(int l) const { return l <= ny / 2 ? l : l - ny; }

  bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(double L, int nx, int ny, double p);

// Complex samples, row-major with x outermost: v[ix*ny + iy]. The same
// container holds physical samples and Fourier coefficients.
struct Field2D {
  GridSpec grid;
  std::vector<cplx> v;

  Field2D() = default;
  explicit Field2D(const GridSpec& g) : grid(g), v(g.size(), cplx{0.0, 0.0}) {}
  cplx& at(int ix, int iy) { return v[static_cast<std::size_t>(ix) * grid.ny + iy]; }
  const cplx& at(int ix, int iy) const { return v[static_cast<std::size_t>(ix) * grid.ny + iy]; }
};

struct Grid1D {
  double L = 0.0;
  int nx = 0;

  double dx() const { return 2.0 * L / nx; }
  double x(int j) const { return -L + j * dx(); }
  double xi(int k) const { return (k <= nx / 2 ? k : k - nx) * pi / L; }

  bool operator==(const Grid1D&) const = default;
};

Grid1D make_grid_1d(double L, int nx);

struct Field1D {
  Grid1D grid;
  std::vector<double> v;

  Field1D() = default;
  explicit Field1D(const Grid1D& g) : grid(g), v(g.nx, 0.0) {}
};

// default x half-width keeping soliton tail wraparound below ~1e-9
double default_halfwidth(double omega);

void add_scaled(Field2D& y, double a, const Field2D& x);  // y += a*x
void scale(Field2D& u, double a);
void scale(Field2D& u, cplx a);

}  // namespace wgs
