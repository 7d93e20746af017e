#include "wgs/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wgs {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec make_grid(double L, int nx, int ny, double p) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  if (!power_of_two(nx)) throw std::invalid_argument("nx must be a power of two");
  if (ny <= 0 || ny % 2 != 0) throw std::invalid_argument("ny must be a positive even integer");
  if (!(p > 1.0 && p < 5.0))
    throw std::invalid_argument("p must lie in (1,5), got " + std::to_string(p));
  return GridSpec{L, nx, ny, p};
}

Grid1D make_grid_1d(double L, int nx) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  if (!power_of_two(nx)) throw std::invalid_argument("nx must be a power of two");
  return Grid1D{L, nx};
}

double default_halfwidth(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return std::max(40.0, 25.0 / std::sqrt(omega));
}

void add_scaled(Field2D& y, double a, const Field2D& x) {
  kern::axpy(y.v.data(), a, x.v.data(), y.v.size());
}

void scale(Field2D& u, double a) {
  for (auto& z : u.v) z *= a;
}

void scale(Field2D& u, cplx a) {
  for (auto& z : u.v) z *= a;
}

}  // namespace wgs
