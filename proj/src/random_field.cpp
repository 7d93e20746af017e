#include "wgs/random_field.hpp"

#include <cmath>
#include <random>

#include "wgs/fourier.hpp"
#include "wgs/functionals.hpp"

namespace wgs {

Field2D make_random_field(const GridSpec& g, uint64_t seed, int kx_max, int n_max, double amp) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Field2D uh(g);
  for (int k = 0; k < g.nx; ++k) {
    const double xi = g.xi(k);
    if (std::abs(k <= g.nx / 2 ? k : k - g.nx) > kx_max) continue;
    for (int l = 0; l < g.ny; ++l) {
      const int n = g.n_mode(l);
      if (std::abs(n) > n_max) continue;
      const double damp = std::exp(-(xi * xi + static_cast<double>(n) * n) / 16.0);
      uh.at(k, l) = cplx{gauss(rng), gauss(rng)} * damp;
    }
  }
  Field2D u = from_fourier(uh);
  const double nrm = std::sqrt(l2_sq(u));
  if (nrm > 0.0) scale(u, amp / nrm);
  return u;
}

}  // namespace wgs
