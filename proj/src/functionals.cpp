#include "wgs/functionals.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wgs/fourier.hpp"

namespace wgs {

namespace {

struct GridTables {
  std::vector<double> xi2;   // xi_k^2 replicated over rows
  std::vector<double> absn;  // |n_l| replicated over columns
};

const GridTables& tables(const GridSpec& g) {
  thread_local std::map<std::tuple<double, int, int>, GridTables> cache;
  auto key = std::make_tuple(g.L, g.nx, g.ny);
  auto it = cache.find(key);
  if (it == cache.end()) {
    GridTables t;
    t.xi2.resize(g.size());
    t.absn.resize(g.size());
    for (int k = 0; k < g.nx; ++k) {
      const double x2 = g.xi(k) * g.xi(k);
      for (int l = 0; l < g.ny; ++l) {
        t.xi2[static_cast<std::size_t>(k) * g.ny + l] = x2;
        t.absn[static_cast<std::size_t>(k) * g.ny + l] = std::abs(g.n_mode(l));
      }
    }
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

// Parseval factor: ||u||_2^2 = (2L)(2pi) * sum |uh|^2
double parseval_factor(const GridSpec& g) { return 4.0 * pi * g.L; }

}  // namespace

double l2_sq(const Field2D& u) { return kern::sqnorm(u.v.data(), u.v.size()) * u.grid.cell(); }

double lp_pow(const Field2D& u, double q) {
  const std::size_t n = u.v.size();
  thread_local std::vector<double> m;
  m.resize(n);
  kern::sqmag(m.data(), u.v.data(), n);
  double s = 0.0;
  if (q == 4.0) {
    s = kern::weighted_sqnorm(u.v.data(), m.data(), n);  // sum m_i*|u_i|^2 = sum m_i^2
  } else {
    const double h = q / 2.0;
    for (std::size_t i = 0; i < n; ++i) s += std::pow(m[i], h);
  }
  return s * u.grid.cell();
}

double inner_re(const Field2D& u, const Field2D& v) {
  if (u.grid != v.grid) throw std::invalid_argument("grid mismatch");
  return kern::dot_re(u.v.data(), v.v.data(), u.v.size()) * u.grid.cell();
}

double x_norm_sq(const Field2D& u) {
  const auto& t = tables(u.grid);
  Field2D uh = to_fourier(u);
  const double c = parseval_factor(u.grid);
  return c * (kern::weighted_sqnorm(uh.v.data(), t.xi2.data(), uh.v.size()) +
              kern::weighted_sqnorm(uh.v.data(), t.absn.data(), uh.v.size()) +
              kern::sqnorm(uh.v.data(), uh.v.size()));
}

FunctionalReport functionals_gen(const Field2D& u, const ActionCoeffs& c) {
  const auto& g = u.grid;
  const auto& t = tables(g);
  const double pf = parseval_factor(g);

  Field2D uh = to_fourier(u);
  FunctionalReport r;
  r.p = g.p;
  r.omega = c.cm;
  r.grad_x_sq = pf * kern::weighted_sqnorm(uh.v.data(), t.xi2.data(), uh.v.size());
  r.dy_half_sq = pf * kern::weighted_sqnorm(uh.v.data(), t.absn.data(), uh.v.size());
  r.l2_sq = l2_sq(u);
  r.x_norm_sq = r.grad_x_sq + r.dy_half_sq + r.l2_sq;
  r.lp1_pow = lp_pow(u, g.p + 1.0);
  r.lp_norm_p1 = std::pow(r.lp1_pow, 1.0 / (g.p + 1.0));

  const double quad = r.grad_x_sq + c.cy * r.dy_half_sq + c.cm * r.l2_sq;
  r.mass = 0.5 * r.l2_sq;
  r.hamiltonian = 0.5 * (r.grad_x_sq + c.cy * r.dy_half_sq) - r.lp1_pow / (g.p + 1.0);
  r.action = r.hamiltonian + c.cm * r.mass;
  r.nehari = quad - r.lp1_pow;
  r.i_omega = (g.p - 1.0) / (2.0 * (g.p + 1.0)) * quad;
  return r;
}

FunctionalReport functionals(const Field2D& u, double omega) {
  return functionals_gen(u, ActionCoeffs{1.0, omega});
}

double l2_sq(const Field1D& f) {
  double s = 0.0;
  for (double x : f.v) s += x * x;
  return s * f.grid.dx();
}

double lp_pow(const Field1D& f, double q) {
  double s = 0.0;
  for (double x : f.v) s += std::pow(std::abs(x), q);
  return s * f.grid.dx();
}

}  // namespace wgs
