#pragma once
#include <cstdint>

#include "wgs/grid.hpp"

namespace wgs {

// Smooth random field with Gaussian Fourier coefficients on |k| <= kx_max,
// |n| <= n_max, damped by exp(-(xi^2+n^2)/16), then scaled to ||u||_2 = amp.
// Deterministic in seed.
Field2D make_random_field(const GridSpec& g, uint64_t seed, int kx_max, int n_max, double amp);

}  // namespace wgs
