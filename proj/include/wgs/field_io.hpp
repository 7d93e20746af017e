#pragma once
#include <string>

#include "wgs/grid.hpp"

namespace wgs {

// On-disk field layouts (documented in docs/formats.md):
//   binary: "WGSFLD1\n", u32 nx, u32 ny, f64 L, f64 p, then nx*ny (re,im)
//           f64 pairs in row-major order (x outermost), little-endian
//   csv:    "# field L=<L> nx=<nx> ny=<ny> p=<p>" then one "re,im" row per
//           sample in the same order
void save_field_binary(const std::string& path, const Field2D& u);
Field2D load_field_binary(const std::string& path);
void save_field_csv(const std::string& path, const Field2D& u);
Field2D load_field_csv(const std::string& path);

// dispatches on extension: .csv -> csv, anything else -> binary
void save_field(const std::string& path, const Field2D& u);
Field2D load_field(const std::string& path);

}  // namespace wgs
