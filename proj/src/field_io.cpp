#include "wgs/field_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace wgs {

namespace {
constexpr char kMagic[8] = {'W', 'G', 'S', 'F', 'L', 'D', '1', '\n'};

bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}
}  // namespace

void save_field_binary(const std::string& path, const Field2D& u) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f.write(kMagic, sizeof(kMagic));
  const uint32_t nx = u.grid.nx, ny = u.grid.ny;
  f.write(reinterpret_cast<const char*>(&nx), 4);
  f.write(reinterpret_cast<const char*>(&ny), 4);
  f.write(reinterpret_cast<const char*>(&u.grid.L), 8);
  f.write(reinterpret_cast<const char*>(&u.grid.p), 8);
  f.write(reinterpret_cast<const char*>(u.v.data()), static_cast<std::streamsize>(u.v.size() * 16));
  if (!f) throw std::runtime_error("write failed: " + path);
}

Field2D load_field_binary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  char magic[8];
  f.read(magic, 8);
  if (!f || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("not a field file: " + path);
  uint32_t nx = 0, ny = 0;
  double L = 0.0, p = 0.0;
  f.read(reinterpret_cast<char*>(&nx), 4);
  f.read(reinterpret_cast<char*>(&ny), 4);
  f.read(reinterpret_cast<char*>(&L), 8);
  f.read(reinterpret_cast<char*>(&p), 8);
  Field2D u(make_grid(L, static_cast<int>(nx), static_cast<int>(ny), p));
  f.read(reinterpret_cast<char*>(u.v.data()), static_cast<std::streamsize>(u.v.size() * 16));
  if (!f) throw std::runtime_error("truncated field file: " + path);
  return u;
}

void save_field_csv(const std::string& path, const Field2D& u) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::fprintf(f, "# field L=%.17g nx=%d ny=%d p=%.17g\n", u.grid.L, u.grid.nx, u.grid.ny,
               u.grid.p);
  for (const auto& z : u.v) std::fprintf(f, "%.17g,%.17g\n", z.real(), z.imag());
  std::fclose(f);
}

Field2D load_field_csv(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "r");
  if (!f) throw std::runtime_error("cannot open " + path);
  double L = 0.0, p = 0.0;
  int nx = 0, ny = 0;
  if (std::fscanf(f, "# field L=%lg nx=%d ny=%d p=%lg\n", &L, &nx, &ny, &p) != 4) {
    std::fclose(f);
    throw std::runtime_error("bad field csv header: " + path);
  }
  Field2D u(make_grid(L, nx, ny, p));
  for (auto& z : u.v) {
    double re = 0.0, im = 0.0;
    if (std::fscanf(f, "%lg,%lg\n", &re, &im) != 2) {
      std::fclose(f);
      throw std::runtime_error("truncated field csv: " + path);
    }
    z = {re, im};
  }
  std::fclose(f);
  return u;
}

void save_field(const std::string& path, const Field2D& u) {
  if (has_suffix(path, ".csv"))
    save_field_csv(path, u);
  else
    save_field_binary(path, u);
}

Field2D load_field(const std::string& path) {
  if (has_suffix(path, ".csv")) return load_field_csv(path);
  return load_field_binary(path);
}

}  // namespace wgs
