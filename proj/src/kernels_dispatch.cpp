#include <cstdlib>
#include <cstring>

#include "wgs/kernels.hpp"

namespace wgs::kern {

bool avx2_available() {
#ifdef WGS_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

struct Selection {
  const Ops* ops;
  const char* name;
};

Selection select() {
  const char* force = std::getenv("WGS_KERNELS");
  if (force && std::strcmp(force, "scalar") == 0) return {&scalar_ops(), "scalar"};
  if (force && std::strcmp(force, "avx2") == 0 && avx2_available()) return {&avx2_ops(), "avx2"};
  if (avx2_available()) return {&avx2_ops(), "avx2"};
  return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops& active_ops() { return *selection().ops; }
const char* active_name() { return selection().name; }

}  // namespace wgs::kern
