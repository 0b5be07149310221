#include "t21/fwht.hpp"

namespace t21 {

namespace {

bool avx2_supported() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const bool kUseAvx2 = avx2_supported();

}  // namespace

void fwht(std::int32_t* v, int n) {
#if defined(__x86_64__)
  if (kUseAvx2) {
    fwht_avx2(v, n);
    return;
  }
#endif
  fwht_scalar(v, n);
}

const char* fwht_kernel_name() { return kUseAvx2 ? "avx2" : "scalar"; }

}  // namespace t21
