#pragma once

#include <cstdint>

namespace t21 {

// In-place fast Walsh-Hadamard transform of a length-2^n int32 array.
void fwht_scalar(std::int32_t* v, int n);
#if defined(__x86_64__)
void fwht_avx2(std::int32_t* v, int n);
#endif

// Runtime-dispatched variant (AVX2 when the CPU supports it).
void fwht(std::int32_t* v, int n);
const char* fwht_kernel_name();

}  // namespace t21
