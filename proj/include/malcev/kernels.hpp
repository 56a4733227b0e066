#pragma once

#include <cstddef>
#include <cstdint>

// Inner loops that operate on whole rows of data. Each has a scalar
// reference version and, where the CPU supports it, an AVX2 version.
// The active set is chosen once at startup; MALCEV_SIMD=scalar forces
// the reference versions.
namespace malcev::kernels {

// out[j] = t[s[j]] for j < len. Every s[j] must be < len.
using ComposeFn = void (*)(std::uint8_t const* s, std::uint8_t const* t,
                           std::uint8_t* out, std::size_t len);

// out[i] = base[idx[i]] for i < count.
using GatherFn = void (*)(std::uint32_t const* base, std::uint32_t const* idx,
                          std::uint32_t* out, std::size_t count);

// out[i] = table[a[i] * stride + b[i]] for i < count.
using TableProductFn = void (*)(std::uint32_t const* table, std::size_t stride,
                                std::uint32_t const* a, std::uint32_t const* b,
                                std::uint32_t* out, std::size_t count);

struct KernelSet {
  char const* name;
  ComposeFn compose;
  GatherFn gather;
  TableProductFn table_product;
};

KernelSet const& scalar();

// Null when the binary was built without AVX2 support or the CPU lacks it.
KernelSet const* avx2();

KernelSet const& active();

}  // namespace malcev::kernels
