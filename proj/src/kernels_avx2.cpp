#include "malcev/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MALCEV_HAVE_AVX2_BUILD 1
#endif

namespace malcev::kernels {

#ifdef MALCEV_HAVE_AVX2_BUILD

namespace {

// Byte gather through two pshufb lookups: one for indices below 16 and one
// for indices 16..31, blended on bit 4 of the index.
__attribute__((target("avx2"))) void compose_avx2(std::uint8_t const* s,
                                                  std::uint8_t const* t,
                                                  std::uint8_t* out,
                                                  std::size_t len) {
  if (len > 32) {
    scalar().compose(s, t, out, len);
    return;
  }
  alignas(32) std::uint8_t tbuf[32] = {};
  alignas(32) std::uint8_t sbuf[32] = {};
  alignas(32) std::uint8_t obuf[32];
  for (std::size_t j = 0; j < len; ++j) {
    tbuf[j] = t[j];
    sbuf[j] = s[j];
  }
  __m128i lo = _mm_load_si128(reinterpret_cast<__m128i const*>(tbuf));
  __m128i hi = _mm_load_si128(reinterpret_cast<__m128i const*>(tbuf + 16));
  __m256i lo2 = _mm256_broadcastsi128_si256(lo);
  __m256i hi2 = _mm256_broadcastsi128_si256(hi);
  __m256i idx = _mm256_load_si256(reinterpret_cast<__m256i const*>(sbuf));
  __m256i low_nibble = _mm256_and_si256(idx, _mm256_set1_epi8(0x0F));
  __m256i from_lo = _mm256_shuffle_epi8(lo2, low_nibble);
  __m256i from_hi = _mm256_shuffle_epi8(hi2, low_nibble);
  __m256i high_bit = _mm256_slli_epi16(idx, 3);  // bit 4 -> bit 7
  __m256i result = _mm256_blendv_epi8(from_lo, from_hi, high_bit);
  _mm256_store_si256(reinterpret_cast<__m256i*>(obuf), result);
  for (std::size_t j = 0; j < len; ++j) {
    out[j] = obuf[j];
  }
}

__attribute__((target("avx2"))) void gather_avx2(std::uint32_t const* base,
                                                 std::uint32_t const* idx,
                                                 std::uint32_t* out,
                                                 std::size_t count) {
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(idx + i));
    __m256i g = _mm256_i32gather_epi32(reinterpret_cast<int const*>(base), v, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), g);
  }
  for (; i < count; ++i) {
    out[i] = base[idx[i]];
  }
}

__attribute__((target("avx2"))) void table_product_avx2(
    std::uint32_t const* table, std::size_t stride, std::uint32_t const* a,
    std::uint32_t const* b, std::uint32_t* out, std::size_t count) {
  std::size_t i = 0;
  __m256i vstride = _mm256_set1_epi32(static_cast<int>(stride));
  for (; i + 8 <= count; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
    __m256i index = _mm256_add_epi32(_mm256_mullo_epi32(va, vstride), vb);
    __m256i g =
        _mm256_i32gather_epi32(reinterpret_cast<int const*>(table), index, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), g);
  }
  for (; i < count; ++i) {
    out[i] = table[a[i] * stride + b[i]];
  }
}

}  // namespace

KernelSet const* avx2() {
  static KernelSet const set{"avx2", compose_avx2, gather_avx2,
                             table_product_avx2};
  static bool const supported = __builtin_cpu_supports("avx2");
  return supported ? &set : nullptr;
}

#else

KernelSet const* avx2() { return nullptr; }

#endif

}  // namespace malcev::kernels
