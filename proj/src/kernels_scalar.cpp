#include "malcev/kernels.hpp"

namespace malcev::kernels {

namespace {

void compose_scalar(std::uint8_t const* s, std::uint8_t const* t,
                    std::uint8_t* out, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    out[j] = t[s[j]];
  }
}

void gather_scalar(std::uint32_t const* base, std::uint32_t const* idx,
                   std::uint32_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = base[idx[i]];
  }
}

void table_product_scalar(std::uint32_t const* table, std::size_t stride,
                          std::uint32_t const* a, std::uint32_t const* b,
                          std::uint32_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = table[a[i] * stride + b[i]];
  }
}

}  // namespace

KernelSet const& scalar() {
  static KernelSet const set{"scalar", compose_scalar, gather_scalar,
                             table_product_scalar};
  return set;
}

}  // namespace malcev::kernels
