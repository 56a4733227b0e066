#include "malcev/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace malcev::kernels {

KernelSet const& active() {
  static KernelSet const& chosen = [] () -> KernelSet const& {
    char const* forced = std::getenv("MALCEV_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
      return scalar();
    }
    if (KernelSet const* fast = avx2()) {
      return *fast;
    }
    return scalar();
  }();
  return chosen;
}

}  // namespace malcev::kernels
