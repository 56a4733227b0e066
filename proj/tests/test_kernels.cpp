#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "malcev/kernels.hpp"
#include "support.hpp"

using namespace malcev;

TEST_CASE("avx2 kernels agree with the scalar reference", "[kernels]") {
  kernels::KernelSet const* fast = kernels::avx2();
  if (fast == nullptr) {
    SKIP("AVX2 not available");
  }
  kernels::KernelSet const& ref = kernels::scalar();

  for (int trial = 0; trial < 500; ++trial) {
    std::size_t len = testing::uniform(1, 40);
    std::vector<std::uint8_t> s(len), t(len), a(len), b(len);
    for (std::size_t j = 0; j < len; ++j) {
      s[j] = static_cast<std::uint8_t>(testing::uniform(0, len - 1));
      t[j] = static_cast<std::uint8_t>(testing::uniform(0, 255));
    }
    ref.compose(s.data(), t.data(), a.data(), len);
    fast->compose(s.data(), t.data(), b.data(), len);
    REQUIRE(a == b);
  }

  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = testing::uniform(1, 60);
    std::size_t count = testing::uniform(0, 100);
    std::vector<std::uint32_t> table(n * n);
    for (auto& x : table) {
      x = static_cast<std::uint32_t>(testing::uniform(0, n - 1));
    }
    std::vector<std::uint32_t> ia(count), ib(count), out1(count), out2(count);
    for (std::size_t i = 0; i < count; ++i) {
      ia[i] = static_cast<std::uint32_t>(testing::uniform(0, n - 1));
      ib[i] = static_cast<std::uint32_t>(testing::uniform(0, n - 1));
    }
    ref.table_product(table.data(), n, ia.data(), ib.data(), out1.data(), count);
    fast->table_product(table.data(), n, ia.data(), ib.data(), out2.data(), count);
    REQUIRE(out1 == out2);
    ref.gather(table.data(), ia.data(), out1.data(), count);
    fast->gather(table.data(), ia.data(), out2.data(), count);
    REQUIRE(out1 == out2);
  }
}

TEST_CASE("active kernel set is one of the known sets", "[kernels]") {
  auto const& k = kernels::active();
  bool known = &k == &kernels::scalar() || &k == kernels::avx2();
  REQUIRE(known);
}
