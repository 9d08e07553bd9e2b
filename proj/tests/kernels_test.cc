// Copyright 2026 The wl1nmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstring>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wl1nmf/kernels.h"

namespace wl1nmf::kernels {
namespace {

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool SameBits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (avx2_table() == nullptr) GTEST_SKIP() << "AVX2 variant not built";
  }
  const KernelTable& ref_ = scalar_table();
  const KernelTable* simd_ = avx2_table();
  std::mt19937_64 gen_{21};

  std::vector<double> Random(std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& e : v) e = u(gen_);
    return v;
  }
};

TEST_F(KernelEquivalence, Gather) {
  for (std::size_t n = 0; n < 70; ++n) {
    const auto src = Random(200, -1, 1);
    std::vector<Index> idx(n);
    std::uniform_int_distribution<Index> pick(0, 199);
    for (auto& i : idx) i = pick(gen_);
    std::vector<double> a(n), b(n);
    ref_.gather(src.data(), idx.data(), n, a.data());
    simd_->gather(src.data(), idx.data(), n, b.data());
    ASSERT_TRUE(SameBits(a, b)) << n;
  }
}

TEST_F(KernelEquivalence, RowDot) {
  for (std::size_t n = 0; n < 40; ++n) {
    for (std::size_t r : {1, 3, 5, 20}) {
      const std::size_t ld = n + 3;
      const auto block = Random(ld * r, 0, 1);
      const auto coef = Random(r, 0, 2);
      std::vector<double> a(n), b(n);
      ref_.row_dot(block.data(), ld, r, coef.data(), n, a.data());
      simd_->row_dot(block.data(), ld, r, coef.data(), n, b.data());
      ASSERT_TRUE(SameBits(a, b)) << n << " " << r;
    }
  }
}

TEST_F(KernelEquivalence, Elementwise) {
  for (std::size_t n = 0; n < 70; ++n) {
    const auto data = Random(n, 0, 1);
    const auto fit = Random(n, 0, 1);
    const auto basis = Random(n, 0, 1);
    std::vector<double> a(n), b(n);
    ref_.numerators(data.data(), fit.data(), basis.data(), 0.7, n, a.data());
    simd_->numerators(data.data(), fit.data(), basis.data(), 0.7, n, b.data());
    ASSERT_TRUE(SameBits(a, b)) << "numerators " << n;

    ref_.divide(data.data(), basis.data(), n, a.data());
    simd_->divide(data.data(), basis.data(), n, b.data());
    ASSERT_TRUE(SameBits(a, b)) << "divide " << n;

    a = fit;
    b = fit;
    ref_.axpy(-0.3, basis.data(), n, a.data());
    simd_->axpy(-0.3, basis.data(), n, b.data());
    ASSERT_TRUE(SameBits(a, b)) << "axpy " << n;
  }
}

TEST_F(KernelEquivalence, Reductions) {
  for (std::size_t n = 0; n < 130; ++n) {
    const auto x = Random(n, -1, 1);
    const auto y = Random(n, -1, 1);
    ASSERT_TRUE(SameBits(ref_.sum(x.data(), n), simd_->sum(x.data(), n))) << n;
    ASSERT_TRUE(SameBits(ref_.dot(x.data(), y.data(), n),
                         simd_->dot(x.data(), y.data(), n)))
        << n;
    ASSERT_TRUE(SameBits(ref_.abs_diff_sum(x.data(), y.data(), n),
                         simd_->abs_diff_sum(x.data(), y.data(), n)))
        << n;
  }
}

TEST_F(KernelEquivalence, DivideByZeroAgrees) {
  const std::vector<double> num{1.0, -1.0, 0.0, 2.0, 3.0};
  const std::vector<double> den{0.0, 0.0, 1.0, 0.0, 4.0};
  std::vector<double> a(5), b(5);
  ref_.divide(num.data(), den.data(), 5, a.data());
  simd_->divide(num.data(), den.data(), 5, b.data());
  EXPECT_TRUE(SameBits(a, b));
}

TEST(Kernels, ScalarReferenceValues) {
  const auto& k = scalar_table();
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> y{5, 4, 3, 2, 1};
  EXPECT_EQ(k.sum(x.data(), 5), 15.0);
  EXPECT_EQ(k.dot(x.data(), y.data(), 5), 35.0);
  EXPECT_EQ(k.abs_diff_sum(x.data(), y.data(), 5), 12.0);
  std::vector<double> out(5);
  k.numerators(x.data(), y.data(), x.data(), 1.0, 5, out.data());
  // min((x - y) + x, x)
  EXPECT_EQ(out, (std::vector<double>{-3, 0, 3, 4, 5}));
}

TEST(Kernels, SelectAndParse) {
  EXPECT_EQ(parse_isa("scalar"), Isa::kScalar);
  EXPECT_EQ(parse_isa("avx2"), Isa::kAvx2);
  EXPECT_THROW(parse_isa("sse"), InvalidArgument);
  const Isa before = active().isa;
  select(Isa::kScalar);
  EXPECT_EQ(active().isa, Isa::kScalar);
  if (cpu_supports(Isa::kAvx2) && avx2_table() != nullptr) {
    select(Isa::kAvx2);
    EXPECT_EQ(active().isa, Isa::kAvx2);
  } else {
    EXPECT_THROW(select(Isa::kAvx2), InvalidArgument);
  }
  select(before);
}

}  // namespace
}  // namespace wl1nmf::kernels
