#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <complex>
#include <numbers>

#include "xxz/hamiltonian.hpp"
#include "xxz/spectrum.hpp"

namespace xxz {
namespace {

const std::vector<double> kDeltas{0.0, 0.5, 1.0, 2.5};

std::vector<double> sorted(const Eigen::VectorXd& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ApplyH, AllUpIsDiagonal) {
  const auto terms = apply_h({5, 1.0, 1.0}, SpinState(0u, 5));
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].target.bits, 0u);
  EXPECT_DOUBLE_EQ(terms[0].amplitude, 5.0);
}

TEST(ApplyH, SingleReversedSpin) {
  const double delta = 0.7;
  const auto terms = apply_h({5, 1.0, delta}, SpinState(1u, 5));
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].target.bits, 1u);
  EXPECT_NEAR(terms[0].amplitude, 2.5 + delta / 2.0, 1e-15);
  std::vector<std::uint32_t> hops{terms[1].target.bits, terms[2].target.bits};
  std::sort(hops.begin(), hops.end());
  EXPECT_EQ(hops, (std::vector<std::uint32_t>{0b00010u, 0b10000u}));
  EXPECT_DOUBLE_EQ(terms[1].amplitude, 1.0);
  EXPECT_DOUBLE_EQ(terms[2].amplitude, 1.0);
}

TEST(ApplyH, TwoSiteRingCountsBothBonds) {
  const auto terms = apply_h({2, 1.0, 1.0}, SpinState(0b01u, 2));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[1].target.bits, 0b10u);
  EXPECT_DOUBLE_EQ(terms[1].amplitude, 2.0);
}

TEST(FullMatrix, TraceIdentity) {
  for (int n = 2; n <= 8; ++n)
    for (double delta : kDeltas)
      EXPECT_NEAR(full_matrix({n, 1.0, delta}).trace(), 0.5 * n * (1 << n), 1e-10);
  EXPECT_NEAR(full_matrix({5, 1.0, 3.3}).trace(), 80.0, 1e-12);
}

TEST(FullMatrix, TwoSiteEigenvalues) {
  const auto ev = sorted(eig_self_adjoint(full_matrix({2, 1.0, 1.0})));
  const std::vector<double> expected{-2.0, 2.0, 2.0, 2.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
}

TEST(FullMatrix, CommutesWithShiftAndConservesMagnetization) {
  for (int n = 2; n <= 8; ++n) {
    const Eigen::MatrixXd t = shift_matrix(n);
    for (double delta : kDeltas) {
      const Eigen::MatrixXd h = full_matrix({n, 1.0, delta});
      EXPECT_LT((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((h * t - t * h).cwiseAbs().maxCoeff(), 1e-12);
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
          if (std::popcount(static_cast<unsigned>(i)) != std::popcount(static_cast<unsigned>(j)))
            ASSERT_EQ(h(i, j), 0.0);
    }
  }
}

TEST(FullMatrix, CapacityGuard) {
  EXPECT_THROW(full_matrix({15, 1.0, 1.0}), capacity_error);
}

TEST(BlockMatrix, FiveSiteTwoMagnonBlock) {
  for (double delta : {0.0, 0.7, 1.0, 2.0})
    for (int k = 1; k <= 5; ++k) {
      const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0);
      const Eigen::MatrixXcd h = block_matrix({5, 1.0, delta}, 2, k);
      ASSERT_EQ(h.rows(), 2);
      const std::complex<double> e11 = 3.0 + (delta - 1.0) / 2.0;
      const std::complex<double> e22 = 1.0 - 3.0 * (delta - 1.0) / 2.0 + w * w + 1.0 / (w * w);
      const std::complex<double> e12 = 1.0 + 1.0 / w;
      EXPECT_LT(std::abs(h(0, 0) - e11), 1e-12);
      EXPECT_LT(std::abs(h(1, 1) - e22), 1e-12);
      EXPECT_LT(std::abs(h(0, 1) - e12), 1e-12);
      EXPECT_LT(std::abs(h(1, 0) - std::conj(e12)), 1e-12);
    }
}

TEST(BlockMatrix, FiveSiteOneMagnonAndVacuum) {
  for (double delta : {0.0, 1.0, 3.0}) {
    for (int k = 1; k <= 5; ++k) {
      const Eigen::MatrixXcd h = block_matrix({5, 1.0, delta}, 1, k);
      ASSERT_EQ(h.rows(), 1);
      EXPECT_NEAR(h(0, 0).real(), 3.0 + (delta - 1.0) / 2.0 + 2.0 * std::cos(2.0 * k * std::numbers::pi / 5.0),
                  1e-12);
      EXPECT_NEAR(h(0, 0).imag(), 0.0, 1e-12);
    }
    const Eigen::MatrixXcd vac = block_matrix({5, 1.0, delta}, 0, 5);
    ASSERT_EQ(vac.rows(), 1);
    EXPECT_NEAR(vac(0, 0).real(), 5.0 * (1.0 + (delta - 1.0) / 2.0), 1e-12);
    EXPECT_EQ(block_matrix({5, 1.0, delta}, 0, 1).size(), 0);
  }
}

// Projection through explicitly expanded basis vectors, independent of the
// orbit-folding formula used by block_matrix.
TEST(BlockMatrix, MatchesExpandedProjection) {
  for (int n : {4, 6}) {
    const ModelParams p{n, 1.0, 0.8};
    const Eigen::MatrixXcd h = full_matrix(p).cast<std::complex<double>>();
    for (int r = 0; r <= n; ++r)
      for (int k = 1; k <= n; ++k) {
        const MomentumBasis mb = momentum_basis(n, r, k);
        if (mb.empty()) continue;
        Eigen::MatrixXcd v(h.rows(), static_cast<Eigen::Index>(mb.size()));
        for (std::size_t j = 0; j < mb.size(); ++j) v.col(static_cast<Eigen::Index>(j)) = expand(mb, j);
        EXPECT_LT((v.adjoint() * h * v - block_matrix(p, mb)).cwiseAbs().maxCoeff(), 1e-12)
            << "N=" << n << " r=" << r << " k=" << k;
      }
  }
}

TEST(BlockMatrix, SectorEquivalenceAndSpinFlip) {
  for (int n = 2; n <= 8; ++n)
    for (double delta : kDeltas) {
      const ModelParams p{n, 1.0, delta};
      std::vector<double> from_blocks;
      for (int r = 0; r <= n; ++r)
        for (int k = 1; k <= n; ++k) {
          const Eigen::MatrixXcd b = block_matrix(p, r, k);
          if (b.size() == 0) {
            EXPECT_EQ(block_matrix(p, n - r, k).size(), 0);
            continue;
          }
          EXPECT_LT((b - b.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
          const auto ev = sorted(eig_self_adjoint(b));
          from_blocks.insert(from_blocks.end(), ev.begin(), ev.end());
          const auto flipped = sorted(eig_self_adjoint(block_matrix(p, n - r, k)));
          ASSERT_EQ(ev.size(), flipped.size());
          for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], flipped[i], 1e-9);
        }
      std::sort(from_blocks.begin(), from_blocks.end());
      const auto full = sorted(eig_self_adjoint(full_matrix(p)));
      ASSERT_EQ(from_blocks.size(), full.size());
      for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(from_blocks[i], full[i], 1e-9);
    }
}

}  // namespace
}  // namespace xxz
