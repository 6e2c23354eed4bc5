#include "dustbench/scatter.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dustbench/error.hpp"
#include "dustbench/palette.hpp"
#include "support/test_util.hpp"

namespace dustbench {
namespace {

const ColorDeviation kC89463 = parse_hex("#C89463");
const ColorDeviation kA14A10 = parse_hex("#A14A10");

TEST(TransmissionMap, ScalarValues) {
  const DepthMap d(3, 1, {0.0, 1.0, 0.5});
  const TransmissionMap t6 = transmission_map(d, 0.6);
  EXPECT_EQ(t6.at(0, 0), 1.0);
  EXPECT_NEAR(t6.at(1, 0), 0.548812, 1e-6);
  EXPECT_NEAR(transmission_map(d, 0.3).at(2, 0), 0.860708, 1e-6);
}

TEST(TransmissionMap, RejectsBadBeta) {
  const DepthMap d(1, 1);
  EXPECT_THROW(transmission_map(d, 0.0), InvalidArgument);
  EXPECT_THROW(transmission_map(d, -0.1), InvalidArgument);
  EXPECT_THROW(transmission_map(d, std::nan("")), InvalidArgument);
  EXPECT_THROW(transmission_map(d, INFINITY), InvalidArgument);
  EXPECT_THROW(TransmissionMap(1, 1, {0.0}), InvalidArgument);
  EXPECT_THROW(TransmissionMap(1, 1, {1.1}), InvalidArgument);
}

TEST(ScatterParams, Validation) {
  EXPECT_THROW(ScatterParams(kC89463, 0.0), InvalidArgument);
  EXPECT_THROW(ScatterParams(kC89463, 1.5), InvalidArgument);
  EXPECT_NO_THROW(ScatterParams(kC89463, 1.0));
}

TEST(InherentDeviation, Examples) {
  const ColorField white = inherent_deviation(ImageRGB::filled(1, 1, {1, 1, 1}), kC89463);
  EXPECT_NEAR(white.at(0, 0, 0), 0.78431, 1e-5);
  EXPECT_NEAR(white.at(0, 0, 1), 0.58039, 1e-5);
  EXPECT_NEAR(white.at(0, 0, 2), 0.38824, 1e-5);

  const ColorField mid =
      inherent_deviation(ImageRGB::filled(1, 1, {0.5, 0.5, 0.5}), Pixel{0.5, 0.5, 0.5});
  EXPECT_EQ(mid.pixel(0, 0), (Pixel{0.0, 0.0, 0.0}));

  const ColorField black = inherent_deviation(ImageRGB::filled(1, 1, {0, 0, 0}), kA14A10);
  EXPECT_NEAR(black.at(0, 0, 0), -0.36863, 1e-5);
  EXPECT_NEAR(black.at(0, 0, 1), -0.70980, 1e-5);
  EXPECT_NEAR(black.at(0, 0, 2), -0.93725, 1e-5);
}

TEST(ApplyTransmission, Examples) {
  const ColorField jc = inherent_deviation(ImageRGB::filled(2, 1, {1, 1, 1}), kC89463);
  EXPECT_EQ(apply_transmission(jc, TransmissionMap::filled(2, 1, 1.0)), jc);
  const ColorField half = apply_transmission(jc, TransmissionMap::filled(2, 1, 0.5));
  EXPECT_NEAR(half.at(1, 0, 0), 0.5 * 200.0 / 255.0, 1e-12);
  const ColorField rounded = apply_transmission(
      inherent_deviation(ImageRGB::filled(2, 1, {1, 1, 1}),
                         Pixel{0.78431, 0.58039, 0.38824}),
      TransmissionMap::filled(2, 1, 0.5));
  EXPECT_NEAR(rounded.at(1, 0, 0), 0.392155, 1e-6);
  const ColorField tiny = apply_transmission(jc, TransmissionMap::filled(2, 1, 1e-300));
  for (double v : tiny.data()) EXPECT_LT(std::abs(v), 1e-299);
  EXPECT_THROW(apply_transmission(jc, TransmissionMap::filled(1, 1, 1.0)),
               DimensionMismatch);
}

TEST(Synthesize, HandEvaluatedWhitePixel) {
  const SynthesisResult r = synthesize(ImageRGB::filled(1, 1, {1, 1, 1}),
                                       TransmissionMap::filled(1, 1, 0.5), kC89463);
  const double a_r = 200.0 / 255.0, a_g = 148.0 / 255.0, a_b = 99.0 / 255.0;
  const SynthesisResult rounded =
      synthesize(ImageRGB::filled(1, 1, {1, 1, 1}), TransmissionMap::filled(1, 1, 0.5),
                 Pixel{0.78431, 0.58039, 0.38824});
  EXPECT_NEAR(rounded.pre_clamp_max[0], 1.176465, 1e-6);
  EXPECT_NEAR(rounded.pre_clamp_max[1], 0.870585, 1e-6);
  EXPECT_NEAR(rounded.pre_clamp_max[2], 0.582360, 1e-6);
  EXPECT_DOUBLE_EQ(r.pre_clamp_max[0], 0.5 * a_r + a_r);
  EXPECT_EQ(r.image.at(0, 0, 0), 1.0);
  EXPECT_NEAR(r.image.at(0, 0, 1), 0.5 * a_g + a_g, 1e-12);
  EXPECT_NEAR(r.image.at(0, 0, 2), 0.5 * a_b + a_b, 1e-12);
  EXPECT_DOUBLE_EQ(r.clip_fraction, 1.0 / 3.0);
}

TEST(Synthesize, DecompositionIdentity) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ImageRGB clear = testing::random_image(rng, 9, 7);
    const DepthMap depth = testing::random_depth(rng, 9, 7);
    const ScatterParams params(default_palette()[rng.index(21)], rng.uniform(0.01, 1.0));
    const TransmissionMap t = transmission_map(depth, params.beta());
    const ColorField pre = scatter_field(clear, t, params.a_s());
    const ColorField jd = apply_transmission(inherent_deviation(clear, params.a_s()), t);
    for (std::size_t i = 0; i < pre.sample_count(); ++i) {
      EXPECT_NEAR(pre.data()[i], jd.data()[i] + params.a_s().rgb()[i % 3], 1e-12);
    }
  }
}

TEST(Synthesize, ClipFractionZeroIffExtremaInRange) {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const ImageRGB clear = testing::random_image(rng, 6, 6);
    const DepthMap depth = testing::random_depth(rng, 6, 6);
    const ScatterParams params(default_palette()[rng.index(21)], rng.uniform(0.3, 0.6));
    const SynthesisResult r = synthesize(clear, depth, params);
    bool in_range = true;
    for (int c = 0; c < 3; ++c) {
      in_range = in_range && r.pre_clamp_min[c] >= 0.0 && r.pre_clamp_max[c] <= 1.0;
    }
    EXPECT_EQ(r.clip_fraction == 0.0, in_range);
    EXPECT_GE(r.clip_fraction, 0.0);
    EXPECT_LE(r.clip_fraction, 1.0);
  }
}

TEST(Synthesize, NeutralAmbientNeverClips) {
  Rng rng(23);
  const ImageRGB clear = testing::random_image(rng, 8, 8);
  const DepthMap depth = testing::random_depth(rng, 8, 8);
  for (double beta : {1e-6, 0.3, 0.6, 1.0, 5.0}) {
    const SynthesisResult r =
        synthesize(clear, transmission_map(depth, beta), Pixel{0.5, 0.5, 0.5});
    EXPECT_EQ(r.clip_fraction, 0.0) << beta;
  }
}

TEST(Synthesize, ConstantGrayPropagatesChannelOrder) {
  Rng rng(24);
  for (const ColorDeviation& a : default_palette()) {
    const double v = rng.uniform();
    const ImageRGB gray = ImageRGB::filled(5, 5, {v, v, v});
    const TransmissionMap t = transmission_map(testing::random_depth(rng, 5, 5), 0.6);
    const ColorField pre = scatter_field(gray, t, a);
    for (int y = 0; y < 5; ++y) {
      for (int x = 0; x < 5; ++x) {
        const double diff = pre.at(x, y, 0) - pre.at(x, y, 2);
        EXPECT_NEAR(diff, (a.r() - a.b()) * (1.0 + t.at(x, y)), 1e-12);
        EXPECT_GT(pre.at(x, y, 0), pre.at(x, y, 1));
        EXPECT_GT(pre.at(x, y, 1), pre.at(x, y, 2));
      }
    }
  }
}

TEST(Synthesize, IncreasingBetaMovesTowardAmbient) {
  Rng rng(25);
  const ImageRGB clear = testing::random_image(rng, 6, 6);
  std::vector<double> d(36);
  for (double& v : d) v = rng.uniform(0.05, 1.0);
  const DepthMap depth(6, 6, d);
  const ColorDeviation a = kC89463;
  std::vector<double> prev_gap;
  for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const ColorField pre = scatter_field(clear, transmission_map(depth, beta), a);
    std::vector<double> gap(pre.sample_count());
    for (std::size_t i = 0; i < gap.size(); ++i) {
      gap[i] = std::abs(pre.data()[i] - a.rgb()[i % 3]);
    }
    if (!prev_gap.empty()) {
      for (std::size_t i = 0; i < gap.size(); ++i) EXPECT_LE(gap[i], prev_gap[i]);
    }
    prev_gap = gap;
  }
}

TEST(Synthesize, ShapeMismatch) {
  EXPECT_THROW(synthesize(ImageRGB(4, 4), DepthMap(4, 5), ScatterParams(kC89463, 0.4)),
               DimensionMismatch);
}

TEST(Synthesize, RejectsAmbientOutsideUnitCube) {
  EXPECT_THROW(synthesize(ImageRGB(1, 1), TransmissionMap::filled(1, 1, 1.0),
                          Pixel{1.2, 0.5, 0.5}),
               InvalidArgument);
}

}  // namespace
}  // namespace dustbench
