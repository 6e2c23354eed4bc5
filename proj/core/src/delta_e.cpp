#include "dustbench/delta_e.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dustbench {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double hue_degrees(double b, double a) {
  if (a == 0.0 && b == 0.0) return 0.0;
  double h = std::atan2(b, a) / kDeg;
  if (h < 0.0) h += 360.0;
  return h;
}

}  // namespace

double delta_e_cie94(const Lab& reference, const Lab& sample) {
  constexpr double kK1 = 0.045;
  constexpr double kK2 = 0.015;
  const double c1 = std::hypot(reference.a, reference.b);
  const double c2 = std::hypot(sample.a, sample.b);
  const double dl = reference.l - sample.l;
  const double dc = c1 - c2;
  const double da = reference.a - sample.a;
  const double db = reference.b - sample.b;
  const double dh2 = std::max(0.0, da * da + db * db - dc * dc);
  const double sc = 1.0 + kK1 * c1;
  const double sh = 1.0 + kK2 * c1;
  return std::sqrt(dl * dl + (dc / sc) * (dc / sc) + dh2 / (sh * sh));
}

double delta_e_ciede2000(const Lab& reference, const Lab& sample) {
  const double pow25_7 = 6103515625.0;  // 25^7
  const double c1 = std::hypot(reference.a, reference.b);
  const double c2 = std::hypot(sample.a, sample.b);
  const double c_bar7 = std::pow(0.5 * (c1 + c2), 7.0);
  const double g = 0.5 * (1.0 - std::sqrt(c_bar7 / (c_bar7 + pow25_7)));

  const double a1p = (1.0 + g) * reference.a;
  const double a2p = (1.0 + g) * sample.a;
  const double c1p = std::hypot(a1p, reference.b);
  const double c2p = std::hypot(a2p, sample.b);
  const double h1p = hue_degrees(reference.b, a1p);
  const double h2p = hue_degrees(sample.b, a2p);

  const double dlp = sample.l - reference.l;
  const double dcp = c2p - c1p;
  const double cc = c1p * c2p;
  double dhp = 0.0;
  if (cc != 0.0) {
    dhp = h2p - h1p;
    if (dhp > 180.0) {
      dhp -= 360.0;
    } else if (dhp < -180.0) {
      dhp += 360.0;
    }
  }
  const double d_big_hp = 2.0 * std::sqrt(cc) * std::sin(0.5 * dhp * kDeg);

  const double l_bar = 0.5 * (reference.l + sample.l);
  const double c_bar_p = 0.5 * (c1p + c2p);
  double h_bar = h1p + h2p;
  if (cc != 0.0) {
    if (std::abs(h1p - h2p) <= 180.0) {
      h_bar *= 0.5;
    } else if (h_bar < 360.0) {
      h_bar = 0.5 * (h_bar + 360.0);
    } else {
      h_bar = 0.5 * (h_bar - 360.0);
    }
  }

  const double t = 1.0 - 0.17 * std::cos((h_bar - 30.0) * kDeg) +
                   0.24 * std::cos(2.0 * h_bar * kDeg) +
                   0.32 * std::cos((3.0 * h_bar + 6.0) * kDeg) -
                   0.20 * std::cos((4.0 * h_bar - 63.0) * kDeg);
  const double d_theta =
      30.0 * std::exp(-((h_bar - 275.0) / 25.0) * ((h_bar - 275.0) / 25.0));
  const double c_bar_p7 = std::pow(c_bar_p, 7.0);
  const double rc = 2.0 * std::sqrt(c_bar_p7 / (c_bar_p7 + pow25_7));
  const double l50 = (l_bar - 50.0) * (l_bar - 50.0);
  const double sl = 1.0 + 0.015 * l50 / std::sqrt(20.0 + l50);
  const double sc = 1.0 + 0.045 * c_bar_p;
  const double sh = 1.0 + 0.015 * c_bar_p * t;
  const double rt = -std::sin(2.0 * d_theta * kDeg) * rc;

  const double tl = dlp / sl;
  const double tc = dcp / sc;
  const double th = d_big_hp / sh;
  return std::sqrt(tl * tl + tc * tc + th * th + rt * tc * th);
}

double color_difference(const ImageRGB& test, const ImageRGB& ref,
                        DeltaEFormula formula) {
  require_same_shape(test, ref, "color difference");
  if (test.empty()) throw InvalidArgument("color difference of empty images");
  const auto t = test.data();
  const auto r = ref.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); i += 3) {
    const Lab lt = srgb_to_lab({t[i], t[i + 1], t[i + 2]});
    const Lab lr = srgb_to_lab({r[i], r[i + 1], r[i + 2]});
    sum += formula == DeltaEFormula::kCie94 ? delta_e_cie94(lr, lt)
                                            : delta_e_ciede2000(lr, lt);
  }
  return sum / static_cast<double>(test.pixel_count());
}

}  // namespace dustbench
