#include "dustbench/fsim.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <vector>

namespace dustbench {

namespace {

using Complex = std::complex<double>;

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Fft2d {
 public:
  Fft2d(int rows, int cols) : rows_(rows), cols_(cols), size_(static_cast<std::size_t>(rows) * cols) {
    buffer_ = fftw_alloc_complex(size_);
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_2d(rows, cols, buffer_, buffer_, FFTW_FORWARD,
                                FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_2d(rows, cols, buffer_, buffer_, FFTW_BACKWARD,
                                FFTW_ESTIMATE);
  }
  ~Fft2d() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
    fftw_free(buffer_);
  }
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  std::vector<Complex> forward(const std::vector<Complex>& in) {
    return run(forward_, in, 1.0);
  }
  // Normalized inverse, matching ifft2.
  std::vector<Complex> inverse(const std::vector<Complex>& in) {
    return run(inverse_, in, 1.0 / static_cast<double>(size_));
  }

 private:
  std::vector<Complex> run(fftw_plan plan, const std::vector<Complex>& in,
                           double scale) {
    for (std::size_t i = 0; i < size_; ++i) {
      buffer_[i][0] = in[i].real();
      buffer_[i][1] = in[i].imag();
    }
    fftw_execute(plan);
    std::vector<Complex> out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      out[i] = Complex(buffer_[i][0] * scale, buffer_[i][1] * scale);
    }
    return out;
  }

  int rows_;
  int cols_;
  std::size_t size_;
  fftw_complex* buffer_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
};

// Frequency coordinate of FFT index k for a length-n axis, in the
// ifftshift-ed layout (odd lengths normalize by n - 1).
double frequency(int k, int n) {
  if (n % 2 == 1) {
    const int half = (n - 1) / 2;
    return (k <= half ? k : k - n) / static_cast<double>(n - 1);
  }
  return (k < n / 2 ? k : k - n) / static_cast<double>(n);
}

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  const std::size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (n % 2 == 1) return upper;
  const double lower =
      *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

// Log-Gabor filter bank for one raster size, plus the per-orientation noise
// statistics that depend only on the filters.
struct FilterBank {
  int rows = 0;
  int cols = 0;
  // filters[o * scales + s]
  std::vector<std::vector<double>> filters;
  std::vector<double> first_scale_energy;  // sum(filter^2), scale 0, per o
  std::vector<double> sum_an2;             // per orientation
  std::vector<double> sum_ai_aj;           // per orientation
};

FilterBank make_filter_bank(int rows, int cols, const FsimConfig& cfg, Fft2d& fft) {
  const std::size_t n = static_cast<std::size_t>(rows) * cols;
  std::vector<double> radius(n), sin_t(n), cos_t(n), lowpass(n);
  for (int r = 0; r < rows; ++r) {
    const double y = frequency(r, rows);
    for (int c = 0; c < cols; ++c) {
      const double x = frequency(c, cols);
      const std::size_t i = static_cast<std::size_t>(r) * cols + c;
      const double rad = std::sqrt(x * x + y * y);
      lowpass[i] = 1.0 / (1.0 + std::pow(rad / 0.45, 2.0 * 15));
      radius[i] = rad;
      const double theta = std::atan2(-y, x);
      sin_t[i] = std::sin(theta);
      cos_t[i] = std::cos(theta);
    }
  }
  radius[0] = 1.0;

  std::vector<std::vector<double>> log_gabor(static_cast<std::size_t>(cfg.scales));
  const double log_sigma = std::log(cfg.sigma_onf);
  for (int s = 0; s < cfg.scales; ++s) {
    const double fo = 1.0 / (cfg.min_wavelength * std::pow(cfg.mult, s));
    auto& lg = log_gabor[static_cast<std::size_t>(s)];
    lg.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double l = std::log(radius[i] / fo);
      lg[i] = std::exp(-(l * l) / (2.0 * log_sigma * log_sigma)) * lowpass[i];
    }
    lg[0] = 0.0;
  }

  const double theta_sigma =
      std::numbers::pi / cfg.orientations / cfg.d_theta_on_sigma;
  FilterBank bank;
  bank.rows = rows;
  bank.cols = cols;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  for (int o = 0; o < cfg.orientations; ++o) {
    const double angle = o * std::numbers::pi / cfg.orientations;
    std::vector<double> spread(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double ds = sin_t[i] * std::cos(angle) - cos_t[i] * std::sin(angle);
      const double dc = cos_t[i] * std::cos(angle) + sin_t[i] * std::sin(angle);
      const double dtheta = std::abs(std::atan2(ds, dc));
      spread[i] = std::exp(-(dtheta * dtheta) / (2.0 * theta_sigma * theta_sigma));
    }
    std::vector<std::vector<double>> spatial;
    for (int s = 0; s < cfg.scales; ++s) {
      std::vector<double> filter(n);
      for (std::size_t i = 0; i < n; ++i) {
        filter[i] = log_gabor[static_cast<std::size_t>(s)][i] * spread[i];
      }
      if (s == 0) {
        double e = 0.0;
        for (double f : filter) e += f * f;
        bank.first_scale_energy.push_back(e);
      }
      const auto inv = fft.inverse(std::vector<Complex>(filter.begin(), filter.end()));
      std::vector<double> real(n);
      for (std::size_t i = 0; i < n; ++i) real[i] = inv[i].real() * sqrt_n;
      spatial.push_back(std::move(real));
      bank.filters.push_back(std::move(filter));
    }
    double an2 = 0.0;
    double aiaj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (int si = 0; si < cfg.scales; ++si) {
        const double fi = spatial[static_cast<std::size_t>(si)][i];
        an2 += fi * fi;
        for (int sj = si + 1; sj < cfg.scales; ++sj) {
          aiaj += fi * spatial[static_cast<std::size_t>(sj)][i];
        }
      }
    }
    bank.sum_an2.push_back(an2);
    bank.sum_ai_aj.push_back(aiaj);
  }
  return bank;
}

std::vector<double> phase_congruency_with(const std::vector<double>& plane,
                                          const FilterBank& bank,
                                          const FsimConfig& cfg, Fft2d& fft) {
  const std::size_t n = plane.size();
  const auto spectrum = fft.forward(std::vector<Complex>(plane.begin(), plane.end()));
  std::vector<double> energy_all(n, 0.0);
  std::vector<double> an_all(n, 0.0);
  std::vector<Complex> product(n);

  for (int o = 0; o < cfg.orientations; ++o) {
    std::vector<double> sum_e(n, 0.0), sum_o(n, 0.0), sum_an(n, 0.0);
    std::vector<std::vector<Complex>> responses;
    for (int s = 0; s < cfg.scales; ++s) {
      const auto& filter =
          bank.filters[static_cast<std::size_t>(o * cfg.scales + s)];
      for (std::size_t i = 0; i < n; ++i) product[i] = spectrum[i] * filter[i];
      auto eo = fft.inverse(product);
      for (std::size_t i = 0; i < n; ++i) {
        sum_an[i] += std::abs(eo[i]);
        sum_e[i] += eo[i].real();
        sum_o[i] += eo[i].imag();
      }
      responses.push_back(std::move(eo));
    }

    std::vector<double> energy(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double x_energy =
          std::sqrt(sum_e[i] * sum_e[i] + sum_o[i] * sum_o[i]) + cfg.epsilon;
      const double mean_e = sum_e[i] / x_energy;
      const double mean_o = sum_o[i] / x_energy;
      for (const auto& eo : responses) {
        const double e = eo[i].real();
        const double od = eo[i].imag();
        energy[i] += e * mean_e + od * mean_o - std::abs(e * mean_o - od * mean_e);
      }
    }

    std::vector<double> first_power(n);
    for (std::size_t i = 0; i < n; ++i) first_power[i] = std::norm(responses[0][i]);
    const double mean_e2n = -median(std::move(first_power)) / std::log(0.5);
    const double noise_power =
        mean_e2n / bank.first_scale_energy[static_cast<std::size_t>(o)];
    const double noise_energy2 =
        2.0 * noise_power * bank.sum_an2[static_cast<std::size_t>(o)] +
        4.0 * noise_power * bank.sum_ai_aj[static_cast<std::size_t>(o)];
    const double tau = std::sqrt(noise_energy2 / 2.0);
    const double noise_mean = tau * std::sqrt(std::numbers::pi / 2.0);
    const double noise_sigma = std::sqrt((2.0 - std::numbers::pi / 2.0) * tau * tau);
    const double threshold = (noise_mean + cfg.noise_k * noise_sigma) / 1.7;

    for (std::size_t i = 0; i < n; ++i) {
      energy_all[i] += std::max(energy[i] - threshold, 0.0);
      an_all[i] += sum_an[i];
    }
  }

  std::vector<double> pc(n);
  for (std::size_t i = 0; i < n; ++i) {
    pc[i] = an_all[i] > 0.0 ? energy_all[i] / an_all[i] : 0.0;
  }
  return pc;
}

// conv2(src, kernel, 'same') with zero padding; kernel is kh x kw row-major.
std::vector<double> convolve_same(const std::vector<double>& src, int w, int h,
                                  const std::vector<double>& kernel, int kw, int kh) {
  std::vector<double> out(src.size(), 0.0);
  const int ox = kw / 2;
  const int oy = kh / 2;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int v = 0; v < kh; ++v) {
        const int sy = y + oy - v;
        if (sy < 0 || sy >= h) continue;
        for (int u = 0; u < kw; ++u) {
          const int sx = x + ox - u;
          if (sx < 0 || sx >= w) continue;
          acc += kernel[static_cast<std::size_t>(v) * kw + u] *
                 src[static_cast<std::size_t>(sy) * w + sx];
        }
      }
      out[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  return out;
}

struct Planes {
  int width = 0;
  int height = 0;
  std::vector<double> y, i, q;
};

Planes yiq_planes(const ImageRGB& image) {
  Planes p;
  p.width = image.width();
  p.height = image.height();
  const std::size_t n = image.pixel_count();
  p.y.resize(n);
  p.i.resize(n);
  p.q.resize(n);
  const auto d = image.data();
  for (std::size_t k = 0; k < n; ++k) {
    const double r = 255.0 * d[3 * k];
    const double g = 255.0 * d[3 * k + 1];
    const double b = 255.0 * d[3 * k + 2];
    p.y[k] = 0.299 * r + 0.587 * g + 0.114 * b;
    p.i[k] = 0.596 * r - 0.274 * g - 0.322 * b;
    p.q[k] = 0.211 * r - 0.523 * g + 0.312 * b;
  }
  return p;
}

std::vector<double> decimate(const std::vector<double>& plane, int w, int h,
                             int factor, int* ow, int* oh) {
  const std::vector<double> box(static_cast<std::size_t>(factor) * factor,
                                1.0 / (factor * factor));
  const auto smoothed = convolve_same(plane, w, h, box, factor, factor);
  *ow = (w + factor - 1) / factor;
  *oh = (h + factor - 1) / factor;
  std::vector<double> out(static_cast<std::size_t>(*ow) * *oh);
  for (int y = 0; y < *oh; ++y) {
    for (int x = 0; x < *ow; ++x) {
      out[static_cast<std::size_t>(y) * *ow + x] =
          smoothed[static_cast<std::size_t>(y * factor) * w + x * factor];
    }
  }
  return out;
}

Planes downsample(const Planes& p, int factor) {
  if (factor <= 1) return p;
  Planes out;
  out.y = decimate(p.y, p.width, p.height, factor, &out.width, &out.height);
  out.i = decimate(p.i, p.width, p.height, factor, &out.width, &out.height);
  out.q = decimate(p.q, p.width, p.height, factor, &out.width, &out.height);
  return out;
}

std::vector<double> gradient_magnitude(const std::vector<double>& plane, int w,
                                       int h) {
  static const std::vector<double> kDx = {3.0 / 16,  0, -3.0 / 16,
                                          10.0 / 16, 0, -10.0 / 16,
                                          3.0 / 16,  0, -3.0 / 16};
  static const std::vector<double> kDy = {3.0 / 16,  10.0 / 16,  3.0 / 16,
                                          0,         0,          0,
                                          -3.0 / 16, -10.0 / 16, -3.0 / 16};
  const auto gx = convolve_same(plane, w, h, kDx, 3, 3);
  const auto gy = convolve_same(plane, w, h, kDy, 3, 3);
  std::vector<double> out(plane.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::sqrt(gx[k] * gx[k] + gy[k] * gy[k]);
  }
  return out;
}

void require_fsim_size(int w, int h) {
  if (w < 32 || h < 32) {
    throw InvalidArgument("FSIM needs at least 32x32 pixels, got " +
                          std::to_string(w) + "x" + std::to_string(h));
  }
}

}  // namespace

void FsimConfig::validate() const {
  if (scales < 1 || orientations < 1) {
    throw InvalidArgument("FSIM filter bank needs at least one scale and orientation");
  }
  if (!(min_wavelength > 0.0) || !(mult > 0.0) || !(sigma_onf > 0.0 && sigma_onf < 1.0) ||
      !(d_theta_on_sigma > 0.0)) {
    throw InvalidArgument("invalid FSIM filter bank parameters");
  }
}

std::vector<double> phase_congruency(const std::vector<double>& plane, int width,
                                     int height, const FsimConfig& cfg) {
  cfg.validate();
  if (plane.size() != static_cast<std::size_t>(width) * height || width < 1 ||
      height < 1) {
    throw InvalidArgument("phase congruency plane size mismatch");
  }
  Fft2d fft(height, width);
  const FilterBank bank = make_filter_bank(height, width, cfg, fft);
  return phase_congruency_with(plane, bank, cfg, fft);
}

FsimScores fsim(const ImageRGB& test, const ImageRGB& ref, const FsimConfig& cfg) {
  require_same_shape(test, ref, "fsim");
  require_fsim_size(test.width(), test.height());
  cfg.validate();

  const int min_dim = std::min(test.width(), test.height());
  const int factor = std::max(1, static_cast<int>(std::lround(min_dim / 256.0)));
  const Planes a = downsample(yiq_planes(ref), factor);
  const Planes b = downsample(yiq_planes(test), factor);
  const int w = a.width;
  const int h = a.height;

  Fft2d fft(h, w);
  const FilterBank bank = make_filter_bank(h, w, cfg, fft);
  const auto pc1 = phase_congruency_with(a.y, bank, cfg, fft);
  const auto pc2 = phase_congruency_with(b.y, bank, cfg, fft);
  const auto g1 = gradient_magnitude(a.y, w, h);
  const auto g2 = gradient_magnitude(b.y, w, h);

  double weight = 0.0;
  double sum_l = 0.0;
  double sum_c = 0.0;
  double plain_l = 0.0;
  double plain_c = 0.0;
  const double chroma_phase = std::cos(cfg.lambda * std::numbers::pi);
  for (std::size_t k = 0; k < pc1.size(); ++k) {
    const double pc_sim = (2.0 * pc1[k] * pc2[k] + cfg.t1) /
                          (pc1[k] * pc1[k] + pc2[k] * pc2[k] + cfg.t1);
    const double g_sim = (2.0 * g1[k] * g2[k] + cfg.t2) /
                         (g1[k] * g1[k] + g2[k] * g2[k] + cfg.t2);
    const double i_sim = (2.0 * a.i[k] * b.i[k] + cfg.t3) /
                         (a.i[k] * a.i[k] + b.i[k] * b.i[k] + cfg.t3);
    const double q_sim = (2.0 * a.q[k] * b.q[k] + cfg.t4) /
                         (a.q[k] * a.q[k] + b.q[k] * b.q[k] + cfg.t4);
    // real((I * Q)^lambda) for a possibly negative base.
    const double iq = i_sim * q_sim;
    const double chroma = iq >= 0.0 ? std::pow(iq, cfg.lambda)
                                    : std::pow(-iq, cfg.lambda) * chroma_phase;
    const double pcm = std::max(pc1[k], pc2[k]);
    const double local = g_sim * pc_sim;
    weight += pcm;
    sum_l += local * pcm;
    sum_c += local * chroma * pcm;
    plain_l += local;
    plain_c += local * chroma;
  }
  if (weight > 0.0) return {sum_l / weight, sum_c / weight};
  // No phase-congruent structure anywhere (flat images): unweighted mean.
  const double n = static_cast<double>(pc1.size());
  return {plain_l / n, plain_c / n};
}

}  // namespace dustbench
